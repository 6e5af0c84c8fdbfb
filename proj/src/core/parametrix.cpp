#include "core/parametrix.hpp"

#include <cmath>
#include <stdexcept>

namespace edtn {

namespace {

RVec apply_real(const CMat& m, const RVec& v) {
    RVec w(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        double s = 0;
        for (int j = 0; j < m.dim(); ++j) s += m(i, j).real() * v[j];
        w[i] = s;
    }
    return w;
}

// Smooth cutoff: 1 on |t| <= 1, 0 on |t| >= 2.
double smooth_window(double t) {
    const double a = std::abs(t);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    auto bump = [](double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; };
    const double x = a - 1.0;
    return bump(1.0 - x) / (bump(1.0 - x) + bump(x));
}

}  // namespace

CVec phase_gradient(const FramePoint& pt, const EikonalSolution& phase, double kappa, double x1) {
    const double om = 1.0 - kappa * x1;
    if (!(om > 0)) throw std::domain_error("phase_gradient: outside the collar");
    const cd dn = phase.dphase(x1);
    CVec g(pt.d);
    for (int i = 0; i < pt.d; ++i)
        g[i] = dn * pt.nu[i] + (pt.xi[0] / om) * pt.tangents[0][i];
    return g;
}

AmplitudePair amplitudes_at(const SymbolInput& in, const EikonalSolution& phase_s,
                            const EikonalSolution& phase_p, double kappa, double x1) {
    const int d = in.pt.d;
    const CMat Lam = lambda_frame(in.pt.nu);
    const RVec zeta = apply_real(Lam, in.pt.beta0());
    const cd rs = phase_s.rho(), rp = phase_p.rho();

    AmplitudePair amp;
    amp.T = transpose(Lam) * t_matrix(d, rs, rp, zeta) * Lam;

    const CVec gs = phase_gradient(in.pt, phase_s, kappa, x1);
    const CVec gp = phase_gradient(in.pt, phase_p, kappa, x1);
    amp.A_s = transpose(u_matrix(Lam, gs)) * pi_s(in.pt.nu) * amp.T;
    amp.A_p = transpose(u_matrix(Lam, gp)) * pi_p(in.pt.nu) * amp.T;
    return amp;
}

DnReduction boundary_dn_reduction(const SymbolInput& in, Orientation orient) {
    const int d = in.pt.d;
    const double r0 = in.pt.r0();
    const cd rs = rho(in.params, in.med, r0, Branch::S);
    const cd rp = rho(in.params, in.med, r0, Branch::P);

    const CMat Lam = lambda_frame(in.pt.nu);
    const RVec zeta = apply_real(Lam, in.pt.beta0());
    const CMat T_amb = transpose(Lam) * t_matrix(d, rs, rp, zeta) * Lam;
    const CMat Pp = pi_p(in.pt.nu);
    const CMat Ps = pi_s(in.pt.nu);

    const CVec beta0 = in.pt.beta0().complex();
    const CVec nu = in.pt.nu.complex();

    // Boundary values of the phase gradients: rho nu + beta0.
    CVec gs0 = beta0, gp0 = beta0;
    for (int i = 0; i < d; ++i) {
        gs0[i] += rs * nu[i];
        gp0[i] += rp * nu[i];
    }
    const CMat A_s0 = transpose(u_matrix(Lam, gs0)) * Ps * T_amb;
    const CMat A_p0 = transpose(u_matrix(Lam, gp0)) * Pp * T_amb;

    // Zeroth order of the traction applied to the two-phase ansatz:
    //   lambda <g, a> nu + mu <nu, a> g + mu <nu, g> a
    // summed over branches, with a_s0 + a_p0 = f.
    const cd la = in.med.lambda, mu = in.med.mu;
    const CMat rhoA = rs * A_s0 + rp * A_p0;

    DnReduction red;
    red.m_check = la * outer(beta0, nu) + mu * outer(nu, beta0) +
                  ((la + mu) * Pp + mu * CMat::identity(d)) * rhoA;

    // First order: amplitude rate on the tangent model chart, where the only
    // x1-linear term of the phase gradient is the tangential rate of rho.
    const cd drs = drho_ds(in.params, in.med, r0, in.dr0_ds, Branch::S);
    const cd drp = drho_ds(in.params, in.med, r0, in.dr0_ds, Branch::P);
    CVec vs(d), vp(d);
    for (int i = 0; i < d; ++i) {
        vs[i] = drs * in.pt.tangents[0][i];
        vp[i] = drp * in.pt.tangents[0][i];
    }
    const CMat A_s1 = transpose(u_matrix(Lam, vs)) * Ps * T_amb;
    const CMat A_p1 = transpose(u_matrix(Lam, vp)) * Pp * T_amb;
    const cd minus_i(0.0, -1.0);
    red.q_check = minus_i * ((cd(in.med.cs()) * Ps + cd(in.med.cp()) * Pp) * (A_s1 + A_p1));

    if (orient == Orientation::Outward) {
        red.m_check = to_outward_ambient(red.m_check);
        red.q_check = to_outward_ambient(red.q_check);
    }
    return red;
}

DiskParametrix::DiskParametrix(const SemiclassicalParams& params, const ElasticMedium& medium,
                               const CurveChart& chart, FourierBoundaryData data,
                               ParametrixOptions opt)
    : params_(params), medium_(medium), chart_(chart), data_(std::move(data)), opt_(opt) {
    if (data_.components() != 2) throw std::invalid_argument("DiskParametrix: need 2 components");
    if (!medium_.is_constant())
        throw std::invalid_argument("DiskParametrix: constant media only");

    const double L = data_.length();
    const double kappa = chart_.curvature(0.0);
    const auto med = medium_.at(0.0);

    for (int n = -data_.nmax(); n <= data_.nmax(); ++n) {
        ModeData m;
        m.n = n;
        const double xi = 2.0 * M_PI * params_.h * n / L;
        const double r0 = xi * xi;

        EikonalProblem base;
        base.params = params_;
        base.kappa = kappa;
        base.r0 = r0;
        base.n_jet = medium_.n_jet(0.0, opt_.taylor_order);

        EikonalProblem ps = base, pp = base;
        ps.c_jet = medium_.cs_jet(0.0, opt_.taylor_order);
        pp.c_jet = medium_.cp_jet(0.0, opt_.taylor_order);
        m.phase_s = solve_eikonal(ps, opt_.taylor_order);
        m.phase_p = solve_eikonal(pp, opt_.taylor_order);

        const double rs3 = std::pow(std::abs(m.phase_s.rho()), 3.0);
        const double rp3 = std::pow(std::abs(m.phase_p.rho()), 3.0);
        const double weight = std::pow(japanese_bracket(xi), opt_.epsilon);
        // depth up to which the window is fully active for this mode
        m.window_end = opt_.delta * std::min({1.0 / weight, rs3, rp3});

        // the frame variable is s-independent on a circle: zeta = -xi e2
        SymbolInput in;
        in.params = params_;
        in.med = med;
        in.pt = frame_point_on_curve(chart_, 0.0, xi);
        const CMat Lam = lambda_frame(in.pt.nu);
        const RVec zeta = apply_real(Lam, in.pt.beta0());
        m.T_frame = t_matrix(2, m.phase_s.rho(), m.phase_p.rho(), zeta);
        modes_.push_back(std::move(m));
    }
}

double DiskParametrix::collar_limit() const {
    double lim = std::numeric_limits<double>::infinity();
    for (const auto& m : modes_) lim = std::min(lim, m.window_end);
    return lim;
}

CVec DiskParametrix::evaluate(double x1, double s) const {
    const double L = data_.length();
    const double kappa = chart_.curvature(s);
    CVec out(2);

    for (const auto& m : modes_) {
        const double xi = 2.0 * M_PI * params_.h * m.n / L;
        FramePoint pt = frame_point_on_curve(chart_, s, xi);
        const CMat Lam = lambda_frame(pt.nu);

        // window
        const double weight = std::pow(japanese_bracket(xi), opt_.epsilon);
        const double rs3 = std::pow(std::abs(m.phase_s.rho()), 3.0);
        const double rp3 = std::pow(std::abs(m.phase_p.rho()), 3.0);
        const double psi = smooth_window(x1 * weight / opt_.delta) *
                           smooth_window(x1 / (rs3 * opt_.delta)) *
                           smooth_window(x1 / (rp3 * opt_.delta));
        if (psi == 0.0) continue;

        const cd es = std::exp(cd(0.0, 1.0) * m.phase_s.phase(x1) / params_.h);
        const cd ep = std::exp(cd(0.0, 1.0) * m.phase_p.phase(x1) / params_.h);

        const CMat T_amb = transpose(Lam) * m.T_frame * Lam;
        const CVec gs = phase_gradient(pt, m.phase_s, kappa, x1);
        const CVec gp = phase_gradient(pt, m.phase_p, kappa, x1);
        const CMat A_s = transpose(u_matrix(Lam, gs)) * pi_s(pt.nu) * T_amb;
        const CMat A_p = transpose(u_matrix(Lam, gp)) * pi_p(pt.nu) * T_amb;

        const CVec fn = data_.coeff(m.n);
        CVec v = (es * psi) * (A_s * fn) + (ep * psi) * (A_p * fn);
        const cd e = std::exp(cd(0.0, 2.0 * M_PI * m.n * s / L));
        for (int i = 0; i < 2; ++i) out[i] += v[i] * e;
    }
    return out * cd(1.0 / std::sqrt(L));
}

double DiskParametrix::trace_error(int grid_points) const {
    double num = 0, den = 0;
    for (int j = 0; j < grid_points; ++j) {
        const double s = data_.length() * j / grid_points;
        const CVec diff = evaluate(0.0, s) - data_.synthesize(s);
        num += abs2(diff);
        den += abs2(data_.synthesize(s));
    }
    return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

CVec DiskParametrix::evaluate_ambient(const RVec& x) const {
    // Disk collar coordinates: x1 = R - |x|, s = R * atan2.
    const double R = chart_.length / (2.0 * M_PI);
    const double r = std::hypot(x[0], x[1]);
    const double x1 = R - r;
    double s = R * std::atan2(x[1], x[0]);
    if (s < 0) s += chart_.length;
    return evaluate(x1, s);
}

double DiskParametrix::pde_residual(double x1, double s, double fd_step) const {
    const auto med = medium_.at(0.0);
    const double la = med.lambda, mu = med.mu;
    const double h = params_.h, dlt = fd_step;

    const RVec x0 = chart_.collar_point(x1, s);
    auto at = [&](double dx, double dy) {
        RVec x = x0;
        x[0] += dx;
        x[1] += dy;
        return evaluate_ambient(x);
    };

    const CVec c = at(0, 0);
    const CVec xp = at(dlt, 0), xm = at(-dlt, 0);
    const CVec yp = at(0, dlt), ym = at(0, -dlt);
    const CVec pp = at(dlt, dlt), pm = at(dlt, -dlt), mp = at(-dlt, dlt), mm = at(-dlt, -dlt);

    const double inv2 = 1.0 / (dlt * dlt);
    CVec uxx = (xp + xm - 2.0 * c) * cd(inv2);
    CVec uyy = (yp + ym - 2.0 * c) * cd(inv2);
    CVec uxy = (pp - pm - mp + mm) * cd(1.0 / (4.0 * dlt * dlt));

    // mu Laplace u + (lambda + mu) grad div u + z^2 n u, times h^2 on the
    // derivative part.
    CVec res(2);
    res[0] = mu * (uxx[0] + uyy[0]) + (la + mu) * (uxx[0] + uxy[1]);
    res[1] = mu * (uxx[1] + uyy[1]) + (la + mu) * (uxy[0] + uyy[1]);
    const cd z2n = params_.z2() * med.n;
    for (int i = 0; i < 2; ++i) res[i] = h * h * res[i] + z2n * c[i];
    return norm_max(res);
}

}  // namespace edtn
