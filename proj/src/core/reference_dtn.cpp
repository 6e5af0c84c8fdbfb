#include "core/reference_dtn.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace edtn {

namespace {

struct PencilSolution {
    std::vector<cd> roots;                // decaying xi_1 values, Im > 0
    Eigen::MatrixXcd displacement;       // columns: polarization vectors
};

// Decaying solutions of (P(xi_1 e_1 + xi') - z^2 n) v = 0 via companion
// linearization of the quadratic pencil xi_1^2 Q0 + xi_1 Q1 + (Q2 - z^2 n).
PencilSolution solve_pencil(const SemiclassicalParams& params, const MediumPoint& med, int d,
                            const std::vector<double>& xi_prime) {
    if (static_cast<int>(xi_prime.size()) != d - 1)
        throw std::invalid_argument("halfspace_dn: xi' must have d-1 components");
    if (!(params.theta > 0)) throw std::domain_error("halfspace_dn: theta must be positive");

    const double lam = med.lambda, mu = med.mu;
    double r0 = 0;
    for (double x : xi_prime) r0 += x * x;

    Eigen::MatrixXcd Q0 = Eigen::MatrixXcd::Zero(d, d);
    Q0(0, 0) = lam + 2 * mu;
    for (int i = 1; i < d; ++i) Q0(i, i) = mu;

    Eigen::VectorXcd xt = Eigen::VectorXcd::Zero(d);
    for (int k = 1; k < d; ++k) xt(k) = xi_prime[k - 1];

    Eigen::MatrixXcd Q1 = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 1; k < d; ++k) {
        Q1(0, k) = (lam + mu) * xt(k);
        Q1(k, 0) = (lam + mu) * xt(k);
    }

    Eigen::MatrixXcd Q2 = mu * r0 * Eigen::MatrixXcd::Identity(d, d);
    Q2 += (lam + mu) * (xt * xt.transpose());
    Q2 -= params.z2() * med.n * Eigen::MatrixXcd::Identity(d, d);

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    const Eigen::MatrixXcd q0inv = Q0.inverse();
    comp.topLeftCorner(d, d) = -q0inv * Q1;
    comp.topRightCorner(d, d) = -q0inv * Q2;
    comp.bottomLeftCorner(d, d) = Eigen::MatrixXcd::Identity(d, d);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("halfspace_dn: eigensolver failed");

    PencilSolution sol;
    sol.displacement.resize(d, d);
    int found = 0;
    for (int j = 0; j < 2 * d && found < d; ++j) {
        const cd x1 = es.eigenvalues()(j);
        if (x1.imag() <= 0) continue;
        sol.roots.push_back(x1);
        sol.displacement.col(found) = es.eigenvectors().col(j).tail(d);
        ++found;
    }
    if (found != d) throw std::runtime_error("halfspace_dn: wrong decaying-solution count");
    return sol;
}

}  // namespace

std::vector<cd> halfspace_decaying_roots(const SemiclassicalParams& params,
                                         const MediumPoint& med, int d,
                                         const std::vector<double>& xi_prime) {
    return solve_pencil(params, med, d, xi_prime).roots;
}

CMat halfspace_dn(const SemiclassicalParams& params, const MediumPoint& med, int d,
                  const std::vector<double>& xi_prime, Orientation orient) {
    const PencilSolution sol = solve_pencil(params, med, d, xi_prime);
    const double lam = med.lambda, mu = med.mu;

    // -ih B(u) for u = v e^{i<x,xi>/h}:
    //   lambda <xi,v> nu + mu <nu,v> xi + mu xi_1 v,  nu = e_1 (bilinear <,>).
    Eigen::MatrixXcd traction(d, d);
    for (int j = 0; j < d; ++j) {
        Eigen::VectorXcd xi = Eigen::VectorXcd::Zero(d);
        xi(0) = sol.roots[j];
        for (int k = 1; k < d; ++k) xi(k) = xi_prime[k - 1];
        const Eigen::VectorXcd v = sol.displacement.col(j);

        const cd xi_dot_v = (xi.transpose() * v)(0);  // bilinear, no conjugation
        Eigen::VectorXcd t = Eigen::VectorXcd::Zero(d);
        t(0) += lam * xi_dot_v;
        t += mu * v(0) * xi;
        t += mu * sol.roots[j] * v;
        traction.col(j) = t;
    }

    const Eigen::MatrixXcd dn = traction * sol.displacement.inverse();
    CMat out(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(i, j) = dn(i, j);
    if (orient == Orientation::Outward) out = to_outward_ambient(out);
    return out;
}

BesselLogDerivative bessel_log_derivative(long n, cd w) {
    if (n < 0) throw std::invalid_argument("bessel_log_derivative: order must be >= 0");
    if (w == cd{}) throw std::invalid_argument("bessel_log_derivative: w = 0");

    // Modified Lentz for J_{n+1}/J_n = 1/(b1 - 1/(b2 - ...)), b_k = 2(n+k)/w.
    const double tiny = 1e-290;
    const double eps = 1e-14;
    const int cap = 10000;

    cd f(tiny), C(tiny), D(0.0);
    int k = 1;
    double last_increment = 1.0;
    for (; k <= cap; ++k) {
        const cd a = (k == 1) ? cd(1.0) : cd(-1.0);
        const cd b = 2.0 * static_cast<double>(n + k) / w;
        D = b + a * D;
        if (D == cd{}) D = tiny;
        C = b + a / C;
        if (C == cd{}) C = tiny;
        D = 1.0 / D;
        const cd delta = C * D;
        f *= delta;
        last_increment = std::abs(delta - 1.0);
        if (last_increment < eps) break;
    }
    if (k > cap) {
        std::ostringstream os;
        os << "bessel_log_derivative: continued fraction did not converge (last increment "
           << last_increment << ")";
        throw std::runtime_error(os.str());
    }
    return {static_cast<double>(n) / w - f, k};
}

DiskDnMode disk_dn_mode(const SemiclassicalParams& params, const MediumPoint& med, double radius,
                        long n, Orientation orient) {
    if (!(radius > 0)) throw std::invalid_argument("disk_dn_mode: radius must be positive");
    if (!(params.theta > 0)) throw std::domain_error("disk_dn_mode: theta must be positive");

    const double R = radius, mu = med.mu;
    const cd tau = params.tau;
    const cd tau2n = tau * tau * med.n;
    const cd kappa_p = params.z * std::sqrt(med.kp()) / params.h;
    const cd kappa_s = params.z * std::sqrt(med.ks()) / params.h;

    const long na = std::labs(n);
    const cd Lp = bessel_log_derivative(na, kappa_p * R).value;
    const cd Ls = bessel_log_derivative(na, kappa_s * R).value;

    const cd in_over_R = cd(0.0, static_cast<double>(n)) / R;
    const double n2 = static_cast<double>(n) * static_cast<double>(n);

    // Each potential column is scaled by 1/J_n at its own argument, so all
    // entries reduce to log-derivatives. Column scaling cancels in T D^{-1}.
    // Displacement components (u_r, u_phi), stress components at r = R.
    const cd ur_p = kappa_p * Lp;
    const cd uf_p = in_over_R;
    const cd srr_p = -tau2n - 2.0 * mu * kappa_p * Lp / R + 2.0 * mu * n2 / (R * R);
    const cd srf_p = 2.0 * mu * in_over_R * (kappa_p * Lp - 1.0 / R);

    const cd ur_s = in_over_R;
    const cd uf_s = -kappa_s * Ls;
    const cd srr_s = 2.0 * mu * in_over_R * (kappa_s * Ls - 1.0 / R);
    const cd srf_s = tau2n + 2.0 * mu * kappa_s * Ls / R - 2.0 * mu * n2 / (R * R);

    // Frame components with inward normal nu = -r^: displacement (-u_r, u_phi),
    // traction (sigma . nu) components (sigma_rr, -sigma_rphi), times -ih.
    CMat disp(2), trac(2);
    disp(0, 0) = -ur_p;
    disp(0, 1) = -ur_s;
    disp(1, 0) = uf_p;
    disp(1, 1) = uf_s;
    const cd mih(0.0, -params.h);
    trac(0, 0) = mih * srr_p;
    trac(0, 1) = mih * srr_s;
    trac(1, 0) = -mih * srf_p;
    trac(1, 1) = -mih * srf_s;

    DiskDnMode out;
    const cd det = disp(0, 0) * disp(1, 1) - disp(0, 1) * disp(1, 0);
    if (det == cd{}) throw std::runtime_error("disk_dn_mode: singular displacement basis");
    CMat dinv(2);
    dinv(0, 0) = disp(1, 1) / det;
    dinv(0, 1) = -disp(0, 1) / det;
    dinv(1, 0) = -disp(1, 0) / det;
    dinv(1, 1) = disp(0, 0) / det;
    out.matrix = trac * dinv;

    const double nd = norm_max(disp), ni = norm_max(dinv);
    out.condition = nd * ni * 2.0;

    if (orient == Orientation::Outward) out.matrix = to_outward_frame(out.matrix);
    return out;
}

}  // namespace edtn
