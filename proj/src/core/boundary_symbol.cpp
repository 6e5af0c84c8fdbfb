#include "core/boundary_symbol.hpp"

#include <cmath>
#include <stdexcept>

namespace edtn {

namespace {

// Apply a real orthogonal matrix (stored complex) to a real vector.
RVec apply_real(const CMat& m, const RVec& v) {
    RVec w(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        double s = 0;
        for (int j = 0; j < m.dim(); ++j) s += m(i, j).real() * v[j];
        w[i] = s;
    }
    return w;
}

// [[rho_s, t], [-t, rho_p]] / (r0 + rho_s rho_p), the 2x2 inverse block.
CMat t2_block(cd rho_s, cd rho_p, cd t) {
    const cd den = t * t + rho_s * rho_p;
    if (den == cd{}) throw std::domain_error("t_matrix: r0 + rho_s rho_p = 0");
    CMat m(2);
    m(0, 0) = rho_s / den;
    m(0, 1) = t / den;
    m(1, 0) = -t / den;
    m(1, 1) = rho_p / den;
    return m;
}

RVec zeta_tail(int d, const RVec& zeta) {
    RVec zp(d - 1);
    for (int j = 1; j < d; ++j) zp[j - 1] = zeta[j];
    return zp;
}

}  // namespace

cd rho_root(const SemiclassicalParams& params, double k, double r0) {
    if (!(params.theta > 0)) throw std::domain_error("rho_root: theta must be positive");
    return std::sqrt(-cd(r0) + params.z2() * k);
}

cd rho(const SemiclassicalParams& params, const MediumPoint& med, double r0, Branch branch) {
    return rho_root(params, branch == Branch::S ? med.ks() : med.kp(), r0);
}

CMat w0_matrix(int d, cd rho_s, cd rho_p, const RVec& zeta) {
    CVec arg(d);
    arg[0] = rho_s;
    for (int j = 1; j < d; ++j) arg[j] = zeta[j];
    CMat w = transpose(u0_matrix(arg));
    w(0, 0) += rho_p - rho_s;
    return w;
}

CMat t_matrix(int d, cd rho_s, cd rho_p, const RVec& zeta) {
    if (d == 2) return t2_block(rho_s, rho_p, cd(zeta[1]));

    const RVec zp = zeta_tail(d, zeta);
    const double np = norm2(zp);

    CMat inner(d);
    const CMat blk = t2_block(rho_s, rho_p, cd(np));
    inner(0, 0) = blk(0, 0);
    inner(0, 1) = blk(0, 1);
    inner(1, 0) = blk(1, 0);
    inner(1, 1) = blk(1, 1);
    for (int j = 2; j < d; ++j) inner(j, j) = 1.0 / rho_s;

    if (np == 0.0) return inner;
    const CMat th = theta_chart(zp);
    return transpose(th) * inner * th;
}

cd det_w0(int d, cd rho_s, cd rho_p, double r0) {
    cd pw = 1.0;
    for (int k = 0; k < d - 2; ++k) pw *= rho_s;
    return (r0 + rho_s * rho_p) * pw;
}

CMat m2_canonical(const SemiclassicalParams& params, const MediumPoint& med, double r0) {
    const cd rs = rho(params, med, r0, Branch::S);
    const cd rp = rho(params, med, r0, Branch::P);
    const cd den = r0 + rs * rp;
    const cd z2n = params.z2() * med.n;
    const double sq = std::sqrt(r0);

    CMat m(2);
    m(0, 0) = z2n * rs / den;
    m(1, 1) = z2n * rp / den;
    m(0, 1) = sq * (z2n / den - 2.0 * med.mu);
    m(1, 0) = -m(0, 1);
    return m;
}

CMat md_canonical(int d, const SemiclassicalParams& params, const MediumPoint& med, double r0) {
    const CMat m2 = m2_canonical(params, med, r0);
    CMat m(d);
    m(0, 0) = m2(0, 0);
    m(0, 1) = m2(0, 1);
    m(1, 0) = m2(1, 0);
    m(1, 1) = m2(1, 1);
    const cd rs = rho(params, med, r0, Branch::S);
    for (int j = 2; j < d; ++j) m(j, j) = med.mu * rs;
    return m;
}

CMat md0_traction_form(int d, const SemiclassicalParams& params, const MediumPoint& med,
                       const RVec& zeta) {
    double r0 = 0;
    for (int j = 1; j < d; ++j) r0 += zeta[j] * zeta[j];
    const cd rs = rho(params, med, r0, Branch::S);
    const cd rp = rho(params, med, r0, Branch::P);

    RVec e1dir(d);
    e1dir[0] = 1.0;
    const CMat Pp = pi_p(e1dir);
    const CMat Ps = pi_s(e1dir);
    const CVec e1 = CVec::unit(d, 0);
    const CVec zc = zeta.complex();

    const CMat T = t_matrix(d, rs, rp, zeta);
    const cd cs = med.cs(), cp = med.cp();

    CMat m = cd(med.lambda) * outer(zc, e1) + cd(med.mu) * outer(e1, zc);
    m += (cs * rs * rs * Ps + cp * rp * rp * Pp) * T;
    m += (cs * Ps + cp * Pp) * transpose(u0_matrix(zc)) * (rs * Ps + rp * Pp) * T;
    return m;
}

CMat to_outward_ambient(const CMat& inward) { return -inward; }

CMat to_outward_frame(const CMat& inward) {
    CMat s = CMat::identity(inward.dim());
    s(0, 0) = -1.0;
    return -(s * inward * s);
}

CMat frame_components(const FramePoint& pt, const CMat& ambient) {
    const int d = pt.d;
    CMat f(d);
    for (int j = 0; j < d; ++j) {
        f(0, j) = pt.nu[j];
        for (int i = 1; i < d; ++i) f(i, j) = pt.tangents[i - 1][j];
    }
    return f * ambient * transpose(f);
}

cd drho_ds(const SemiclassicalParams& params, const MediumPoint& med, double r0, double dr0_ds,
           Branch branch) {
    const cd r = rho(params, med, r0, branch);
    const double dk = branch == Branch::S ? med.dks() : med.dkp();
    return (-dr0_ds + params.z2() * dk) / (2.0 * r);
}

SymbolMatrices assemble_symbol(const SymbolInput& in, Orientation orient) {
    const int d = in.pt.d;
    if (d < 2 || d > 3) throw std::invalid_argument("assemble_symbol: d must be 2 or 3");

    SymbolMatrices out;
    out.r0 = in.pt.r0();
    out.rho_s = rho(in.params, in.med, out.r0, Branch::S);
    out.rho_p = rho(in.params, in.med, out.r0, Branch::P);
    out.Lambda = lambda_frame(in.pt.nu);

    const RVec zeta = apply_real(out.Lambda, in.pt.beta0());
    out.W0 = w0_matrix(d, out.rho_s, out.rho_p, zeta);
    out.T = t_matrix(d, out.rho_s, out.rho_p, zeta);
    out.M2 = m2_canonical(in.params, in.med, out.r0);
    out.Md = md_canonical(d, in.params, in.med, out.r0);

    // Frame-space conjugator taking the canonical block to the signed zeta.
    CMat jfr = CMat::identity(d);
    if (d == 2) {
        if (zeta[1] < 0) jfr(1, 1) = -1.0;
    } else {
        const RVec zp = zeta_tail(d, zeta);
        if (norm2(zp) == 0.0)
            throw std::domain_error("assemble_symbol: xi' = 0 leaves the chart undefined for d = 3");
        jfr = transpose(theta_chart(zp));
    }
    out.md_frame = jfr * out.Md * transpose(jfr);
    out.J = transpose(out.Lambda) * jfr;
    out.md = out.J * out.Md * transpose(out.J);
    out.q = q_correction(in, Orientation::Inward);

    if (orient == Orientation::Outward) {
        out.md = to_outward_ambient(out.md);
        out.q = to_outward_ambient(out.q);
        out.md_frame = to_outward_frame(out.md_frame);
    }
    return out;
}

CMat q_correction(const SymbolInput& in, Orientation orient) {
    const int d = in.pt.d;
    const double r0 = in.pt.r0();
    const cd dd = drho_ds(in.params, in.med, r0, in.dr0_ds, Branch::P) -
                  drho_ds(in.params, in.med, r0, in.dr0_ds, Branch::S);

    // v = (d/ds)(rho_p - rho_s) along the leading tangent. Only one
    // tangential derivative is carried; supported charts vary along a single
    // boundary coordinate.
    CVec v(d);
    for (int i = 0; i < d; ++i) v[i] = dd * in.pt.tangents[0][i];

    const CMat Lam = lambda_frame(in.pt.nu);
    const CMat Pp = pi_p(in.pt.nu);
    const CMat Ps = pi_s(in.pt.nu);
    const cd rs = rho(in.params, in.med, r0, Branch::S);
    const cd rp = rho(in.params, in.med, r0, Branch::P);

    const RVec zeta = apply_real(Lam, in.pt.beta0());
    const CMat T_amb = transpose(Lam) * t_matrix(d, rs, rp, zeta) * Lam;

    const CMat ut = transpose(u_matrix(Lam, v));
    const cd minus_i(0.0, -1.0);
    CMat q = minus_i * ((cd(in.med.cs()) * Ps + cd(in.med.cp()) * Pp) * ut * Pp * T_amb);

    if (orient == Orientation::Outward) q = to_outward_ambient(q);
    return q;
}

IdentityPointReport identity_point_checks(const SemiclassicalParams& params,
                                          const MediumPoint& med, double r0) {
    const cd rs = rho(params, med, r0, Branch::S);
    const cd rp = rho(params, med, r0, Branch::P);
    const double ks = med.ks(), kp = med.kp();
    const cd z2 = params.z2();

    IdentityPointReport rep;
    const cd lhs1 = r0 + rs * rp;
    const cd rhs1 = z2 * (kp * rs + ks * rp) / (rs + rp);
    rep.resid_product_split = std::abs(lhs1 - rhs1) / std::max(1.0, std::abs(lhs1));

    const cd lhs2 = (kp * rs - ks * rp) * (kp * rs + ks * rp);
    const cd rhs2 = (ks - kp) * ((ks + kp) * r0 - z2 * ks * kp);
    rep.resid_difference_factorization =
        std::abs(lhs2 - rhs2) / std::max({1.0, std::abs(lhs2), std::abs(rhs2)});

    rep.abs_denominator = std::abs(lhs1);
    return rep;
}

}  // namespace edtn
