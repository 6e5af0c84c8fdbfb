#include "core/matrix_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace edtn {

CMat u0_matrix(const CVec& xi) {
    const int d = xi.dim();
    if (d < 2) throw std::invalid_argument("u0_matrix: need dimension >= 2");
    CMat u(d);
    for (int i = 0; i < d; ++i) u(i, i) = xi[0];
    for (int j = 1; j < d; ++j) {
        u(0, j) = xi[j];
        u(j, 0) = -xi[j];
    }
    return u;
}

CMat z0_matrix(const CVec& xi) {
    const CMat u = u0_matrix(xi);
    return u * transpose(u);
}

CMat m_matrix(const CVec& xi, cd eta1) {
    CMat m = u0_matrix(xi);
    m(0, 0) += eta1;
    return m;
}

cd det_m(const CVec& xi, cd eta1) {
    const int d = xi.dim();
    cd pow = 1.0;
    for (int k = 0; k < d - 2; ++k) pow *= xi[0];
    return (square(xi) + xi[0] * eta1) * pow;
}

namespace {

// Inverse of the 2x2 block [[xi1+eta1, t],[-t, xi1]].
CMat m2_inverse_block(cd xi1, cd t, cd eta1) {
    const cd den = xi1 * xi1 + t * t + xi1 * eta1;
    if (den == cd{}) throw std::domain_error("invert_m: singular configuration");
    CMat inv(2);
    inv(0, 0) = xi1 / den;
    inv(0, 1) = -t / den;
    inv(1, 0) = t / den;
    inv(1, 1) = (xi1 + eta1) / den;
    return inv;
}

}  // namespace

CMat invert_m(const CVec& xi, cd eta1) {
    const int d = xi.dim();
    if (square(xi) + xi[0] * eta1 == cd{})
        throw std::domain_error("invert_m: xi^2 + xi_1 eta_1 = 0");
    if (d == 2) return m2_inverse_block(xi[0], xi[1], eta1);

    if (xi[0] == cd{}) throw std::domain_error("invert_m: xi_1 = 0 with d >= 3");
    RVec xp(d - 1);
    for (int j = 1; j < d; ++j) {
        if (xi[j].imag() != 0.0)
            throw std::domain_error("invert_m: tangential components must be real for d >= 3");
        xp[j - 1] = xi[j].real();
    }
    double np = norm2(xp);

    // Embedded 2x2 inverse at (xi_1, |xi'|) plus the xi_1^{-1} tail.
    CMat inner(d);
    const CMat blk = m2_inverse_block(xi[0], cd(np), eta1);
    inner(0, 0) = blk(0, 0);
    inner(0, 1) = blk(0, 1);
    inner(1, 0) = blk(1, 0);
    inner(1, 1) = blk(1, 1);
    for (int j = 2; j < d; ++j) inner(j, j) = 1.0 / xi[0];

    if (np == 0.0) return inner;  // already in canonical position
    const CMat th = theta_chart(xp);
    // M_d(xi) = Theta^t M_d(canonical) Theta, hence the inverse conjugates
    // with Theta^t on the left.
    return transpose(th) * inner * th;
}

CMat householder_to_e1(const RVec& w) {
    const int m = w.dim();
    if (m < 1) throw std::invalid_argument("householder_to_e1: empty vector");
    const double nw = norm2(w);
    if (nw == 0.0) throw std::domain_error("householder_to_e1: zero vector");

    RVec wh = (1.0 / nw) * w;
    // Reflect onto -e1 or +e1, whichever is numerically safe, then fix the
    // sign with diag(-1,1,...,1) if needed so V w = +e1 exactly.
    const bool flip = wh[0] >= 0.0;
    RVec u = wh;
    u[0] += flip ? 1.0 : -1.0;
    const double uu = dot(u, u);

    CMat v(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) v(i, j) = ((i == j) ? 1.0 : 0.0) - 2.0 * u[i] * u[j] / uu;
    }
    if (flip)
        for (int j = 0; j < m; ++j) v(0, j) = -v(0, j);
    return v;
}

CMat theta_chart(const RVec& xi_prime) {
    const int m = xi_prime.dim();
    const int d = m + 1;
    if (d < 2 || d > kMaxDim) throw std::invalid_argument("theta_chart: bad dimension");
    if (d == 2) return CMat::identity(2);

    const double np = norm2(xi_prime);
    if (np == 0.0) throw std::domain_error("theta_chart: xi' = 0");

    CMat th = CMat::identity(d);
    if (d == 3) {
        const double c = xi_prime[0] / np, s = xi_prime[1] / np;
        th(1, 1) = c;
        th(1, 2) = s;
        th(2, 1) = -s;
        th(2, 2) = c;
        return th;
    }
    const CMat v = householder_to_e1((1.0 / np) * xi_prime);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) th(i + 1, j + 1) = v(i, j);
    return th;
}

CMat lambda_frame(const RVec& nu) {
    const int d = nu.dim();
    if (d < 2) throw std::invalid_argument("lambda_frame: need dimension >= 2");
    const double nn = norm2(nu);
    if (std::abs(nn - 1.0) > 1e-12) throw std::invalid_argument("lambda_frame: nu must be unit");

    if (d == 2) {
        CMat r(2);
        r(0, 0) = nu[0];
        r(0, 1) = nu[1];
        r(1, 0) = -nu[1];
        r(1, 1) = nu[0];
        return r;
    }
    return householder_to_e1(nu);
}

CMat u_matrix(const CMat& lambda, const CVec& xi) {
    const CVec lxi = lambda * xi;
    return transpose(lambda) * u0_matrix(lxi) * lambda;
}

CMat pi_p(const RVec& nu) {
    const CVec n = nu.complex();
    return outer(n, n);
}

CMat pi_s(const RVec& nu) { return CMat::identity(nu.dim()) - pi_p(nu); }

}  // namespace edtn
