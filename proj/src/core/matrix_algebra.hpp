#pragma once

// The skew-shifted matrix family U_0, its determinant and closed-form
// inverses, the tangential rotation charts Theta, and the boundary frame
// Lambda. These are the algebraic kernels behind the DN symbol; generic
// elimination is kept out of this module and lives in the tests as the
// independent oracle.

#include "core/types.hpp"

namespace edtn {

// U_0(xi) = xi_1 I + sum_{j>=2} xi_j (e_j (x) e_1 - e_1 (x) e_j).
// First row carries (xi_1, xi_2, ..., xi_d), first column (xi_1, -xi_2, ...).
// Satisfies U_0(xi) xi = xi^2 e_1.
CMat u0_matrix(const CVec& xi);

// Z_0(xi) = U_0 U_0^t; commutes with e_1 (x) e_1.
CMat z0_matrix(const CVec& xi);

// M_d(xi, eta1) = U_0(xi) + eta1 e_1 (x) e_1.
CMat m_matrix(const CVec& xi, cd eta1);

// det M_d = (xi^2 + xi_1 eta1) xi_1^{d-2}, closed form.
cd det_m(const CVec& xi, cd eta1);

// Closed-form inverse of M_d.
//   d = 2: (xi^2 + xi_1 eta1)^{-1} [[xi_1, -xi_2], [xi_2, xi_1+eta1]].
//   d >= 3: rotate the tangential part onto e_2 with Theta, invert the
//   embedded 2x2 block plus the xi_1^{-1} diagonal tail, rotate back.
// Requires xi^2 + xi_1 eta1 != 0; for d >= 3 additionally xi_1 != 0 and
// real tangential components xi_2..xi_d (hypotheses of the closed form).
CMat invert_m(const CVec& xi, cd eta1);

// Orthogonal chart Theta(xi') on R^d, xi' in R^{d-1} nonzero:
//   Theta e_1 = e_1,  Theta (0,xi') = |xi'| e_2,  Theta^t = Theta^{-1},
// homogeneous of degree zero. d = 2 returns the identity; d = 3 is the
// global in-plane rotation; d >= 4 uses a Householder reflection with a
// sign-fixing factor (per chart; pointwise evaluation only).
CMat theta_chart(const RVec& xi_prime);

// V(w) for unit w in R^{d-2+1 = d-1}: orthogonal, V w = e_1, V^t = V^{-1}.
// Householder-based; exposed for the chart atlas tests.
CMat householder_to_e1(const RVec& w);

// Boundary frame Lambda(x'): orthogonal with Lambda nu = e_1. For d = 2 the
// proper rotation [[nu1, nu2], [-nu2, nu1]] (global on an oriented curve);
// for d >= 3 a per-chart Householder-based frame.
CMat lambda_frame(const RVec& nu);

// U(xi) relative to a frame: Lambda^{-1} U_0(Lambda xi) Lambda.
CMat u_matrix(const CMat& lambda, const CVec& xi);

// Projectors Pi_p(nu) = nu (x) nu and Pi_s(nu) = I - nu (x) nu for a real
// unit normal.
CMat pi_p(const RVec& nu);
CMat pi_s(const RVec& nu);

}  // namespace edtn
