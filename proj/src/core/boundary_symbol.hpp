#pragma once

// The DN principal symbol: normal roots rho_s/rho_p, the boundary matrix W0
// with its closed-form inverse T, the canonical symbol blocks M2/M_d, the
// chart-assembled symbol m_d, and the first-order correction q.
//
// Sign conventions. The quantizer pairs the symbol value at xi' with the
// spatial mode e^{+i<x',xi'>/h} (left quantization). With that pairing the
// boundary phase gradients are rho*nu + beta0 and the frame variable is
// zeta = Lambda beta0. The normal nu points into the domain by default;
// Orientation::Outward reports the same objects in the outward-traction
// convention (ambient matrices negate, frame matrices conjugate-negate).

#include "core/geometry.hpp"
#include "core/matrix_algebra.hpp"
#include "core/semiclassical.hpp"
#include "core/types.hpp"

namespace edtn {

enum class Branch { S, P };
enum class Orientation { Inward, Outward };

// Principal square root of -r0 + z^2 k. For theta > 0 the argument has
// strictly positive imaginary part (Im z^2 = 2 theta), so Re and Im of the
// root are both positive; no branch tracking is needed.
cd rho_root(const SemiclassicalParams& params, double k, double r0);

cd rho(const SemiclassicalParams& params, const MediumPoint& med, double r0, Branch branch);

// Frame-space boundary matrix
//   W0 = U_0^t(rho_s e_1 + zeta) + (rho_p - rho_s) e_1 (x) e_1,
// zeta real tangential (zeta[0] = 0, zeta^2 = r0).
CMat w0_matrix(int d, cd rho_s, cd rho_p, const RVec& zeta);

// Closed-form inverse T = W0^{-1}:
//   d = 2: (r0 + rho_s rho_p)^{-1} [[rho_s, zeta2], [-zeta2, rho_p]]
//   d >= 3: Theta^t(zeta') [T2-block(sqrt(r0)) + rho_s^{-1} tail] Theta(zeta').
CMat t_matrix(int d, cd rho_s, cd rho_p, const RVec& zeta);

// det W0 = (r0 + rho_s rho_p) rho_s^{d-2}, closed form.
cd det_w0(int d, cd rho_s, cd rho_p, double r0);

// Canonical 2x2 block of the principal symbol (zeta2 = +sqrt(r0)):
//   M11 = z^2 n rho_s / D, M22 = z^2 n rho_p / D,
//   M12 = -M21 = sqrt(r0) (z^2 n / D - 2 mu),  D = r0 + rho_s rho_p.
CMat m2_canonical(const SemiclassicalParams& params, const MediumPoint& med, double r0);

// M_d = embedded M2 plus mu rho_s on the remaining diagonal.
CMat md_canonical(int d, const SemiclassicalParams& params, const MediumPoint& med, double r0);

// Frame-space symbol evaluated directly from the traction algebra:
//   lambda zeta (x) e1 + mu e1 (x) zeta
//   + (c_s rho_s^2 Pi_s(e1) + c_p rho_p^2 Pi_p(e1)) T
//   + (c_s Pi_s(e1) + c_p Pi_p(e1)) U_0^t(zeta) (rho_s Pi_s(e1) + rho_p Pi_p(e1)) T.
// Dual route to the canonical closed form, kept for cross-checks.
CMat md0_traction_form(int d, const SemiclassicalParams& params, const MediumPoint& med,
                       const RVec& zeta);

struct SymbolMatrices {
    cd rho_s, rho_p;
    double r0 = 0;
    CMat Lambda;    // boundary frame rotation, Lambda nu = e_1
    CMat W0, T;     // frame-space boundary matrix and its inverse
    CMat M2;        // canonical 2x2 block
    CMat Md;        // canonical d x d symbol
    CMat md_frame;  // symbol in the Lambda-frame at the signed zeta
    CMat md;        // ambient symbol: md = J Md J^{-1}
    CMat J;         // orthogonal conjugator (frame- and chart-rotation)
    CMat q;         // ambient first-order correction
};

struct SymbolInput {
    SemiclassicalParams params;
    MediumPoint med;
    FramePoint pt;
    double dr0_ds = 0;  // tangential derivative of r0 (zero on arclength charts)
};

// Full symbol bundle at a cotangent point. d in {2,3}; xi' = 0 is rejected
// for d = 3 (the chart direction degenerates).
SymbolMatrices assemble_symbol(const SymbolInput& in,
                               Orientation orient = Orientation::Inward);

// First-order correction
//   q = -i (c_s Pi_s(nu) + c_p Pi_p(nu)) U^t(v) Pi_p(nu) T_ambient,
// v = sum_k (d/ds_k)(rho_p - rho_s) tangent_k, derivatives by the chain rule
// from the medium's tangential derivatives and dr0_ds. Identically zero for
// constant media on arclength charts.
CMat q_correction(const SymbolInput& in, Orientation orient = Orientation::Inward);

// Tangential derivative of a normal root via the chain rule.
cd drho_ds(const SemiclassicalParams& params, const MediumPoint& med, double r0, double dr0_ds,
           Branch branch);

struct IdentityPointReport {
    double resid_product_split = 0;  // r0 + rho_s rho_p vs z^2 (kp rho_s + ks rho_p)/(rho_s + rho_p)
    double resid_difference_factorization = 0;  // (kp rho_s)^2 - (ks rho_p)^2 factored form
    double abs_denominator = 0;                 // |r0 + rho_s rho_p|
};

IdentityPointReport identity_point_checks(const SemiclassicalParams& params,
                                          const MediumPoint& med, double r0);

// Orientation helpers: ambient DN-type matrices negate; frame-representation
// matrices additionally conjugate by diag(-1, 1, ..., 1).
CMat to_outward_ambient(const CMat& inward);
CMat to_outward_frame(const CMat& inward);

// Components of an ambient matrix in the (nu, tangents) basis of the point.
// This is the representation the per-mode reference solvers report. It can
// differ from the Lambda-conjugate by the handedness of the tangent frame.
CMat frame_components(const FramePoint& pt, const CMat& ambient);

}  // namespace edtn
