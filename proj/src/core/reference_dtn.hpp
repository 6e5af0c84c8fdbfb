#pragma once

// Two independent exact DN solvers for constant media, used as oracles for
// the symbol construction:
//   * half-space: per-frequency closed solve built from the quadratic
//     eigenvalue problem of the full elastic symbol (generic complex
//     eigendecomposition; shares no code with the symbol formulas);
//   * disk: exact per-mode solve from Helmholtz potentials, assembled from
//     Bessel log-derivatives only, so no scaled Bessel values are ever
//     formed.

#include "core/boundary_symbol.hpp"
#include "core/semiclassical.hpp"
#include "core/types.hpp"

namespace edtn {

// DN matrix -ih N acting on one plane-wave mode e^{+i<x',xi'>/h} of the
// half-space {x1 > 0} with constant medium, in the chart basis (e_1 = inward
// normal direction). Builds the d decaying exponential solutions by solving
// the quadratic pencil P(xi_1 e_1 + xi') - z^2 n via companion linearization
// and returns traction * displacement^{-1}.
CMat halfspace_dn(const SemiclassicalParams& params, const MediumPoint& med, int d,
                  const std::vector<double>& xi_prime,
                  Orientation orient = Orientation::Inward);

// The normal frequencies selected by the half-space solve (the decaying
// eigenvalues of the pencil), for cross-checks against rho_s / rho_p.
std::vector<cd> halfspace_decaying_roots(const SemiclassicalParams& params,
                                         const MediumPoint& med, int d,
                                         const std::vector<double>& xi_prime);

struct DiskDnMode {
    CMat matrix;       // 2x2, components in the (nu, tangent) frame
    double condition;  // condition number of the per-mode displacement solve
};

// Exact DN matrix of the disk of the given radius for the angular mode
// e^{i n s / R}, constant medium, in the (nu, tangent) frame.
DiskDnMode disk_dn_mode(const SemiclassicalParams& params, const MediumPoint& med, double radius,
                        long n, Orientation orient = Orientation::Inward);

struct BesselLogDerivative {
    cd value;        // J_n'(w) / J_n(w)
    int iterations;  // continued-fraction steps used
};

// J_n'(w)/J_n(w) for integer n >= 0 and complex w != 0, via the continued
// fraction for J_{n+1}/J_n (modified Lentz, threshold 1e-14, cap 10^4) and
// J_n' = (n/w) J_n - J_{n+1}. Throws std::runtime_error on non-convergence
// with the last increment in the message.
BesselLogDerivative bessel_log_derivative(long n, cd w);

}  // namespace edtn
