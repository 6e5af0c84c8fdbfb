#pragma once

// Boundary amplitudes of the two-phase oscillatory ansatz, the reduction of
// the boundary traction to the DN symbol (dual route to the closed forms in
// boundary_symbol), and a collar evaluator for the disk that makes the
// construction tangible: trace identity at x1 = 0 and an O(h) interior
// defect measurable by finite differences.

#include <functional>
#include <memory>
#include <vector>

#include "core/boundary_symbol.hpp"
#include "core/eikonal.hpp"
#include "core/geometry.hpp"
#include "core/quantizer.hpp"

namespace edtn {

struct AmplitudePair {
    CMat A_s, A_p;  // ambient matrices at the evaluation depth
    CMat T;         // shared boundary factor (ambient)
};

// Phase gradients used by the amplitudes: g_b(x1) = dphase_b(x1) nu +
// xi2/(1 - kappa x1) tangent; at x1 = 0 this is rho_b nu + beta0.
CVec phase_gradient(const FramePoint& pt, const EikonalSolution& phase, double kappa, double x1);

// A_b(x1) = U^t(g_b(x1)) Pi_b(nu) T. At x1 = 0 the pair sums to the
// identity; the polarization constraints Pi_p(g_s) A_s = 0 and
// Pi_s(g_p) A_p = 0 hold at every collar depth by construction.
AmplitudePair amplitudes_at(const SymbolInput& in, const EikonalSolution& phase_s,
                            const EikonalSolution& phase_p, double kappa, double x1);

struct DnReduction {
    CMat m_check;  // principal symbol from the zeroth-order traction algebra
    CMat q_check;  // first-order term from the amplitude derivatives on the
                   // tangent model chart (tangential phase-gradient rate)
};

// Recompute (m_d, q) by carrying out the boundary traction algebra on the
// amplitude ansatz, without touching the closed forms of boundary_symbol.
DnReduction boundary_dn_reduction(const SymbolInput& in,
                                  Orientation orient = Orientation::Inward);

struct ParametrixOptions {
    int taylor_order = 6;  // residual order N of the phases
    double delta = 0.05;   // collar window parameter
    double epsilon = 0.1;  // frequency weight in the window
};

// Two-phase parametrix on the collar of a disk, constant medium, ambient
// vector components. Boundary data arrives as Fourier coefficients.
class DiskParametrix {
public:
    DiskParametrix(const SemiclassicalParams& params, const ElasticMedium& medium,
                   const CurveChart& circle, FourierBoundaryData data, ParametrixOptions opt = {});

    // Field value at collar coordinates (x1 >= 0 into the domain, s arclength).
    CVec evaluate(double x1, double s) const;

    // Trace defect ||u(0,.) - f|| / ||f|| sampled on a grid.
    double trace_error(int grid_points = 256) const;

    // |(h^2 elastic-laplacian + z^2 n) u| at a collar point, by centered
    // finite differences in ambient coordinates (constant-medium operator).
    double pde_residual(double x1, double s, double fd_step) const;

    double collar_limit() const;  // largest x1 the window keeps active

private:
    struct ModeData {
        int n;
        EikonalSolution phase_s, phase_p;
        CMat T_frame;  // boundary factor in the rotating frame (s-independent)
        double window_end;
    };

    CVec evaluate_ambient(const RVec& x) const;

    SemiclassicalParams params_;
    ElasticMedium medium_;
    CurveChart chart_;
    FourierBoundaryData data_;
    ParametrixOptions opt_;
    std::vector<ModeData> modes_;
};

}  // namespace edtn
