#pragma once

// Eikonal phases as truncated Taylor series in the boundary-normal variable
// x1, solved order by order at a fixed cotangent point. The tangential part
// of the phase is the exact linear term <x',xi'>; the series carries the
// normal profile phi_1 x1 + phi_2 x1^2 + ... with phi_1 = rho.
//
// The order-(k-1) coefficient of (d/dx1 phi)^2 contains 2 k rho phi_k plus
// already-known terms, so each coefficient follows by dividing by
// 2 k c0 rho, which is safe for theta > 0. The solve treats the data as
// homogeneous along the boundary coordinate; this is exact for constant
// media on flat charts and circles, the geometries the residual checks run
// on.

#include <vector>

#include "core/semiclassical.hpp"
#include "core/types.hpp"

namespace edtn {

// Truncated power series in x1 with complex coefficients.
class TaylorPoly {
public:
    TaylorPoly() = default;
    explicit TaylorPoly(std::vector<cd> coeffs) : c_(std::move(coeffs)) {}

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    cd coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : cd{}; }
    std::vector<cd>& coeffs() { return c_; }
    const std::vector<cd>& coeffs() const { return c_; }

    cd eval(double x1) const {
        cd v{};
        for (int k = degree(); k >= 0; --k) v = v * x1 + c_[k];
        return v;
    }

    TaylorPoly derivative() const {
        if (c_.size() <= 1) return TaylorPoly({cd{}});
        std::vector<cd> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
        return TaylorPoly(std::move(d));
    }

    static TaylorPoly mul(const TaylorPoly& a, const TaylorPoly& b, int max_degree) {
        std::vector<cd> r(static_cast<size_t>(max_degree) + 1, cd{});
        for (int i = 0; i <= a.degree(); ++i) {
            if (i > max_degree) break;
            for (int j = 0; j <= b.degree() && i + j <= max_degree; ++j)
                r[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
        return TaylorPoly(std::move(r));
    }

    // Series of (1 - kappa x1)^{-2} = sum_k (k+1) kappa^k x1^k.
    static TaylorPoly collar_metric(double kappa, int max_degree) {
        std::vector<cd> r(static_cast<size_t>(max_degree) + 1);
        double p = 1.0;
        for (int k = 0; k <= max_degree; ++k) {
            r[static_cast<size_t>(k)] = (k + 1) * p;
            p *= kappa;
        }
        return TaylorPoly(std::move(r));
    }

private:
    std::vector<cd> c_;
};

struct EikonalProblem {
    SemiclassicalParams params;
    std::vector<double> c_jet;  // speed coefficient (c_s or c_p) along the normal
    std::vector<double> n_jet;  // density along the normal
    double kappa = 0;           // curvature at the point; 0 on flat charts
    double r0 = 0;              // tangential symbol value
};

struct EikonalSolution {
    EikonalProblem problem;
    std::vector<cd> phi;  // phi[k] multiplies x1^k; phi[0] = 0, phi[1] = rho

    cd rho() const { return phi[1]; }
    int order() const { return static_cast<int>(phi.size()) - 1; }

    cd phase(double x1) const;        // the series value (tangential part excluded)
    cd dphase(double x1) const;       // d/dx1 at x1
    cd residual(double x1) const;     // c(x1)((dphi)^2 + r0/(1-kappa x1)^2) - z^2 n(x1)
};

// Solve to residual order N >= 2: the returned phase carries coefficients
// x1^1..x1^N and the defect of the eikonal relation is O(x1^N).
// Throws std::domain_error for theta <= 0 or an exhausted collar
// (1 - kappa x1 <= 0 is the caller's charge when evaluating).
EikonalSolution solve_eikonal(const EikonalProblem& problem, int order);

struct PhaseCheckReport {
    double delta = 0;             // largest dyadic collar factor passing both bounds
    bool imag_growth_ok = false;  // Im phase >= x1 Im rho / 2 on the collar
    bool gradient_ok = false;     // |dphase| >= |rho|/2 on the collar
    double collar_end = 0;        // 2 delta min(1, |rho|^3)
    double decay_constant = 0;    // fitted C with Im phase >= C x1 theta
};

// Scan the collar 0 <= x1 <= 2 delta min(1,|rho|^3) over a dyadic delta
// grid and report the largest delta for which both lower bounds hold,
// together with the fitted exponential-decay constant.
PhaseCheckReport phase_checks(const EikonalSolution& sol);

}  // namespace edtn
