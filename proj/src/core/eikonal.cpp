#include "core/eikonal.hpp"

#include <cmath>
#include <stdexcept>

namespace edtn {

namespace {

cd eval_jet(const std::vector<double>& jet, double x1) {
    double p = 1.0;
    cd v{};
    for (double c : jet) {
        v += c * p;
        p *= x1;
    }
    return v;
}

double jet_coeff(const std::vector<double>& jet, int k) {
    return k >= 0 && k < static_cast<int>(jet.size()) ? jet[static_cast<size_t>(k)] : 0.0;
}

}  // namespace

cd EikonalSolution::phase(double x1) const {
    cd v{};
    for (int k = order(); k >= 0; --k) v = v * x1 + phi[static_cast<size_t>(k)];
    return v;
}

cd EikonalSolution::dphase(double x1) const {
    cd v{};
    for (int k = order(); k >= 1; --k)
        v = v * x1 + static_cast<double>(k) * phi[static_cast<size_t>(k)];
    return v;
}

cd EikonalSolution::residual(double x1) const {
    const double om = 1.0 - problem.kappa * x1;
    if (!(om > 0)) throw std::domain_error("EikonalSolution::residual: outside the collar");
    const cd dp = dphase(x1);
    const cd c = eval_jet(problem.c_jet, x1);
    const cd n = eval_jet(problem.n_jet, x1);
    return c * (dp * dp + problem.r0 / (om * om)) - problem.params.z2() * n;
}

EikonalSolution solve_eikonal(const EikonalProblem& problem, int order) {
    if (order < 2) throw std::invalid_argument("solve_eikonal: order must be >= 2");
    if (!(problem.params.theta > 0)) throw std::domain_error("solve_eikonal: theta must be positive");
    const double c0 = jet_coeff(problem.c_jet, 0);
    const double n0 = jet_coeff(problem.n_jet, 0);
    if (!(c0 > 0) || !(n0 > 0)) throw std::domain_error("solve_eikonal: bad medium jets");

    const int N = order;
    const cd z2 = problem.params.z2();

    // rho from the order-zero relation c0 (rho^2 + r0) = z^2 n0.
    const cd rho = std::sqrt(z2 * n0 / c0 - problem.r0);
    if (rho == cd{}) throw std::domain_error("solve_eikonal: degenerate normal root");

    // p[k] = (k+1) phi_{k+1} are the coefficients of the normal derivative.
    std::vector<cd> p(static_cast<size_t>(N), cd{});
    p[0] = rho;

    const TaylorPoly metric = TaylorPoly::collar_metric(problem.kappa, N - 1);

    for (int j = 1; j <= N - 1; ++j) {
        // Coefficient j of c * ((dphi)^2 + r0 * metric) - z^2 n must vanish;
        // the unknown p[j] enters only through c0 * 2 p0 p[j].
        cd known{};
        for (int m = 0; m <= j; ++m) {
            const double cm = jet_coeff(problem.c_jet, m);
            if (cm == 0.0) continue;
            const int t = j - m;
            cd sq{};  // coefficient t of (dphi)^2 with p[j] excluded
            for (int a = 0; a <= t; ++a) {
                const int b = t - a;
                if (a >= j || b >= j) continue;
                sq += p[static_cast<size_t>(a)] * p[static_cast<size_t>(b)];
            }
            known += cm * (sq + problem.r0 * metric.coeff(t));
        }
        known -= z2 * jet_coeff(problem.n_jet, j);
        p[static_cast<size_t>(j)] = -known / (2.0 * c0 * rho);
    }

    EikonalSolution sol;
    sol.problem = problem;
    sol.phi.assign(static_cast<size_t>(N) + 1, cd{});
    for (int k = 1; k <= N; ++k)
        sol.phi[static_cast<size_t>(k)] = p[static_cast<size_t>(k - 1)] / static_cast<double>(k);
    return sol;
}

PhaseCheckReport phase_checks(const EikonalSolution& sol) {
    const cd rho = sol.rho();
    const double theta = sol.problem.params.theta;
    const double scale = std::min(1.0, std::pow(std::abs(rho), 3.0));

    PhaseCheckReport rep;
    const int samples = 33;
    for (double delta = 0.4; delta > 1e-4; delta *= 0.5) {
        const double end = 2.0 * delta * scale;
        if (sol.problem.kappa > 0 && end >= 1.0 / sol.problem.kappa) continue;
        bool imag_ok = true, grad_ok = true;
        double cmin = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= samples; ++i) {
            const double x1 = end * i / samples;
            const cd ph = sol.phase(x1);
            if (ph.imag() < 0.5 * x1 * rho.imag()) imag_ok = false;
            if (std::abs(sol.dphase(x1)) < 0.5 * std::abs(rho)) grad_ok = false;
            cmin = std::min(cmin, ph.imag() / (x1 * theta));
        }
        if (imag_ok && grad_ok) {
            rep.delta = delta;
            rep.imag_growth_ok = true;
            rep.gradient_ok = true;
            rep.collar_end = end;
            rep.decay_constant = cmin;
            return rep;
        }
    }
    return rep;  // delta = 0: no collar found
}

}  // namespace edtn
