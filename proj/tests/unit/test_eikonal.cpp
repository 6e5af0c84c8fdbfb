#include <doctest.h>

#include <random>

#include "core/boundary_symbol.hpp"
#include "core/eikonal.hpp"

using namespace edtn;

namespace {

EikonalProblem circle_problem(double theta, double r0, double kappa, Branch b) {
    EikonalProblem prob;
    prob.params = params_from_h_theta(0.01, theta);
    prob.kappa = kappa;
    prob.r0 = r0;
    const MediumPoint m{1.0, 2.0, 1.0};
    const double c = b == Branch::S ? m.cs() : m.cp();
    prob.c_jet = {c};
    prob.n_jet = {m.n};
    return prob;
}

}  // namespace

TEST_SUITE("eikonal") {

TEST_CASE("flat constant phase is exactly linear") {
    auto prob = circle_problem(0.5, 1.7, 0.0, Branch::S);
    const auto sol = solve_eikonal(prob, 8);
    for (int k = 2; k <= sol.order(); ++k)
        CHECK(std::abs(sol.phi[static_cast<size_t>(k)]) <= 1e-14);
    CHECK(std::abs(sol.residual(0.01)) <= 1e-15);
    CHECK(std::abs(sol.residual(0.3)) <= 1e-14);
    // the linear coefficient is the closed-form normal root
    const MediumPoint m{1.0, 2.0, 1.0};
    CHECK(std::abs(sol.rho() - rho(prob.params, m, 1.7, Branch::S)) <= 1e-15);
}

TEST_CASE("quadratic coefficient on the unit circle") {
    // matching the linear order of the expanded relation gives
    // phi_2 = -kappa r0 / (2 rho)
    for (double r0 : {0.3, 1.0, 4.0})
        for (double theta : {0.1, 0.5, 1.0}) {
            const auto prob = circle_problem(theta, r0, 1.0, Branch::S);
            const auto sol = solve_eikonal(prob, 6);
            const cd expected = -r0 / (2.0 * sol.rho());
            CHECK(std::abs(sol.phi[2] - expected) <= 1e-13 * std::max(1.0, std::abs(expected)));
        }
}

TEST_CASE("swapping the speed jet reproduces the other branch") {
    const auto ps = circle_problem(0.4, 0.8, 1.0, Branch::S);
    const auto pp = circle_problem(0.4, 0.8, 1.0, Branch::P);
    const MediumPoint m{1.0, 2.0, 1.0};
    CHECK(std::abs(solve_eikonal(ps, 6).rho() - rho(ps.params, m, 0.8, Branch::S)) <= 1e-15);
    CHECK(std::abs(solve_eikonal(pp, 6).rho() - rho(pp.params, m, 0.8, Branch::P)) <= 1e-15);
}

TEST_CASE("residual drops by the truncation order when the depth halves") {
    for (int N : {4, 6, 8}) {
        const double x1 = N >= 8 ? 0.05 : (N >= 6 ? 0.02 : 0.01);
        for (double xi : {0.1, 0.9, 1.7, 3.0})
            for (double theta : {0.05, 0.3, 1.0}) {
                const auto prob = circle_problem(theta, xi * xi, 1.0, Branch::S);
                const auto sol = solve_eikonal(prob, N);
                const double ratio =
                    std::abs(sol.residual(x1 / 2)) / std::abs(sol.residual(x1));
                CHECK(ratio >= std::pow(2.0, -N - 1));
                CHECK(ratio <= std::pow(2.0, -N + 1));
            }
    }
}

TEST_CASE("residual scaling stays bounded towards the boundary") {
    const auto prob = circle_problem(0.3, 1.2, 1.0, Branch::P);
    const int N = 6;
    const auto sol = solve_eikonal(prob, N);
    double prev = std::abs(sol.residual(0.04)) / std::pow(0.04, N);
    for (double x1 : {0.02, 0.01, 0.005}) {
        const double cur = std::abs(sol.residual(x1)) / std::pow(x1, N);
        CHECK(cur <= 2.0 * prev + 1e-9);
        prev = cur;
    }
}

TEST_CASE("variable medium along the normal enters the recursion") {
    // density n(x1) = 1 + x1 on a flat chart: the quadratic coefficient
    // must absorb z^2 n_1, giving phi_2 = z^2 n_1 / (4 c0 rho) with r0 = 0.
    EikonalProblem prob;
    prob.params = params_from_h_theta(0.01, 0.5);
    prob.kappa = 0.0;
    prob.r0 = 0.0;
    prob.c_jet = {1.0};
    prob.n_jet = {1.0, 1.0};
    const auto sol = solve_eikonal(prob, 6);
    const cd expected = prob.params.z2() / (4.0 * sol.rho());
    CHECK(std::abs(sol.phi[2] - expected) <= 1e-13);
    CHECK(std::abs(sol.residual(0.01)) <= 1e-12);
}

TEST_CASE("phase lower bounds hold on a reported collar") {
    for (double theta : {0.05, 0.3, 1.0})
        for (double xi : {0.2, 0.95, 1.05, 2.5}) {
            const auto prob = circle_problem(theta, xi * xi, 1.0, Branch::S);
            const auto sol = solve_eikonal(prob, 6);
            const auto rep = phase_checks(sol);
            CHECK(rep.delta > 0.0);
            CHECK(rep.imag_growth_ok);
            CHECK(rep.gradient_ok);
            CHECK(rep.decay_constant > 0.0);
        }
}

TEST_CASE("near-glancing collar at moderate damping") {
    // just past the s-glancing set
    const auto prob = circle_problem(0.3, 1.0, 1.0, Branch::S);
    const auto sol = solve_eikonal(prob, 6);
    const auto rep = phase_checks(sol);
    CHECK(rep.delta >= 0.05);
}

TEST_CASE("flat case saturates the growth bound with a factor two margin") {
    const auto prob = circle_problem(0.4, 0.5, 0.0, Branch::S);
    const auto sol = solve_eikonal(prob, 4);
    for (double x1 : {0.01, 0.1, 0.5})
        CHECK(sol.phase(x1).imag() >= 0.5 * x1 * sol.rho().imag());
}

TEST_CASE("input validation") {
    auto prob = circle_problem(0.5, 1.0, 1.0, Branch::S);
    CHECK_THROWS_AS(solve_eikonal(prob, 1), std::invalid_argument);
    prob.params.theta = 0.0;
    CHECK_THROWS_AS(solve_eikonal(prob, 4), std::domain_error);
    auto ok = circle_problem(0.5, 1.0, 1.0, Branch::S);
    const auto sol = solve_eikonal(ok, 4);
    CHECK_THROWS_AS(sol.residual(1.5), std::domain_error);  // beyond 1/kappa
}

}  // TEST_SUITE
