#include <doctest.h>

#include <algorithm>
#include <random>

#include "core/geometry.hpp"
#include "core/reference_dtn.hpp"
#include "core/utils.hpp"
#include "support/bessel_series.hpp"

using namespace edtn;

namespace {

double relmax(const CMat& a, const CMat& b) {
    return norm_max(a - b) / std::max(1.0, std::max(norm_max(a), norm_max(b)));
}

}  // namespace

TEST_SUITE("reference-dtn") {

TEST_CASE("half-space at normal incidence decouples") {
    const auto p = params_from_h_theta(0.01, 0.5);
    const MediumPoint m{1.0, 2.0, 1.0};
    const CMat dn = halfspace_dn(p, m, 3, {0.0, 0.0});
    CHECK(std::abs(dn(0, 0) - 2.0 * p.z) <= 1e-12);
    CHECK(std::abs(dn(1, 1) - p.z) <= 1e-12);
    CHECK(std::abs(dn(2, 2) - p.z) <= 1e-12);
    CHECK(std::abs(dn(0, 1)) <= 1e-12);
    CHECK(std::abs(dn(1, 2)) <= 1e-12);
}

TEST_CASE("half-space solver validates the assembled symbol") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> uth(0.1, 1.0), uxi(-10.0, 10.0), u01(0.0, 1.0);
    for (int i = 0; i < 150; ++i) {
        MediumPoint m;
        m.mu = 0.5 + 1.5 * u01(rng);
        m.lambda = -0.9 * m.mu + (3.0 + 0.9 * m.mu) * u01(rng);
        m.n = 0.5 + 1.5 * u01(rng);
        const auto p = params_from_h_theta(0.01, uth(rng));

        const int d = (i % 2) ? 2 : 3;
        std::vector<double> xi(static_cast<size_t>(d - 1));
        double nn = 0;
        for (auto& x : xi) {
            x = uxi(rng);
            nn += x * x;
        }
        if (d == 3 && nn < 1e-6) xi[0] = 1.0;

        SymbolInput in;
        in.params = p;
        in.med = m;
        in.pt = frame_point_flat(d, xi);
        const auto sym = assemble_symbol(in);
        const CMat dn = halfspace_dn(p, m, d, xi);
        CHECK(norm_max(dn - sym.md) / std::max(1e-300, norm_max(sym.md)) <= 1e-9);
    }
}

TEST_CASE("pencil roots coincide with the closed-form normal roots") {
    const auto p = params_from_h_theta(0.02, 0.35);
    const MediumPoint m{1.4, 0.7, 1.1};
    const std::vector<double> xi{2.0, -1.0};
    const double r0 = 5.0;
    auto roots = halfspace_decaying_roots(p, m, 3, xi);
    const cd rs = rho(p, m, r0, Branch::S), rp = rho(p, m, r0, Branch::P);
    std::sort(roots.begin(), roots.end(),
              [](const cd& a, const cd& b) { return a.real() < b.real(); });
    // expected multiset: {rho_p, rho_s, rho_s} up to ordering
    std::vector<cd> expected{rs, rs, rp};
    std::sort(expected.begin(), expected.end(),
              [](const cd& a, const cd& b) { return a.real() < b.real(); });
    for (size_t k = 0; k < 3; ++k) CHECK(std::abs(roots[k] - expected[k]) <= 1e-12);
}

TEST_CASE("half-space rejects undamped frequencies") {
    SemiclassicalParams p;
    p.h = 0.01;
    p.theta = 0.0;
    p.z = 1.0;
    CHECK_THROWS_AS(halfspace_dn(p, MediumPoint{1.0, 2.0, 1.0}, 2, {1.0}), std::domain_error);
}

TEST_CASE("log-derivative at the classical checkpoint") {
    const auto r = bessel_log_derivative(0, cd(1.0, 0.0));
    const cd oracle = testsupport::bessel_j_derivative_series(0, 1.0) /
                      testsupport::bessel_j_series(0, 1.0);
    CHECK(std::abs(r.value - oracle) <= 1e-12);
    CHECK(r.value.real() == doctest::Approx(-0.5750809150043059).epsilon(1e-10));
    CHECK(r.iterations > 0);
}

TEST_CASE("log-derivative against the series oracle across orders") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> ur(0.3, 8.0), ui(0.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const long n = i % 7;
        const cd w(ur(rng), ui(rng));
        const cd oracle = testsupport::bessel_j_derivative_series(n, w) /
                          testsupport::bessel_j_series(n, w);
        CHECK(std::abs(bessel_log_derivative(n, w).value - oracle) <=
              1e-11 * std::max(1.0, std::abs(oracle)));
    }

    // larger arguments: the series oracle itself loses digits to
    // cancellation, so the gate widens accordingly
    for (const cd w : {cd(12.0, 0.5), cd(16.0, 2.0), cd(19.0, 1.0)}) {
        const cd oracle = testsupport::bessel_j_derivative_series(0, w) /
                          testsupport::bessel_j_series(0, w);
        CHECK(std::abs(bessel_log_derivative(0, w).value - oracle) <=
              1e-7 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("log-derivative small-argument behaviour") {
    const cd w(1e-3, 0.0);
    const cd v = bessel_log_derivative(0, w).value;
    CHECK(std::abs(v - (-w / 2.0)) <= 1e-9);
}

TEST_CASE("recurrence consistency at large complex argument") {
    const cd w(500.0, 5.0);
    for (long n : {0L, 3L, 25L}) {
        const cd rn = static_cast<double>(n) / w - bessel_log_derivative(n, w).value;
        const cd rn1 = static_cast<double>(n + 1) / w - bessel_log_derivative(n + 1, w).value;
        // three-term recurrence in ratio form
        const cd lhs = rn;
        const cd rhs = 1.0 / (2.0 * static_cast<double>(n + 1) / w - rn1);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("log-derivative satisfies its first-order equation") {
    const long n = 2;
    const cd w(3.7, 0.9);
    const double dw = 1e-5;
    const cd yp = bessel_log_derivative(n, w + dw).value;
    const cd ym = bessel_log_derivative(n, w - dw).value;
    const cd dy = (yp - ym) / (2.0 * dw);
    const cd y = bessel_log_derivative(n, w).value;
    const cd defect = dy + y * y + y / w +
                      (1.0 - static_cast<double>(n * n) / (w * w));
    CHECK(std::abs(defect) <= 1e-8);
}

TEST_CASE("log-derivative input validation") {
    CHECK_THROWS_AS(bessel_log_derivative(-1, cd(1.0)), std::invalid_argument);
    CHECK_THROWS_AS(bessel_log_derivative(0, cd(0.0)), std::invalid_argument);
}

TEST_CASE("disk mode zero decouples") {
    const auto p = params_from_h_theta(0.05, 0.5);
    const MediumPoint m{1.0, 2.0, 1.0};
    const auto mode = disk_dn_mode(p, m, 1.0, 0);
    CHECK(std::abs(mode.matrix(0, 1)) <= 1e-12);
    CHECK(std::abs(mode.matrix(1, 0)) <= 1e-12);
    CHECK(mode.condition > 0.0);
}

TEST_CASE("opposite modes are related by the tangential sign flip") {
    const auto p = params_from_h_theta(0.02, 0.4);
    const MediumPoint m{1.0, 2.0, 1.0};
    for (long n : {1L, 7L, 40L}) {
        const auto plus = disk_dn_mode(p, m, 1.0, n);
        const auto minus = disk_dn_mode(p, m, 1.0, -n);
        CMat s = CMat::identity(2);
        s(1, 1) = -1.0;
        CHECK(relmax(minus.matrix, s * plus.matrix * s) <= 1e-10);
    }
}

TEST_CASE("disk approaches the half-space as the radius grows") {
    const auto p = params_from_h_theta(0.03125, 0.5);
    const MediumPoint m{1.0, 2.0, 1.0};
    const double xi_target = 0.7;

    std::vector<double> lr, ld;
    for (double R : {8.0, 16.0, 32.0, 64.0}) {
        const long n = std::lround(xi_target * R / p.h);
        const double xi = p.h * static_cast<double>(n) / R;
        const auto mode = disk_dn_mode(p, m, R, n);

        const auto chart = CurveChart::circle(R);
        SymbolInput in;
        in.params = p;
        in.med = m;
        in.pt = frame_point_on_curve(chart, 0.0, xi);
        const auto sym = assemble_symbol(in);
        const CMat flat = frame_components(in.pt, sym.md);

        lr.push_back(std::log2(R));
        ld.push_back(std::log2(norm_max(mode.matrix - flat)));
    }
    const double slope = ols_slope(lr, ld);
    CHECK(slope >= -1.3);
    CHECK(slope <= -0.7);
}

TEST_CASE("disk mode error shrinks linearly in h") {
    const MediumPoint m{1.0, 2.0, 1.0};
    const auto chart = CurveChart::circle(1.0);
    std::vector<double> lh, le;
    for (double h : {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128}) {
        const auto p = params_from_h_theta(h, 0.5);
        double worst = 0;
        for (long n : {3L, std::lround(0.5 / h), std::lround(1.5 / h)}) {
            const double xi = h * static_cast<double>(n);
            const auto mode = disk_dn_mode(p, m, 1.0, n);
            SymbolInput in;
            in.params = p;
            in.med = m;
            in.pt = frame_point_on_curve(chart, 0.0, xi);
            const auto sym = assemble_symbol(in);
            worst = std::max(worst,
                             norm_max(mode.matrix - frame_components(in.pt, sym.md)));
        }
        lh.push_back(std::log2(h));
        le.push_back(std::log2(worst));
    }
    const double slope = ols_slope(lh, le);
    CHECK(slope >= 0.7);
    CHECK(slope <= 1.5);
}

TEST_CASE("outward orientation of the reference solvers matches the symbol") {
    const auto p = params_from_h_theta(0.02, 0.6);
    const MediumPoint m{1.2, 0.8, 1.0};
    const std::vector<double> xi{1.3};
    SymbolInput in;
    in.params = p;
    in.med = m;
    in.pt = frame_point_flat(2, xi);
    const auto sym = assemble_symbol(in, Orientation::Outward);
    const CMat dn = halfspace_dn(p, m, 2, xi, Orientation::Outward);
    CHECK(relmax(dn, sym.md) <= 1e-9);
}

}  // TEST_SUITE
