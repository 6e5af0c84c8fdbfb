#include <doctest.h>

#include <random>

#include "core/semiclassical.hpp"

using namespace edtn;

TEST_SUITE("semiclassical") {

TEST_CASE("params from a damped frequency") {
    const auto p = params_from_tau(cd(100.0, 50.0));
    CHECK(p.h == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(p.theta == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.z.real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.z.imag() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("boundary case of equal real and imaginary parts") {
    const auto p = params_from_tau(cd(64.0, 64.0));
    CHECK(p.h == doctest::Approx(1.0 / 64.0).epsilon(1e-15));
    CHECK(p.theta == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rejected frequency regimes") {
    CHECK_THROWS_AS(params_from_tau(cd(100.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(params_from_tau(cd(100.0, -50.0)), std::domain_error);
    CHECK_THROWS_AS(params_from_tau(cd(50.0, 100.0)), std::domain_error);
    CHECK_THROWS_AS(params_from_tau(cd(-1.0, 0.5)), std::domain_error);
}

TEST_CASE("round trip tau -> params -> z/h") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(1.0, 1000.0);
    for (int i = 0; i < 200; ++i) {
        const double re = u(rng);
        const double im = re * std::uniform_real_distribution<double>(1e-6, 1.0)(rng);
        const cd tau(re, im);
        const auto p = params_from_tau(tau);
        CHECK(std::abs(p.z / p.h - tau) <= 1e-14 * std::abs(tau));
        // Im z^2 = 2 theta holds exactly for z = 1 + i theta
        CHECK(p.z2().imag() == 2.0 * p.theta);
    }
}

TEST_CASE("medium positivity requirements") {
    CHECK_THROWS_AS(ElasticMedium::constant(-1.0, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ElasticMedium::constant(1.0, -1.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(ElasticMedium::constant(1.0, 2.0, 0.0), std::domain_error);
    // lambda may be negative while lambda + mu stays positive
    const auto m = ElasticMedium::constant(0.8, -0.3, 0.7).at(0.0);
    CHECK(m.cp() > m.cs());
    CHECK(m.ks() > m.kp());
    CHECK(m.kp() > 0.0);
}

TEST_CASE("glancing-set classification") {
    // speeds c_s = 1, c_p = 4 with unit density
    const auto medium = ElasticMedium::constant(1.0, 2.0, 1.0);

    const auto on_s = region_classify(medium, 0.0, 1.0);
    CHECK(on_s.residual_s == doctest::Approx(0.0));
    CHECK(on_s.residual_p == doctest::Approx(3.0));
    CHECK(on_s.region == RegionClass::Between);

    const auto hyp = region_classify(medium, 0.0, 0.1);
    CHECK(hyp.region == RegionClass::HyperbolicBoth);
    CHECK(hyp.residual_s < 0.0);
    CHECK(hyp.residual_p < 0.0);

    const auto ell = region_classify(medium, 0.0, 10.0);
    CHECK(ell.region == RegionClass::Elliptic);

    CHECK_THROWS_AS(region_classify(medium, 0.0, -0.5), std::domain_error);
}

TEST_CASE("the p-glancing set sits at smaller r0 than the s-one") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double mu = 0.5 + 2.0 * u(rng);
        const double lambda = -0.9 * mu + 3.0 * u(rng);
        const double n = 0.5 + 2.0 * u(rng);
        const auto medium = ElasticMedium::constant(mu, lambda, n);
        const double r_p = n / (2 * mu + lambda);
        const double r_s = n / mu;
        CHECK(r_p < r_s);
        // strictly between the two crossings the classification is mixed
        const auto mid = region_classify(medium, 0.0, 0.5 * (r_p + r_s));
        CHECK(mid.region == RegionClass::Between);
    }
}

TEST_CASE("cosine boundary profile carries its tangential derivative") {
    const auto f = BoundaryField::cosine(1.0, 0.1, 1.0);
    const double s = 0.73;
    const double fd = (f.value(s + 1e-6) - f.value(s - 1e-6)) / 2e-6;
    CHECK(f.deriv(s) == doctest::Approx(fd).epsilon(1e-8));
}

}  // TEST_SUITE
