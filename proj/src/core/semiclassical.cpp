#include "core/semiclassical.hpp"

#include <cmath>
#include <stdexcept>

namespace edtn {

SemiclassicalParams params_from_tau(cd tau) {
    const double re = tau.real(), im = tau.imag();
    if (!(re > 0)) throw std::domain_error("params_from_tau: Re tau must be positive");
    if (im == 0) throw std::domain_error("params_from_tau: Im tau = 0 (theta = 0 unsupported)");
    if (im < 0) throw std::domain_error("params_from_tau: Im tau < 0 unsupported; use Im tau > 0");
    if (im > re) throw std::domain_error("params_from_tau: |Im tau| > Re tau branch unsupported");

    SemiclassicalParams p;
    p.tau = tau;
    p.h = 1.0 / re;
    p.theta = im / re;
    p.z = cd(1.0, p.theta);
    return p;
}

SemiclassicalParams params_from_h_theta(double h, double theta) {
    if (!(h > 0)) throw std::domain_error("params_from_h_theta: h must be positive");
    if (!(theta > 0) || theta > 1.0)
        throw std::domain_error("params_from_h_theta: theta must lie in (0,1]");
    SemiclassicalParams p;
    p.h = h;
    p.theta = theta;
    p.z = cd(1.0, theta);
    p.tau = p.z / h;
    return p;
}

BoundaryField BoundaryField::constant(double c) {
    BoundaryField f;
    f.value = [c](double) { return c; };
    f.deriv = [](double) { return 0.0; };
    return f;
}

BoundaryField BoundaryField::cosine(double c0, double amp, double freq, double phase) {
    BoundaryField f;
    f.value = [=](double s) { return c0 * (1.0 + amp * std::cos(freq * s + phase)); };
    f.deriv = [=](double s) { return -c0 * amp * freq * std::sin(freq * s + phase); };
    return f;
}

std::vector<double> BoundaryField::normal_jet(double s, int m) const {
    if (jet) return jet(s, m);
    std::vector<double> c(static_cast<size_t>(m) + 1, 0.0);
    c[0] = value(s);
    return c;
}

ElasticMedium::ElasticMedium(BoundaryField mu, BoundaryField lambda, BoundaryField n)
    : mu_(std::move(mu)), lambda_(std::move(lambda)), n_(std::move(n)) {
    validate_at(0.0);
}

ElasticMedium ElasticMedium::constant(double mu, double lambda, double n) {
    ElasticMedium m(BoundaryField::constant(mu), BoundaryField::constant(lambda),
                    BoundaryField::constant(n));
    m.constant_ = true;
    return m;
}

void ElasticMedium::validate_at(double s) const {
    const double mu = mu_.value(s), la = lambda_.value(s), n = n_.value(s);
    if (!(mu > 0)) throw std::domain_error("ElasticMedium: mu must be positive");
    if (!(la + mu > 0)) throw std::domain_error("ElasticMedium: lambda + mu must be positive");
    if (!(n > 0)) throw std::domain_error("ElasticMedium: density must be positive");
}

MediumPoint ElasticMedium::at(double s) const {
    validate_at(s);
    MediumPoint p;
    p.mu = mu_.value(s);
    p.lambda = lambda_.value(s);
    p.n = n_.value(s);
    p.dmu = mu_.deriv ? mu_.deriv(s) : 0.0;
    p.dlambda = lambda_.deriv ? lambda_.deriv(s) : 0.0;
    p.dn = n_.deriv ? n_.deriv(s) : 0.0;
    return p;
}

std::vector<double> ElasticMedium::cs_jet(double s, int m) const { return mu_.normal_jet(s, m); }

std::vector<double> ElasticMedium::cp_jet(double s, int m) const {
    auto a = mu_.normal_jet(s, m);
    auto b = lambda_.normal_jet(s, m);
    std::vector<double> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = 2 * a[i] + b[i];
    return c;
}

std::vector<double> ElasticMedium::n_jet(double s, int m) const { return n_.normal_jet(s, m); }

RegionReport region_classify(const ElasticMedium& medium, double s, double r0) {
    if (r0 < 0) throw std::domain_error("region_classify: r0 must be nonnegative");
    RegionReport rep;
    rep.residual_s = medium.cs0(s) * r0 - medium.n0(s);
    rep.residual_p = medium.cp0(s) * r0 - medium.n0(s);
    if (rep.residual_s < 0 && rep.residual_p < 0)
        rep.region = RegionClass::HyperbolicBoth;
    else if (rep.residual_s > 0 && rep.residual_p > 0)
        rep.region = RegionClass::Elliptic;
    else
        rep.region = RegionClass::Between;
    return rep;
}

}  // namespace edtn
