#pragma once

// Frequency/medium bookkeeping shared by every other module: the small
// parameter h, the damping theta, the rescaled spectral parameter z = h*tau,
// the Lame coefficients with their wave speeds, and the classification of a
// cotangent point against the two glancing sets.

#include <functional>
#include <optional>
#include <vector>

#include "core/types.hpp"

namespace edtn {

struct SemiclassicalParams {
    double h = 0;    // (Re tau)^{-1}
    double theta = 0;  // |Im z|, in (0,1]
    cd z;            // h * tau = 1 + i*theta on the supported branch
    cd tau;          // physical frequency, Re tau > 0

    cd z2() const { return z * z; }
};

// Supported branch: Re tau >= Im tau > 0, so z = 1 + i*theta covers all
// theta in (0,1]. Everything downstream needs only (h, theta).
// Throws std::domain_error outside the branch (Im tau <= 0 or Im > Re).
SemiclassicalParams params_from_tau(cd tau);

// Convenience: build directly from (h, theta); tau = z/h.
SemiclassicalParams params_from_h_theta(double h, double theta);

// A scalar coefficient on the boundary curve, addressed by arclength, with
// its tangential derivative and an optional normal-direction Taylor jet
// (coefficient k of x1^k). Constant extension into the interior by default.
struct BoundaryField {
    std::function<double(double)> value;
    std::function<double(double)> deriv;  // d/ds, identically 0 for constants

    // jet(s, m) returns coefficients c_0..c_m of the field along the inward
    // normal at s; by default {value(s), 0, 0, ...}.
    std::function<std::vector<double>(double, int)> jet;

    static BoundaryField constant(double c);
    // c0 * (1 + amp * cos(freq * s + phase)); freq in cycles over the period
    // must make the field periodic on the curve at hand (caller's charge).
    static BoundaryField cosine(double c0, double amp, double freq, double phase = 0.0);

    std::vector<double> normal_jet(double s, int m) const;
};

// Values of an ElasticMedium at one boundary point.
struct MediumPoint {
    double mu = 0, lambda = 0, n = 0;
    double dmu = 0, dlambda = 0, dn = 0;  // tangential derivatives

    double cs() const { return mu; }
    double cp() const { return 2 * mu + lambda; }
    double ks() const { return n / cs(); }
    double kp() const { return n / cp(); }
    double dks() const { return (dn * cs() - n * dmu) / (cs() * cs()); }
    double dkp() const { return (dn * cp() - n * (2 * dmu + dlambda)) / (cp() * cp()); }
};

class ElasticMedium {
public:
    ElasticMedium(BoundaryField mu, BoundaryField lambda, BoundaryField n);

    static ElasticMedium constant(double mu, double lambda, double n);

    MediumPoint at(double s) const;

    double mu0(double s) const { return mu_.value(s); }
    double lambda0(double s) const { return lambda_.value(s); }
    double n0(double s) const { return n_.value(s); }
    double cs0(double s) const { return mu0(s); }
    double cp0(double s) const { return 2 * mu0(s) + lambda0(s); }

    // Normal jets for the eikonal solver: coefficients of c_s, c_p, n in x1.
    std::vector<double> cs_jet(double s, int m) const;
    std::vector<double> cp_jet(double s, int m) const;
    std::vector<double> n_jet(double s, int m) const;

    bool is_constant() const { return constant_; }

private:
    void validate_at(double s) const;

    BoundaryField mu_, lambda_, n_;
    bool constant_ = false;
};

enum class RegionClass { HyperbolicBoth, Between, Elliptic };

struct RegionReport {
    RegionClass region;
    double residual_s = 0;  // c_s0 * r0 - n0, zero exactly on the s-glancing set
    double residual_p = 0;  // c_p0 * r0 - n0
};

// Sign classification against the two glancing sets. The p-set sits at the
// smaller r0 (c_p > c_s), so increasing r0 crosses it first.
RegionReport region_classify(const ElasticMedium& medium, double s, double r0);

}  // namespace edtn
