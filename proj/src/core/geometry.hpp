#pragma once

// Boundary geometry: closed planar curves parametrized by arclength (with
// curvature and the inward-normal collar chart) and flat half-space charts
// in any supported dimension.

#include <functional>
#include <vector>

#include "core/types.hpp"

namespace edtn {

struct CurveChart {
    double length = 0;
    std::function<double(double)> curvature;     // kappa(s), >0 for a disk
    std::function<double(double)> curvature_ds;  // d kappa / ds
    std::function<RVec(double)> position;        // ambient point, unit speed
    std::function<RVec(double)> tangent;         // dx/ds
    std::function<RVec(double)> normal;          // unit normal pointing into the domain

    // Collar map: x = position(s) + x1 * normal(s); valid while 1 - kappa*x1 > 0.
    RVec collar_point(double x1, double s) const {
        return position(s) + x1 * normal(s);
    }

    static CurveChart circle(double radius);
};

inline CurveChart CurveChart::circle(double radius) {
    CurveChart c;
    c.length = 2.0 * M_PI * radius;
    c.curvature = [radius](double) { return 1.0 / radius; };
    c.curvature_ds = [](double) { return 0.0; };
    c.position = [radius](double s) {
        const double a = s / radius;
        return RVec{radius * std::cos(a), radius * std::sin(a)};
    };
    c.tangent = [radius](double s) {
        const double a = s / radius;
        return RVec{-std::sin(a), std::cos(a)};
    };
    c.normal = [radius](double s) {
        const double a = s / radius;
        return RVec{-std::cos(a), -std::sin(a)};
    };
    return c;
}

// Frame and cotangent data at one boundary point: unit inward normal, an
// orthonormal tangent frame, and the cotangent components in that frame.
struct FramePoint {
    int d = 2;
    RVec nu;
    std::vector<RVec> tangents;  // d-1 vectors
    std::vector<double> xi;      // d-1 cotangent components

    double r0() const {
        double s = 0;
        for (double x : xi) s += x * x;
        return s;
    }
    RVec beta0() const {
        RVec b(d);
        for (size_t k = 0; k < tangents.size(); ++k) b = b + xi[k] * tangents[k];
        return b;
    }
};

inline FramePoint frame_point_on_curve(const CurveChart& chart, double s, double xi2) {
    FramePoint p;
    p.d = 2;
    p.nu = chart.normal(s);
    p.tangents = {chart.tangent(s)};
    p.xi = {xi2};
    return p;
}

// Flat chart with nu = e_1 and tangents e_2..e_d.
inline FramePoint frame_point_flat(int d, const std::vector<double>& xi_prime) {
    FramePoint p;
    p.d = d;
    p.nu = RVec(d);
    p.nu[0] = 1.0;
    for (int k = 1; k < d; ++k) {
        RVec t(d);
        t[k] = 1.0;
        p.tangents.push_back(t);
    }
    p.xi = xi_prime;
    return p;
}

}  // namespace edtn
