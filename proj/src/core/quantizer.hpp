#pragma once

// Fourier-mode quantization of matrix symbols on a closed planar curve and
// the h-scaled Sobolev norms. Left quantization: the symbol is read at
// xi_n = 2 pi h n / L and multiplies the mode e^{2 pi i n s / L}. For
// x'-independent symbols the action is exactly diagonal per mode.
//
// Coefficients carry the 1/sqrt(L) symmetric normalization, so the l2 sum
// of coefficients equals the squared L^2 norm of the synthesized field.

#include <functional>
#include <string>
#include <vector>

#include "core/semiclassical.hpp"
#include "core/types.hpp"

namespace edtn {

class FourierBoundaryData {
public:
    FourierBoundaryData() = default;
    FourierBoundaryData(int components, double length, int nmax);

    int components() const { return d_; }
    double length() const { return length_; }
    int nmax() const { return nmax_; }

    CVec& coeff(int n) { return c_[static_cast<size_t>(n + nmax_)]; }
    const CVec& coeff(int n) const { return c_[static_cast<size_t>(n + nmax_)]; }

    double l2_norm() const;

    // f(s) = sum_n coeff(n) e^{2 pi i n s / L} / sqrt(L).
    CVec synthesize(double s) const;

    // Equispaced samples s_j = j L / M, j = 0..M-1.
    std::vector<CVec> sample_grid(int grid_points) const;

    // Trigonometric analysis of equispaced samples; exact (to rounding) when
    // grid_points >= 2 nmax + 1.
    static FourierBoundaryData analyze_grid(const std::vector<CVec>& samples, double length,
                                            int nmax);

    void write_csv(const std::string& path) const;
    static FourierBoundaryData read_csv(const std::string& path, double length);

private:
    int d_ = 0;
    double length_ = 0;
    int nmax_ = 0;
    std::vector<CVec> c_;
};

// Op_h(a) f as a function on the curve; a(s, xi) is evaluated at the mode
// frequencies xi_n = 2 pi h n / L.
std::function<CVec(double)> apply_symbol(const std::function<CMat(double, double)>& symbol,
                                         const FourierBoundaryData& f,
                                         const SemiclassicalParams& params);

// Exact per-mode action for x'-independent symbols.
FourierBoundaryData apply_symbol_diagonal(const std::function<CMat(double)>& symbol_of_xi,
                                          const FourierBoundaryData& f,
                                          const SemiclassicalParams& params);

// ( sum_n <xi_n>^{2 order} |f_n|^2 )^{1/2}, the h-scaled Sobolev norm.
double hs_norm(const FourierBoundaryData& f, double order, double h);

inline double japanese_bracket(double xi) { return std::sqrt(1.0 + xi * xi); }

}  // namespace edtn
