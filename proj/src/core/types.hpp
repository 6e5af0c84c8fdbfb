#pragma once

// Small dense complex linear algebra on C^d, d <= 8.
//
// The pairing <xi,g> = sum_j xi_j g_j is bilinear (no conjugation) and the
// outer product follows (xi (x) eta) g = <xi,g> eta, i.e. as a matrix the
// entries are (xi (x) eta)_{ij} = eta_i xi_j -- the transpose of the usual
// "eta xi^T" reading. All code and tests use this convention.

#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace edtn {

using cd = std::complex<double>;

inline constexpr int kMaxDim = 8;

class CVec {
public:
    CVec() : dim_(0) { e_.fill(cd{}); }
    explicit CVec(int dim) : dim_(dim) {
        assert(dim >= 0 && dim <= kMaxDim);
        e_.fill(cd{});
    }
    CVec(std::initializer_list<cd> xs) : dim_(static_cast<int>(xs.size())) {
        assert(dim_ <= kMaxDim);
        e_.fill(cd{});
        int i = 0;
        for (cd x : xs) e_[i++] = x;
    }

    int dim() const { return dim_; }
    cd& operator[](int i) { return e_[i]; }
    const cd& operator[](int i) const { return e_[i]; }

    static CVec unit(int dim, int j) {
        CVec v(dim);
        v[j] = 1.0;
        return v;
    }

    CVec& operator+=(const CVec& o) {
        for (int i = 0; i < dim_; ++i) e_[i] += o.e_[i];
        return *this;
    }
    CVec& operator-=(const CVec& o) {
        for (int i = 0; i < dim_; ++i) e_[i] -= o.e_[i];
        return *this;
    }
    CVec& operator*=(cd a) {
        for (int i = 0; i < dim_; ++i) e_[i] *= a;
        return *this;
    }

    friend CVec operator+(CVec a, const CVec& b) { return a += b; }
    friend CVec operator-(CVec a, const CVec& b) { return a -= b; }
    friend CVec operator*(cd a, CVec v) { return v *= a; }
    friend CVec operator*(CVec v, cd a) { return v *= a; }
    friend CVec operator-(CVec v) {
        for (int i = 0; i < v.dim_; ++i) v.e_[i] = -v.e_[i];
        return v;
    }

private:
    int dim_;
    std::array<cd, kMaxDim> e_;
};

// Bilinear pairing, no conjugation.
inline cd dot(const CVec& a, const CVec& b) {
    assert(a.dim() == b.dim());
    cd s{};
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

// xi^2 = <xi,xi>.
inline cd square(const CVec& v) { return dot(v, v); }

// |xi|^2 = sum |xi_j|^2.
inline double abs2(const CVec& v) {
    double s = 0;
    for (int i = 0; i < v.dim(); ++i) s += std::norm(v[i]);
    return s;
}

inline double norm2(const CVec& v) { return std::sqrt(abs2(v)); }

inline double norm_max(const CVec& v) {
    double m = 0;
    for (int i = 0; i < v.dim(); ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

class CMat {
public:
    CMat() : dim_(0) { e_.fill(cd{}); }
    explicit CMat(int dim) : dim_(dim) {
        assert(dim >= 0 && dim <= kMaxDim);
        e_.fill(cd{});
    }
    // Row-major initializer, e.g. CMat(2, {a,b,c,d}) = [[a,b],[c,d]].
    CMat(int dim, std::initializer_list<cd> xs) : dim_(dim) {
        assert(dim <= kMaxDim && static_cast<int>(xs.size()) == dim * dim);
        e_.fill(cd{});
        int i = 0, j = 0;
        for (cd x : xs) {
            (*this)(i, j) = x;
            if (++j == dim) { j = 0; ++i; }
        }
    }

    int dim() const { return dim_; }
    cd& operator()(int i, int j) { return e_[static_cast<size_t>(i) * kMaxDim + j]; }
    const cd& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * kMaxDim + j]; }

    static CMat identity(int dim) {
        CMat m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    CMat& operator+=(const CMat& o) {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) (*this)(i, j) += o(i, j);
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) (*this)(i, j) -= o(i, j);
        return *this;
    }
    CMat& operator*=(cd a) {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) (*this)(i, j) *= a;
        return *this;
    }

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(cd a, CMat m) { return m *= a; }
    friend CMat operator*(CMat m, cd a) { return m *= a; }
    friend CMat operator-(CMat m) { return m *= cd(-1.0); }

    friend CMat operator*(const CMat& a, const CMat& b) {
        assert(a.dim_ == b.dim_);
        CMat c(a.dim_);
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                const cd aik = a(i, k);
                if (aik == cd{}) continue;
                for (int j = 0; j < a.dim_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend CVec operator*(const CMat& a, const CVec& v) {
        assert(a.dim_ == v.dim());
        CVec w(a.dim_);
        for (int i = 0; i < a.dim_; ++i) {
            cd s{};
            for (int j = 0; j < a.dim_; ++j) s += a(i, j) * v[j];
            w[i] = s;
        }
        return w;
    }

private:
    int dim_;
    std::array<cd, kMaxDim * kMaxDim> e_;
};

inline CMat transpose(const CMat& a) {
    CMat t(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) t(j, i) = a(i, j);
    return t;
}

// Matrix norm used throughout: max absolute entry.
inline double norm_max(const CMat& a) {
    double m = 0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

// (xi (x) eta) g = <xi,g> eta, entries eta_i xi_j.
inline CMat outer(const CVec& xi, const CVec& eta) {
    if (xi.dim() != eta.dim()) throw std::invalid_argument("outer: dimension mismatch");
    CMat m(xi.dim());
    for (int i = 0; i < xi.dim(); ++i)
        for (int j = 0; j < xi.dim(); ++j) m(i, j) = eta[i] * xi[j];
    return m;
}

// Determinant by LU with partial pivoting. Exact closed forms elsewhere use
// this as the generic numeric route.
inline cd det_lu(CMat a) {
    const int n = a.dim();
    cd d = 1.0;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        if (a(c, c) == cd{}) return cd{};
        d *= a(c, c);
        for (int r = c + 1; r < n; ++r) {
            const cd f = a(r, c) / a(c, c);
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return d;
}

// Generic inverse by Gauss-Jordan with partial pivoting; throws on a pivot
// below tol * scale.
inline CMat inverse_lu(CMat a, double tol = 1e-300) {
    const int n = a.dim();
    CMat inv = CMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
        if (std::abs(a(p, c)) <= tol) throw std::domain_error("inverse_lu: singular matrix");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const cd piv = a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const cd f = a(r, c);
            if (f == cd{}) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// Real vectors in R^d (frames, normals, cotangent directions).
class RVec {
public:
    RVec() : dim_(0) { e_.fill(0.0); }
    explicit RVec(int dim) : dim_(dim) { e_.fill(0.0); }
    RVec(std::initializer_list<double> xs) : dim_(static_cast<int>(xs.size())) {
        e_.fill(0.0);
        int i = 0;
        for (double x : xs) e_[i++] = x;
    }
    int dim() const { return dim_; }
    double& operator[](int i) { return e_[i]; }
    const double& operator[](int i) const { return e_[i]; }

    CVec complex() const {
        CVec v(dim_);
        for (int i = 0; i < dim_; ++i) v[i] = e_[i];
        return v;
    }
    friend RVec operator*(double a, RVec v) {
        for (int i = 0; i < v.dim_; ++i) v.e_[i] *= a;
        return v;
    }
    friend RVec operator+(RVec a, const RVec& b) {
        for (int i = 0; i < a.dim_; ++i) a.e_[i] += b.e_[i];
        return a;
    }
    friend RVec operator-(RVec a, const RVec& b) {
        for (int i = 0; i < a.dim_; ++i) a.e_[i] -= b.e_[i];
        return a;
    }

private:
    int dim_;
    std::array<double, kMaxDim> e_;
};

inline double dot(const RVec& a, const RVec& b) {
    double s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}
inline double norm2(const RVec& v) { return std::sqrt(dot(v, v)); }

// Relative size of a residual against a reference scale, floored at 1 so
// residuals of near-zero quantities are judged absolutely.
inline double rel_residual(double diff, double scale) {
    return diff / std::max(1.0, scale);
}

}  // namespace edtn
