#include "core/quantizer.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edtn {

FourierBoundaryData::FourierBoundaryData(int components, double length, int nmax)
    : d_(components), length_(length), nmax_(nmax) {
    if (components < 1 || components > kMaxDim)
        throw std::invalid_argument("FourierBoundaryData: bad component count");
    if (!(length > 0)) throw std::invalid_argument("FourierBoundaryData: bad length");
    if (nmax < 0) throw std::invalid_argument("FourierBoundaryData: bad mode count");
    c_.assign(2 * static_cast<size_t>(nmax) + 1, CVec(components));
}

double FourierBoundaryData::l2_norm() const {
    double s = 0;
    for (const CVec& v : c_) s += abs2(v);
    return std::sqrt(s);
}

CVec FourierBoundaryData::synthesize(double s) const {
    CVec out(d_);
    const double w = 2.0 * M_PI / length_;
    for (int n = -nmax_; n <= nmax_; ++n) {
        const cd e = std::exp(cd(0.0, w * n * s));
        const CVec& cn = coeff(n);
        for (int i = 0; i < d_; ++i) out[i] += cn[i] * e;
    }
    return out * cd(1.0 / std::sqrt(length_));
}

std::vector<CVec> FourierBoundaryData::sample_grid(int grid_points) const {
    std::vector<CVec> out(static_cast<size_t>(grid_points));
    for (int j = 0; j < grid_points; ++j)
        out[static_cast<size_t>(j)] = synthesize(length_ * j / grid_points);
    return out;
}

FourierBoundaryData FourierBoundaryData::analyze_grid(const std::vector<CVec>& samples,
                                                      double length, int nmax) {
    const int M = static_cast<int>(samples.size());
    if (M < 2 * nmax + 1)
        throw std::invalid_argument("analyze_grid: need at least 2*nmax+1 samples");
    const int d = samples.front().dim();
    FourierBoundaryData f(d, length, nmax);
    const double w = 2.0 * M_PI / M;
    for (int n = -nmax; n <= nmax; ++n) {
        CVec acc(d);
        for (int j = 0; j < M; ++j) {
            const cd e = std::exp(cd(0.0, -w * n * j));
            for (int i = 0; i < d; ++i) acc[i] += samples[static_cast<size_t>(j)][i] * e;
        }
        f.coeff(n) = acc * cd(std::sqrt(length) / M);
    }
    return f;
}

void FourierBoundaryData::write_csv(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_csv: cannot open " + path);
    os << "n";
    for (int i = 0; i < d_; ++i) os << ",re_f" << i + 1 << ",im_f" << i + 1;
    os << "\n";
    os.precision(17);
    for (int n = -nmax_; n <= nmax_; ++n) {
        os << n;
        for (int i = 0; i < d_; ++i)
            os << "," << coeff(n)[i].real() << "," << coeff(n)[i].imag();
        os << "\n";
    }
}

FourierBoundaryData FourierBoundaryData::read_csv(const std::string& path, double length) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_csv: cannot open " + path);
    std::string header;
    std::getline(is, header);
    int cols = 0;
    for (char ch : header) cols += ch == ',';
    const int d = cols / 2;

    struct Row {
        int n;
        std::vector<double> vals;
    };
    std::vector<Row> rows;
    std::string line;
    int nmax = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Row r;
        char comma;
        ls >> r.n;
        for (int i = 0; i < 2 * d; ++i) {
            double v;
            ls >> comma >> v;
            r.vals.push_back(v);
        }
        nmax = std::max(nmax, std::abs(r.n));
        rows.push_back(std::move(r));
    }
    FourierBoundaryData f(d, length, nmax);
    for (const Row& r : rows)
        for (int i = 0; i < d; ++i)
            f.coeff(r.n)[i] = cd(r.vals[static_cast<size_t>(2 * i)],
                                 r.vals[static_cast<size_t>(2 * i + 1)]);
    return f;
}

std::function<CVec(double)> apply_symbol(const std::function<CMat(double, double)>& symbol,
                                         const FourierBoundaryData& f,
                                         const SemiclassicalParams& params) {
    const double L = f.length();
    const double h = params.h;
    const int nmax = f.nmax();
    // Copy the coefficients so the returned closure owns its data.
    FourierBoundaryData data = f;
    return [=](double s) {
        CVec out(data.components());
        const double w = 2.0 * M_PI / L;
        for (int n = -nmax; n <= nmax; ++n) {
            const double xi = 2.0 * M_PI * h * n / L;
            const CVec v = symbol(s, xi) * data.coeff(n);
            const cd e = std::exp(cd(0.0, w * n * s));
            for (int i = 0; i < data.components(); ++i) out[i] += v[i] * e;
        }
        return out * cd(1.0 / std::sqrt(L));
    };
}

FourierBoundaryData apply_symbol_diagonal(const std::function<CMat(double)>& symbol_of_xi,
                                          const FourierBoundaryData& f,
                                          const SemiclassicalParams& params) {
    FourierBoundaryData out = f;
    for (int n = -f.nmax(); n <= f.nmax(); ++n) {
        const double xi = 2.0 * M_PI * params.h * n / f.length();
        out.coeff(n) = symbol_of_xi(xi) * f.coeff(n);
    }
    return out;
}

double hs_norm(const FourierBoundaryData& f, double order, double h) {
    double s = 0;
    for (int n = -f.nmax(); n <= f.nmax(); ++n) {
        const double xi = 2.0 * M_PI * h * n / f.length();
        s += std::pow(japanese_bracket(xi), 2.0 * order) * abs2(f.coeff(n));
    }
    return std::sqrt(s);
}

}  // namespace edtn
