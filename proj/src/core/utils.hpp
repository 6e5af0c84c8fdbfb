#pragma once

// Small shared helpers for the experiment harness: CSV tables with fixed
// headers, least-squares slope fits on log-log data, a stable config hash,
// seeded random draws, and a minimal parallel sweep.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "core/types.hpp"

namespace edtn {

class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& header) {
        std::filesystem::create_directories(path.parent_path());
        os_.open(path);
        if (!os_) throw std::runtime_error("CsvWriter: cannot open " + path.string());
        os_.precision(17);
        os_ << header << "\n";
    }

    template <typename... Ts>
    void row(Ts... vals) {
        bool first = true;
        ((os_ << (first ? "" : ",") << vals, first = false), ...);
        os_ << "\n";
    }

private:
    std::ofstream os_;
};

// Ordinary least squares slope of y against x.
inline double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double num = 0, den = 0;
    for (size_t i = 0; i < n; ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

// FNV-1a over a byte string; used to stamp reports with the config identity.
inline std::uint64_t fnv1a_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline cd random_complex(std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

inline CVec random_cvec(std::mt19937_64& rng, int d, double scale) {
    CVec v(d);
    for (int i = 0; i < d; ++i) v[i] = random_complex(rng, scale);
    return v;
}

inline void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const int workers = std::min(threads, count);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) body(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace edtn
