#pragma once

// Test-side oracle: Bessel J_n of integer order by its power series,
// adequate in double precision for |w| <= 20. Kept independent of the
// continued-fraction path in the library.

#include <complex>

namespace testsupport {

inline std::complex<double> bessel_j_series(long n, std::complex<double> w) {
    const std::complex<double> half = w / 2.0;
    std::complex<double> term = 1.0;
    for (long k = 1; k <= n; ++k) term *= half / static_cast<double>(k);
    std::complex<double> sum = term;
    const std::complex<double> h2 = -half * half;
    for (long m = 1; m < 80; ++m) {
        term *= h2 / (static_cast<double>(m) * static_cast<double>(m + n));
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

inline std::complex<double> bessel_j_derivative_series(long n, std::complex<double> w) {
    if (n == 0) return -bessel_j_series(1, w);
    return bessel_j_series(n - 1, w) - static_cast<double>(n) / w * bessel_j_series(n, w);
}

}  // namespace testsupport
