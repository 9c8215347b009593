#pragma once

// Test-only O(N^2) direct DFT, independent of the FFT-backed pipeline.

#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace sinecross_test {

inline std::vector<std::complex<double>> direct_dft_onesided(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    long double re = 0.0L, im = 0.0L;
    for (std::size_t m = 0; m < n; ++m) {
      const long double phase = -2.0L * 3.141592653589793238462643383279502884L *
                                static_cast<long double>(k) * static_cast<long double>(m) /
                                static_cast<long double>(n);
      re += x[m] * std::cos(phase);
      im += x[m] * std::sin(phase);
    }
    out[k] = {static_cast<double>(re), static_cast<double>(im)};
  }
  return out;
}

}  // namespace sinecross_test
