#include "skorokhod/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace skorokhod {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::vector<std::complex<double>>& x, bool inverse) {
  const std::size_t n = x.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size not a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      const std::complex<double> step = std::polar(1.0, ang);
      for (std::size_t k = 0; k < len / 2; ++k) {
        // refresh the running twiddle now and then to stop error drift
        if ((k & 63u) == 0u) w = std::polar(1.0, ang * static_cast<double>(k));
        const std::complex<double> u = x[i + k];
        const std::complex<double> v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= step;
      }
    }
  }
}

std::vector<double> dst_grid(std::span<const double> d, std::size_t period) {
  if (period < 2 || d.size() != period - 1)
    throw std::invalid_argument("dst_grid: need period-1 entries");
  std::vector<double> s(period - 1, 0.0);
  if (is_pow2(period)) {
    // odd extension of length 2*period; forward FFT gives Y_n = -2i S_n
    std::vector<std::complex<double>> y(2 * period, {0.0, 0.0});
    for (std::size_t i = 1; i < period; ++i) {
      y[i] = d[i - 1];
      y[2 * period - i] = -d[i - 1];
    }
    fft_pow2(y, false);
    for (std::size_t n = 1; n < period; ++n) s[n - 1] = -0.5 * y[n].imag();
  } else {
    const double h = std::numbers::pi / static_cast<double>(period);
    for (std::size_t n = 1; n < period; ++n) {
      double acc = 0.0;
      for (std::size_t i = 1; i < period; ++i)
        acc += d[i - 1] * std::sin(h * static_cast<double>(n) * static_cast<double>(i));
      s[n - 1] = acc;
    }
  }
  return s;
}

std::vector<std::complex<double>> eval_trig_grid(
    std::span<const std::complex<double>> c, std::size_t M) {
  const std::size_t N = c.size();
  std::vector<std::complex<double>> v(M);
  if (is_pow2(M) && M > N) {
    // e^{i n theta_j} = (-1)^n e^{2 pi i n j / M} on theta_j = -pi + 2 pi j / M
    std::vector<std::complex<double>> g(M, {0.0, 0.0});
    for (std::size_t n = 1; n <= N; ++n)
      g[n] = (n & 1u) ? -c[n - 1] : c[n - 1];
    fft_pow2(g, true);
    return g;
  }
  for (std::size_t j = 0; j < M; ++j) {
    const double theta =
        -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
    const std::complex<double> w = std::polar(1.0, theta);
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t n = N; n >= 1; --n) acc = (acc + c[n - 1]) * w;
    v[j] = acc;
  }
  return v;
}

}  // namespace skorokhod
