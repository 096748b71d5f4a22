#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace skorokhod {

bool is_pow2(std::size_t n);

// In-place radix-2 FFT, x.size() a power of two.
// forward:  X_k = sum_j x_j exp(-2 pi i j k / n)
// inverse:  X_k = sum_j x_j exp(+2 pi i j k / n)   (unnormalised)
void fft_pow2(std::vector<std::complex<double>>& x, bool inverse);

// Sine transform S_n = sum_{i=1}^{period-1} d_i sin(n pi i / period) for
// n = 1..period-1, with d holding d_1..d_{period-1}.  Uses the FFT when
// period is a power of two, a direct sum otherwise.
std::vector<double> dst_grid(std::span<const double> d, std::size_t period);

// Values of sum_{n=1}^{N} c[n-1] e^{i n theta_j} on the uniform grid
// theta_j = -pi + 2 pi j / M, j = 0..M-1.  FFT path when M is a power of
// two and M > N, direct Horner evaluation otherwise.
std::vector<std::complex<double>> eval_trig_grid(
    std::span<const std::complex<double>> c, std::size_t M);

}  // namespace skorokhod
