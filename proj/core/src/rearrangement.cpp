#include "skorokhod/rearrangement.hpp"

#include <algorithm>
#include <cmath>

#include "skorokhod/errors.hpp"
#include "skorokhod/fourier.hpp"

namespace skorokhod {

namespace {

void check_sampled(const SampledFunction& f) {
  const std::size_t M = f.values.size();
  if (M < 4 || M % 2 != 0)
    throw spec_error("sampled function needs an even count of at least 4");
  if (!(f.half_length > 0.0)) throw spec_error("half-length must be positive");
  for (double v : f.values)
    if (!std::isfinite(v)) throw spec_error("non-finite sample value");
}

void check_same_grid(const SampledFunction& f, const SampledFunction& g) {
  if (f.values.size() != g.values.size() || f.half_length != g.half_length)
    throw spec_error("sampled functions live on different grids");
}

double value_scale(const SampledFunction& f, const SampledFunction& g) {
  double s = 1.0;
  for (double v : f.values) s = std::max(s, std::abs(v));
  for (double v : g.values) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace

std::vector<double> sample_grid(std::size_t M, double half_length) {
  std::vector<double> x(M);
  for (std::size_t j = 0; j < M; ++j)
    x[j] = -half_length +
           2.0 * half_length * static_cast<double>(j) / static_cast<double>(M);
  return x;
}

SampledFunction sample_function(const std::function<double(double)>& f, std::size_t M,
                                double half_length) {
  SampledFunction out;
  out.half_length = half_length;
  out.values.resize(M);
  const std::vector<double> x = sample_grid(M, half_length);
  for (std::size_t j = 0; j < M; ++j) out.values[j] = f(x[j]);
  return out;
}

SampledFunction rearrange_samples(const SampledFunction& f) {
  check_sampled(f);
  const std::size_t M = f.values.size();
  std::vector<double> sorted = f.values;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());

  SampledFunction out;
  out.half_length = f.half_length;
  out.values.assign(M, 0.0);
  out.values[M / 2] = sorted[0];
  for (std::size_t k = 1; k < M; ++k) {
    const std::size_t j = (k + 1) / 2;
    const std::size_t idx = (k % 2 == 1) ? (M / 2 + j) % M : M / 2 - j;
    out.values[idx] = sorted[k];
  }
  return out;
}

double rearranged_quantile(const QuantileFn& q, double x) {
  if (!(std::abs(x) < 0.5))
    throw spec_error("rearranged quantile is defined on |x| < 1/2");
  return q(1.0 - 2.0 * std::abs(x));
}

double trace_rearrangement(const QuantileFn& q, double theta) {
  const double u = 1.0 - std::abs(theta) / std::numbers::pi;
  return q(std::clamp(u, 0.0, 1.0));
}

PolyaSzegoGap polya_szego_gap(const SampledFunction& f, std::size_t N) {
  check_sampled(f);
  PolyaSzegoGap gap;
  gap.energy_original = kinetic_energy(dft_series(PeriodicSamples(f.values), N));
  const SampledFunction re = rearrange_samples(f);
  gap.energy_rearranged =
      kinetic_energy(dft_series(PeriodicSamples(re.values), N));
  return gap;
}

bool equimeasurable(const SampledFunction& f, const SampledFunction& g, double tol) {
  check_sampled(f);
  check_sampled(g);
  check_same_grid(f, g);
  std::vector<double> fs = f.values, gs = g.values;
  std::sort(fs.begin(), fs.end());
  std::sort(gs.begin(), gs.end());
  const double slack = tol * value_scale(f, g);
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (std::abs(fs[i] - gs[i]) > slack) return false;
  return true;
}

bool monotone_equal_check(const SampledFunction& f, const SampledFunction& g,
                          double tol, std::size_t max_mismatches) {
  check_sampled(f);
  check_sampled(g);
  check_same_grid(f, g);
  const double scale = value_scale(f, g);
  for (const auto* v : {&f.values, &g.values})
    for (std::size_t i = 0; i + 1 < v->size(); ++i)
      if ((*v)[i + 1] < (*v)[i] - 1e-12 * scale)
        throw spec_error("monotone_equal_check: input is not non-decreasing");
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (std::abs(f.values[i] - g.values[i]) > tol * scale) ++mismatches;
  return mismatches <= max_mismatches;
}

}  // namespace skorokhod
