#include <benchmark/benchmark.h>

#include <random>

#include "skorokhod/conformal.hpp"
#include "skorokhod/distribution.hpp"
#include "skorokhod/fourier.hpp"
#include "skorokhod/montecarlo.hpp"
#include "skorokhod/rearrangement.hpp"

using namespace skorokhod;

namespace {

DistributionSpec uniform_spec() {
  DistributionSpec s;
  s.law = Uniform{-1.0, 1.0};
  return s;
}

DistributionSpec arcsine_spec() {
  DistributionSpec s;
  s.law = Arcsine{0.0, 1.0};
  return s;
}

void bm_gross_uniform(benchmark::State& state) {
  const QuantileFn q = quantile(uniform_spec());
  const std::size_t N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gross_coefficients(q, N));
}
BENCHMARK(bm_gross_uniform)->Arg(1024)->Arg(4096)->Arg(16384);

void bm_gross_arcsine(benchmark::State& state) {
  const QuantileFn q = quantile(arcsine_spec());
  const std::size_t N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gross_coefficients(q, N));
}
BENCHMARK(bm_gross_arcsine)->Arg(256)->Arg(1024);

void bm_gross_staircase(benchmark::State& state) {
  const std::size_t K = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<double> xs(K);
  for (auto& x : xs) x = std::uniform_real_distribution<double>(-1, 1)(rng);
  std::sort(xs.begin(), xs.end());
  const double mean = [&] {
    double m = 0;
    for (double x : xs) m += x;
    return m / static_cast<double>(K);
  }();
  for (auto& x : xs) x -= mean;
  std::vector<QuantileSegment> segs(K);
  for (std::size_t i = 0; i < K; ++i)
    segs[i] = {static_cast<double>(i) / static_cast<double>(K),
               static_cast<double>(i + 1) / static_cast<double>(K), xs[i], xs[i]};
  const QuantileFn q = QuantileFn::piecewise_linear(std::move(segs));
  for (auto _ : state)
    benchmark::DoNotOptimize(gross_coefficients(q, K / 2 - 1));
}
BENCHMARK(bm_gross_staircase)->Arg(1 << 12)->Arg(1 << 16);

void bm_boundary_trace(benchmark::State& state) {
  const PowerSeriesMap m = gross_map(uniform_spec(), 4096);
  const std::size_t M = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(boundary_trace(m, M));
}
BENCHMARK(bm_boundary_trace)->Arg(1 << 14)->Arg(1 << 16);

void bm_sample_conformal(benchmark::State& state) {
  const PowerSeriesMap m = gross_map(uniform_spec(), 4096);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_exit_conformal(m, n, 1));
}
BENCHMARK(bm_sample_conformal)->Arg(1000)->Arg(10000);

void bm_square_walk(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate_square_exit(SquareDomain{1.0}, n, 1, 0.0));
}
BENCHMARK(bm_square_walk)->Arg(1000)->Arg(10000);

void bm_rearrange(benchmark::State& state) {
  const std::size_t M = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  SampledFunction f;
  f.values.resize(M);
  for (auto& v : f.values) v = std::uniform_real_distribution<double>(-1, 1)(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(rearrange_samples(f));
}
BENCHMARK(bm_rearrange)->Arg(1 << 11)->Arg(1 << 16);

void bm_ks_two_sample(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ExitBatch a = sample_exit_conformal(PowerSeriesMap{{1.0}}, n, 1);
  const ExitBatch b = sample_exit_conformal(PowerSeriesMap{{1.0}}, n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(ks_distance(a, b));
}
BENCHMARK(bm_ks_two_sample)->Arg(10000)->Arg(100000);

void bm_dominance(benchmark::State& state) {
  PowerSeriesMap m;
  m.coeff = {1.0, 0.2};
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_energy_dominance(m));
}
BENCHMARK(bm_dominance);

}  // namespace

BENCHMARK_MAIN();
