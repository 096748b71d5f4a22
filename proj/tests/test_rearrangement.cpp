#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "skorokhod/errors.hpp"
#include "skorokhod/fourier.hpp"
#include "skorokhod/rearrangement.hpp"
#include "support.hpp"

using namespace skorokhod;
namespace nb = std::numbers;

namespace {

SampledFunction random_samples(std::mt19937_64& rng, std::size_t M) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SampledFunction f;
  f.values.resize(M);
  for (auto& v : f.values) v = u(rng);
  return f;
}

}  // namespace

TEST_CASE("grid convention") {
  auto g = sample_grid(8, nb::pi);
  REQUIRE(g.size() == 8);
  CHECK(g[0] == doctest::Approx(-nb::pi).epsilon(1e-15));
  CHECK(std::abs(g[4]) < 1e-15);
  auto h = sample_grid(4, 0.5);
  CHECK(h[1] == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("cosine is its own rearrangement") {
  auto f = sample_function([](double t) { return std::cos(t); }, 64);
  auto r = rearrange_samples(f);
  for (std::size_t j = 0; j < 64; ++j)
    CHECK(r.values[j] == doctest::Approx(f.values[j]).epsilon(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("step function becomes the centered plateau") {
  SampledFunction f;
  f.values = {1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0};
  auto r = rearrange_samples(f);
  // +1 fills |x| < L/2 with the tie cell going to the positive side
  std::vector<double> want = {-1.0, -1.0, -1.0, 1.0, 1.0, 1.0, 1.0, -1.0};
  REQUIRE(r.values.size() == want.size());
  for (std::size_t j = 0; j < want.size(); ++j) CHECK(r.values[j] == want[j]);
}

TEST_CASE("rearrangement is idempotent and multiset-preserving") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_samples(rng, 32);
    auto r = rearrange_samples(f);
    auto rr = rearrange_samples(r);
    for (std::size_t j = 0; j < 32; ++j) CHECK(rr.values[j] == r.values[j]);

    auto sf = f.values;
    auto sr = r.values;
    std::sort(sf.begin(), sf.end());
    std::sort(sr.begin(), sr.end());
    for (std::size_t j = 0; j < 32; ++j) CHECK(sf[j] == sr[j]);

    // non-increasing along both arms from the center cell
    for (std::size_t j = 16; j + 1 < 32; ++j) CHECK(r.values[j] >= r.values[j + 1]);
    for (std::size_t j = 16; j > 1; --j) CHECK(r.values[j] >= r.values[j - 1]);
    CHECK(r.values[1] >= r.values[0]);

    CHECK(equimeasurable(f, r));
  }
}

TEST_CASE("rearrangement input checks") {
  SampledFunction odd;
  odd.values = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS((void)rearrange_samples(odd), spec_error);
  SampledFunction tiny;
  tiny.values = {1.0, 2.0};
  CHECK_THROWS_AS((void)rearrange_samples(tiny), spec_error);
  SampledFunction bad;
  bad.values = {1.0, std::nan(""), 0.0, 2.0};
  CHECK_THROWS_AS((void)rearrange_samples(bad), spec_error);
  SampledFunction zero_len;
  zero_len.values = {1.0, 2.0, 3.0, 4.0};
  zero_len.half_length = 0.0;
  CHECK_THROWS_AS((void)rearrange_samples(zero_len), spec_error);
}

TEST_CASE("quantile rearrangement closed forms") {
  auto qu = quantile(DistributionSpec{Uniform{-1.0, 1.0}, 0.0});
  // Q(1 - 2|x|) = 1 - 4|x| for the uniform target
  CHECK(rearranged_quantile(qu, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(rearranged_quantile(qu, 0.25)) < 1e-14);
  CHECK(rearranged_quantile(qu, -0.1) == doctest::Approx(0.6).epsilon(1e-14));

  auto qa = quantile(DistributionSpec{Arcsine{0.0, 1.0}, 0.0});
  for (double x : {0.0, 0.1, -0.2, 0.37, 0.49}) {
    CHECK(rearranged_quantile(qa, x) ==
          doctest::Approx(std::cos(2.0 * nb::pi * x)).epsilon(0.0).scale(1.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS((void)rearranged_quantile(qu, 0.5), spec_error);
  CHECK_THROWS_AS((void)rearranged_quantile(qu, -0.7), spec_error);
}

TEST_CASE("grid rearrangement of the even quantile extension matches the closed form") {
  // samples of Q(2|x|) on (-1/2, 1/2) rearrange to Q(1 - 2|x|) up to one cell
  const std::size_t M = 1024;
  DistributionSpec specs[] = {DistributionSpec{Uniform{-1.0, 1.0}, 0.0},
                              DistributionSpec{Arcsine{0.0, 1.0}, 0.0}};
  for (const auto& spec : specs) {
    auto q = quantile(spec);
    auto f = sample_function([&](double x) { return q(std::min(1.0, 2.0 * std::abs(x))); },
                             M, 0.5);
    auto r = rearrange_samples(f);
    auto grid = sample_grid(M, 0.5);
    for (std::size_t j = 1; j < M; ++j) {
      double x = grid[j];
      if (std::abs(std::abs(x) - 0.5) < 2.0 / double(M)) continue;
      CHECK(std::abs(r.values[j] - rearranged_quantile(q, x)) < 16.0 / double(M));
    }
  }
}

TEST_CASE("boundary trace rearrangement values") {
  auto qu = quantile(DistributionSpec{Uniform{-1.0, 1.0}, 0.0});
  CHECK(trace_rearrangement(qu, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(trace_rearrangement(qu, nb::pi / 2.0)) < 1e-14);
  CHECK(std::abs(trace_rearrangement(qu, -nb::pi / 2.0)) < 1e-14);
  CHECK(trace_rearrangement(qu, nb::pi) == doctest::Approx(-1.0).epsilon(1e-14));

  // the rearranged trace of the arcsine target is cos itself
  auto qa = quantile(DistributionSpec{Arcsine{0.0, 1.0}, 0.0});
  for (double t : {0.0, 0.3, -1.1, 2.9}) {
    CHECK(trace_rearrangement(qa, t) ==
          doctest::Approx(std::cos(t)).epsilon(0.0).scale(1.0).epsilon(1e-12));
  }
}

TEST_CASE("rearranged trace flips alternate cosine coefficients") {
  // psi*(theta) = Q(1 - |theta|/pi) has coefficients (-1)^n a_n
  const std::size_t M = 65536, N = 128;
  DistributionSpec specs[] = {DistributionSpec{Uniform{-1.0, 1.0}, 0.0},
                              DistributionSpec{Arcsine{0.0, 1.0}, 0.0}};
  for (const auto& spec : specs) {
    auto q = quantile(spec);
    auto f = sample_function([&](double t) { return trace_rearrangement(q, t); }, M);
    auto got = dft_series(PeriodicSamples(f.values), N);
    auto base = gross_coefficients(q, N);
    for (std::size_t n = 1; n <= N; ++n) {
      double want = (n % 2 == 0 ? 1.0 : -1.0) * base.a[n - 1];
      CHECK(std::abs(got.a[n - 1] - want) < 1e-8);
      CHECK(std::abs(got.b[n - 1]) < 1e-8);
    }
  }
}

TEST_CASE("rearrangement does not increase the kinetic energy") {
  auto fc = sample_function([](double t) { return std::cos(t); }, 64);
  auto gc = polya_szego_gap(fc, 8);
  CHECK(gc.energy_original == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(gc.energy_rearranged == doctest::Approx(0.25).epsilon(1e-12));

  auto fs = sample_function([](double t) { return std::sin(t); }, 64);
  auto gs = polya_szego_gap(fs, 8);
  CHECK(gs.energy_original == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(gs.energy_rearranged == doctest::Approx(0.25).epsilon(1e-12));

  auto fm = sample_function([](double t) { return std::cos(t) + 0.3 * std::cos(2.0 * t); }, 256);
  auto gm = polya_szego_gap(fm, 16);
  CHECK(gm.energy_original == doctest::Approx(0.34).epsilon(1e-12));
  CHECK(gm.energy_rearranged <= gm.energy_original + 1e-8);
  CHECK(gm.energy_rearranged > 0.2);

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = testsupport::random_series(rng, 16);
    SampledFunction f;
    auto grid = PeriodicSamples::grid(2048);
    f.values.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) f.values[j] = evaluate(s, grid[j]);
    auto g = polya_szego_gap(f, 16);
    CHECK(g.energy_original == doctest::Approx(kinetic_energy(s)).epsilon(1e-11));
    CHECK(g.energy_rearranged <= g.energy_original + 1e-8);
  }
}

TEST_CASE("equimeasurability checks") {
  auto f = sample_function([](double t) { return std::sin(t); }, 64);
  auto g = sample_function([](double t) { return std::cos(t); }, 64);
  CHECK(equimeasurable(f, g));

  auto h = sample_function([](double t) { return 2.0 * std::cos(t); }, 64);
  CHECK_FALSE(equimeasurable(f, h));

  auto short_grid = sample_function([](double t) { return std::sin(t); }, 32);
  CHECK_THROWS_AS((void)equimeasurable(f, short_grid), spec_error);
}

TEST_CASE("monotone comparison with a jump budget") {
  SampledFunction f, g;
  f.values = {0.0, 1.0, 1.0, 2.0};
  f.half_length = 0.5;
  g = f;
  CHECK(monotone_equal_check(f, g, 1e-12, 0));

  // two conventions at a jump differ in exactly one cell
  g.values = {0.0, 1.0, 2.0, 2.0};
  CHECK(monotone_equal_check(f, g, 1e-12, 1));
  CHECK_FALSE(monotone_equal_check(f, g, 1e-12, 0));

  SampledFunction wiggle;
  wiggle.values = {0.0, 1.0, 0.5, 2.0};
  wiggle.half_length = 0.5;
  CHECK_THROWS_AS((void)monotone_equal_check(f, wiggle, 1e-12, 4), spec_error);

  // different laws disagree on a positive fraction of cells
  const std::size_t M = 512;
  auto qu = quantile(DistributionSpec{Uniform{-1.0, 1.0}, 0.0});
  auto qa = quantile(DistributionSpec{Arcsine{0.0, 1.0}, 0.0});
  SampledFunction fu, fa;
  fu.half_length = fa.half_length = 0.5;
  fu.values.resize(M);
  fa.values.resize(M);
  for (std::size_t j = 0; j < M; ++j) {
    double u = (double(j) + 0.5) / double(M);
    fu.values[j] = qu(u);
    fa.values[j] = qa(u);
  }
  CHECK_FALSE(monotone_equal_check(fu, fa, 1e-6, 8));
}
