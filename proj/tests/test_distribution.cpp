#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "skorokhod/distribution.hpp"
#include "skorokhod/errors.hpp"

using namespace skorokhod;
namespace nb = std::numbers;

namespace {

DistributionSpec uniform_spec(double a = -1.0, double b = 1.0) {
  return DistributionSpec{Uniform{a, b}, 0.0};
}

DistributionSpec arcsine_spec(double center = 0.0, double halfwidth = 1.0) {
  return DistributionSpec{Arcsine{center, halfwidth}, 0.0};
}

DistributionSpec two_point_spec() {
  return DistributionSpec{TwoPoint{-1.0, 0.5, 1.0}, 0.0};
}

}  // namespace

TEST_CASE("validation accepts centered laws and reports moments") {
  auto r = validate(uniform_spec());
  CHECK(r.pass);
  CHECK(std::abs(r.mean) < 1e-15);
  CHECK(r.variance == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r.bounded);
  CHECK(r.support.lo == doctest::Approx(-1.0));
  CHECK(r.support.hi == doctest::Approx(1.0));

  auto tp = validate(two_point_spec());
  CHECK(tp.pass);
  CHECK(tp.variance == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("validation rejects a shifted law and names the mean") {
  auto r = validate(uniform_spec(0.0, 2.0));
  CHECK_FALSE(r.pass);
  CHECK(r.mean == doctest::Approx(1.0));
  CHECK(r.reason.find("mean") != std::string::npos);
}

TEST_CASE("validation rejects degenerate laws") {
  DistributionSpec point{Atomic{{{0.0, 1.0}}}, 0.0};
  auto r = validate(point);
  CHECK_FALSE(r.pass);
  CHECK(r.reason.find("atom") != std::string::npos);

  DistributionSpec constant{Empirical{{0.0, 0.0, 0.0}}, 0.0};
  auto rc = validate(constant);
  CHECK_FALSE(rc.pass);
  CHECK(rc.reason.find("variance") != std::string::npos);

  DistributionSpec bad_mass{Atomic{{{-1.0, 0.3}, {1.0, 0.3}}}, 0.0};
  CHECK_FALSE(validate(bad_mass).pass);

  auto width = validate(uniform_spec(1.0, 1.0));
  CHECK_FALSE(width.pass);
}

TEST_CASE("moments match closed forms") {
  auto u = moments(uniform_spec());
  CHECK(std::abs(u.mean) < 1e-15);
  CHECK(u.variance == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  // E X^2 = int_0^1 cos^2(pi u) du = 1/2
  auto a = moments(arcsine_spec());
  CHECK(std::abs(a.mean) < 1e-15);
  CHECK(a.variance == doctest::Approx(0.5).epsilon(1e-14));

  DistributionSpec three{Atomic{{{-2.0, 0.25}, {0.0, 0.5}, {2.0, 0.25}}}, 0.0};
  auto m = moments(three);
  CHECK(std::abs(m.mean) < 1e-15);
  CHECK(m.variance == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("quantile closed forms and the inf convention") {
  auto qu = quantile(uniform_spec());
  CHECK(qu(0.75) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(qu(0.0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(qu(1.0) == doctest::Approx(1.0).epsilon(1e-14));

  // at the jump the inf convention keeps the left atom
  auto qt = quantile(two_point_spec());
  CHECK(qt(0.5) == doctest::Approx(-1.0));
  CHECK(qt(0.5 + 1e-12) == doctest::Approx(1.0));

  // Q(u) = -cos(pi u) for the centered arcsine law
  auto qa = quantile(arcsine_spec());
  CHECK(std::abs(qa(0.5)) < 1e-14);
  CHECK(qa(0.25) == doctest::Approx(-std::cos(nb::pi * 0.25)).epsilon(1e-14));
  CHECK(qa(0.9) == doctest::Approx(-std::cos(nb::pi * 0.9)).epsilon(1e-14));
}

TEST_CASE("quantiles are nondecreasing in u") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> uu(1e-9, 1.0 - 1e-9);
  DistributionSpec specs[] = {
      uniform_spec(), arcsine_spec(), two_point_spec(),
      DistributionSpec{Atomic{{{-2.0, 0.25}, {0.0, 0.5}, {2.0, 0.25}}}, 0.0},
      DistributionSpec{Empirical{{-1.0, -0.5, 0.25, 0.25, 1.0}}, 1.0}};
  for (const auto& spec : specs) {
    auto q = quantile(spec);
    for (int i = 0; i < 500; ++i) {
      double u1 = uu(rng), u2 = uu(rng);
      if (u1 > u2) std::swap(u1, u2);
      CHECK(q(u1) <= q(u2) + 1e-14);
    }
  }
}

TEST_CASE("quantile domain is the closed unit interval only") {
  auto q = quantile(uniform_spec());
  CHECK_THROWS_AS((void)q(-0.1), spec_error);
  CHECK_THROWS_AS((void)q(1.1), spec_error);
}

TEST_CASE("table quantile interpolates linear cdf pieces") {
  CdfTable t{{{-1.0, 0.0}, {0.0, 0.5}, {1.0, 1.0}}};
  CHECK(quantile_from_cdf(t, 0.25) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(std::abs(quantile_from_cdf(t, 0.5)) < 1e-14);
  CHECK_THROWS_AS((void)quantile_from_cdf(t, 0.0), spec_error);
  CHECK_THROWS_AS((void)quantile_from_cdf(t, 1.0), spec_error);
}

TEST_CASE("empirical cdf from samples") {
  auto table = empirical_from_samples({-1.0, 1.0, -1.0, 1.0});
  DistributionSpec spec{CdfTable{table}, 0.0};
  CHECK(cdf(spec, -1.0) == doctest::Approx(0.5));
  CHECK(cdf(spec, 0.0) == doctest::Approx(0.5));
  CHECK(cdf(spec, 1.0) == doctest::Approx(1.0));
  CHECK(std::abs(cdf_left(spec, -1.0)) < 1e-15);
  CHECK(cdf_left(spec, 1.0) == doctest::Approx(0.5));

  CHECK_THROWS_AS((void)empirical_from_samples({}), spec_error);
  CHECK_THROWS_AS((void)empirical_from_samples({1.0}), spec_error);

  // degenerate multisets build, validation rejects them
  DistributionSpec degenerate{Empirical{{2.0, 2.0, 2.0}}, 0.0};
  CHECK_FALSE(validate(degenerate).pass);
}

TEST_CASE("empirical law matches the sample moments") {
  std::vector<double> xs = {-1.5, -0.5, 0.25, 0.3, 1.45};
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= double(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= double(xs.size());

  DistributionSpec spec{Empirical{xs}, 1.0};
  auto m = moments(spec);
  CHECK(m.mean == doctest::Approx(mean).epsilon(1e-14));
  CHECK(m.variance == doctest::Approx(var).epsilon(1e-13));

  auto q = quantile(spec);
  CHECK(q.is_uniform_staircase());
  CHECK(q(0.1) == doctest::Approx(-1.5));
  CHECK(q(0.99) == doctest::Approx(1.45));
}

TEST_CASE("cdf and left limit at atoms") {
  auto spec = two_point_spec();
  CHECK(cdf(spec, -1.0) == doctest::Approx(0.5));
  CHECK(std::abs(cdf_left(spec, -1.0)) < 1e-15);
  CHECK(cdf(spec, 1.0) == doctest::Approx(1.0));
  CHECK(cdf_left(spec, 1.0) == doctest::Approx(0.5));
  CHECK(std::abs(cdf(spec, -2.0)) < 1e-15);
  CHECK(cdf(spec, 2.0) == doctest::Approx(1.0));

  auto us = uniform_spec();
  CHECK(cdf(us, 0.5) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(cdf_left(us, 0.5) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("densities where they exist") {
  auto du = density(uniform_spec());
  REQUIRE(du.has_value());
  CHECK((*du)(0.3) == doctest::Approx(0.5).epsilon(1e-14));

  auto da = density(arcsine_spec());
  REQUIRE(da.has_value());
  CHECK((*da)(0.0) == doctest::Approx(1.0 / nb::pi).epsilon(1e-14));

  CHECK_FALSE(density(two_point_spec()).has_value());
}

TEST_CASE("auto centering shifts the mean to zero") {
  auto centered = auto_centered(uniform_spec(0.0, 2.0));
  auto r = validate(centered);
  CHECK(r.pass);
  CHECK(std::abs(r.mean) < 1e-14);
  auto q = quantile(centered);
  CHECK(q(0.75) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("kind names are stable") {
  CHECK(kind_name(uniform_spec()) == "uniform");
  CHECK(kind_name(arcsine_spec()) == "arcsine");
  CHECK(kind_name(two_point_spec()) == "two_point");
}

TEST_CASE("staircase detection") {
  DistributionSpec stair{Empirical{{-1.0, 0.0, 0.25, 1.0}}, 1.0};
  CHECK(quantile(stair).is_uniform_staircase());
  // equal atom masses make a uniform staircase, unequal ones do not
  CHECK(quantile(two_point_spec()).is_uniform_staircase());
  DistributionSpec lopsided{TwoPoint{-3.0, 0.25, 1.0}, 0.0};
  CHECK_FALSE(quantile(lopsided).is_uniform_staircase());
  CHECK_FALSE(quantile(uniform_spec()).is_uniform_staircase());
}
