#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace skorokhod {

// ---------------------------------------------------------------------------
// target distribution kinds (all centered, bounded-support laws on R)
// ---------------------------------------------------------------------------

struct Uniform {
  double a = -1.0;
  double b = 1.0;
};

// Exit law of Brownian motion from a centered disc, scaled/shifted:
// density 1 / (pi sqrt(halfwidth^2 - (x-center)^2)) on the open interval.
struct Arcsine {
  double center = 0.0;
  double halfwidth = 1.0;
};

struct TwoPoint {
  double x1 = -1.0;
  double p1 = 0.5;
  double x2 = 1.0;
};

struct Atom {
  double x = 0.0;
  double p = 0.0;
};

struct Atomic {
  std::vector<Atom> atoms;
};

// Sorted (x, F) pairs describing a CDF.  A repeated x encodes a jump (an
// atom), a repeated F encodes a flat stretch (a gap in the support), and
// distinct consecutive pairs are read as a linear CDF piece.
struct CdfPoint {
  double x = 0.0;
  double F = 0.0;
};

struct CdfTable {
  std::vector<CdfPoint> points;
};

struct Empirical {
  std::vector<double> samples;
};

using Law = std::variant<Uniform, Arcsine, TwoPoint, Atomic, CdfTable, Empirical>;

struct DistributionSpec {
  Law law;
  // Largest |mean| accepted by validate().  Non-positive selects the default:
  // 1e-9 for closed-form kinds, 3*sigma/sqrt(n) for empirical samples.
  double mean_tolerance = 0.0;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct ValidationReport {
  bool pass = false;
  double mean = 0.0;
  double variance = 0.0;
  Interval support;
  bool bounded = false;
  std::string reason;  // empty when pass
};

// ---------------------------------------------------------------------------
// quantile functions
// ---------------------------------------------------------------------------

// One piece of a piecewise-linear quantile: Q is linear from (u_lo, x_lo) to
// (u_hi, x_hi).  A constant piece (x_lo == x_hi) is an atom of mass
// u_hi - u_lo; a gap between the x-ranges of consecutive pieces is a jump of
// Q (a hole in the support).
struct QuantileSegment {
  double u_lo, u_hi, x_lo, x_hi;
};

// Generalised inverse Q(u) = inf{ x : F(x) >= u }, left-continuous in u.
// Either an explicit piecewise-linear description (tables, atoms, uniform)
// or a smooth callable (arcsine).  Knots are the interior u-points where Q
// is not smooth; they drive piecewise integration downstream.
class QuantileFn {
 public:
  static QuantileFn piecewise_linear(std::vector<QuantileSegment> segments);
  static QuantileFn smooth(std::function<double(double)> eval, Interval support,
                           double mean);

  // u in [0, 1]; the endpoints evaluate to the one-sided limits Q(0+), Q(1-).
  double operator()(double u) const;

  const std::vector<double>& knots() const { return knots_; }
  Interval support() const { return support_; }
  double mean() const { return mean_; }

  bool has_segments() const { return !segments_.empty(); }
  const std::vector<QuantileSegment>& segments() const { return segments_; }
  // true when every piece is constant and the u-breakpoints are i/K
  bool is_uniform_staircase() const;

 private:
  QuantileFn() = default;
  std::vector<QuantileSegment> segments_;
  std::function<double(double)> eval_;
  std::vector<double> knots_;
  Interval support_{};
  double mean_ = 0.0;
};

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

std::string kind_name(const DistributionSpec& spec);

// Checks parameters, bounded support, positive variance and the centering
// requirement |mean| <= mean_tolerance.  Never throws for bad numbers; the
// report carries the reason.
ValidationReport validate(const DistributionSpec& spec);

// Exact mean/variance (closed forms; tables via segment sums; empirical via
// the sample law).  Throws spec_error for malformed parameters.
Moments moments(const DistributionSpec& spec);

Interval support(const DistributionSpec& spec);

QuantileFn quantile(const DistributionSpec& spec);

// inf{ x : F(x) >= u } for a validated table; u must lie in (0, 1).
double quantile_from_cdf(const CdfTable& table, double u);

// Step CDF of the sample multiset (needs at least two samples).  Degenerate
// sample sets build fine here and are rejected by validate() downstream.
CdfTable empirical_from_samples(std::vector<double> samples);

// F(x) and the left limit F(x-).
double cdf(const DistributionSpec& spec, double x);
double cdf_left(const DistributionSpec& spec, double x);

// Density where the law has one (uniform, arcsine); nullopt otherwise.
std::optional<std::function<double(double)>> density(const DistributionSpec& spec);

// The same law shifted so its mean is zero (the explicit auto-center hook;
// validation itself never recenters).
DistributionSpec auto_centered(const DistributionSpec& spec);

}  // namespace skorokhod
