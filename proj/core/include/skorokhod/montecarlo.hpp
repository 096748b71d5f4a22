#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skorokhod/conformal.hpp"
#include "skorokhod/distribution.hpp"

namespace skorokhod {

// One batch of sampled Re(Z_tau) values. n always equals values.size();
// discarded counts geometric paths that hit the iteration cap.
struct ExitBatch {
  std::vector<double> values;
  std::size_t n = 0;
  std::string method;  // "conformal" or "geometric"
  std::uint64_t seed = 0;
  std::size_t discarded = 0;
};

struct KsReport {
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// The open square (-s, s)^2.
struct SquareDomain {
  double half_side = 1.0;
};

// Exit point of one geometric path, with the side it landed on:
// 0 right, 1 top, 2 left, 3 bottom.
struct SquareExit {
  double x = 0.0;
  double y = 0.0;
  int side = 0;
};

// Exact exit sampling for the image domain of m: theta ~ Uniform(-pi, pi),
// value = Re of the boundary series at theta. Exact in law up to truncation.
// Values are drawn in fixed chunks with per-chunk derived streams, so the
// batch is reproducible independently of any parallel split.
ExitBatch sample_exit_conformal(const PowerSeriesMap& m, std::size_t n,
                                std::uint64_t seed);

// Walk on spheres from the center: repeated jumps to a uniform point on the
// largest inscribed circle, absorption within `step` of the boundary followed
// by projection to the nearest side. step <= half_side / 50 is required;
// non-positive step selects the default 1e-4 * half_side.
ExitBatch simulate_square_exit(const SquareDomain& d, std::size_t n,
                               std::uint64_t seed, double step = 0.0);

std::vector<SquareExit> simulate_square_exit_points(const SquareDomain& d,
                                                    std::size_t n,
                                                    std::uint64_t seed,
                                                    double step = 0.0);

// Kolmogorov-Smirnov distance between the batch and a reference law,
// evaluated from both sides at every discontinuity so atoms are handled
// exactly. Non-positive threshold selects 1.63 / sqrt(n), the 99% level.
KsReport ks_distance(const ExitBatch& batch, const DistributionSpec& ref,
                     double threshold = 0.0);

// Two-sample variant over the merged sample grid; the default threshold is
// 1.63 * sqrt((n1 + n2) / (n1 n2)).
KsReport ks_distance(const ExitBatch& a, const ExitBatch& b,
                     double threshold = 0.0);

// Values rounded to multiples of `resolution`. Comparing an absorbed walk
// against a truncated series only makes sense at a common resolution: both
// samplers smear boundary atoms by their own small bias, in opposite ways.
ExitBatch snapped(const ExitBatch& batch, double resolution);

// Empirical law built from the batch. Requires n >= 100 and a nondegenerate
// spread of values.
DistributionSpec estimate_mu(const ExitBatch& batch);

struct DominanceReport {
  double lambda_u = 0.0;
  double lambda_g = 0.0;
  bool pass = false;
};

// Energy comparison between a domain and its rebuilt counterpart: lambda_u is
// the series energy of phi, mu is read off deterministically by sorting the
// real parts of the boundary trace on a `grid`-point circle (the exact
// quantile of the truncated trace), and lambda_g is the energy of the map
// rebuilt from that quantile with N modes. Refuses maps whose energy terms
// diverge. pass holds when lambda_g <= lambda_u + tol.
DominanceReport verify_energy_dominance(const PowerSeriesMap& phi,
                                        std::size_t N = 4096,
                                        std::size_t grid = 65536,
                                        double tol = 1e-3);

}  // namespace skorokhod
