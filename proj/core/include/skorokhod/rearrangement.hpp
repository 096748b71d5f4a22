#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "skorokhod/distribution.hpp"

namespace skorokhod {

// Function sampled on the uniform grid x_j = -L + 2 L j / M over (-L, L);
// L is pi for boundary traces and 1/2 for quantile-domain functions.
struct SampledFunction {
  std::vector<double> values;
  double half_length = std::numbers::pi;
};

std::vector<double> sample_grid(std::size_t M, double half_length);

SampledFunction sample_function(const std::function<double(double)>& f, std::size_t M,
                                double half_length = std::numbers::pi);

// Symmetric decreasing rearrangement on the grid: sort descending, place the
// largest value at the center cell, then alternate outward starting on the
// positive side; the final value wraps to the leftmost cell. Even in |x| up
// to one rank, non-increasing along each side, and multiset-preserving.
SampledFunction rearrange_samples(const SampledFunction& f);

// Q*(x) = Q(1 - 2|x|) on (-1/2, 1/2), the symmetric decreasing rearrangement
// of the quantile extended evenly. Rejects |x| >= 1/2.
double rearranged_quantile(const QuantileFn& q, double x);

// psi*(theta) = Q(1 - |theta|/pi), the rearrangement of the boundary trace
// theta -> Q(|theta|/pi).
double trace_rearrangement(const QuantileFn& q, double theta);

struct PolyaSzegoGap {
  double energy_rearranged = 0.0;
  double energy_original = 0.0;
};

// Kinetic energies of f and of its rearrangement, both through dft_series
// with N modes. Meaningful when f is band-limited to degree N (M >= 2N + 2,
// enforced by the transform), where the original energy is spectral-exact.
PolyaSzegoGap polya_szego_gap(const SampledFunction& f, std::size_t N);

// Same value multiset within a per-entry tolerance after sorting. The grids
// must match.
bool equimeasurable(const SampledFunction& f, const SampledFunction& g,
                    double tol = 1e-9);

// Pointwise equality of two non-decreasing sample vectors up to tol, allowing
// at most max_mismatches exceptions (jump cells). Non-monotone input and grid
// mismatch are rejected.
bool monotone_equal_check(const SampledFunction& f, const SampledFunction& g,
                          double tol, std::size_t max_mismatches);

}  // namespace skorokhod
