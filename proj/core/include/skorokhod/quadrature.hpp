#pragma once

#include <functional>

namespace skorokhod {

struct QuadConfig {
  double tol = 1e-12;   // absolute bisection tolerance for adaptive panels
  int max_depth = 40;   // recursion cap; hitting it marks the result unconverged
  int points = 32;      // Gauss-Legendre nodes per panel
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

// Fixed-order Gauss-Legendre quadrature of f on [a, b].
double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   int points);

// Adaptive bisection built on gauss_panel.  A panel is accepted when the
// two-half refinement moves its value by less than the tolerance share
// assigned to it; error_estimate accumulates the observed refinement gaps.
QuadResult adaptive_gauss(const std::function<double(double)>& f, double a,
                          double b, const QuadConfig& cfg = {});

}  // namespace skorokhod
