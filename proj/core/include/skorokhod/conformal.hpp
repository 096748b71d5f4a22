#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "skorokhod/distribution.hpp"
#include "skorokhod/fourier.hpp"
#include "skorokhod/quadrature.hpp"

namespace skorokhod {

// Power series f(z) = sum_{k>=1} c_k z^k on the unit disc; coeff[k-1] = c_k.
struct PowerSeriesMap {
  std::vector<std::complex<double>> coeff;

  std::size_t order() const { return coeff.size(); }
};

std::complex<double> evaluate(const PowerSeriesMap& m, std::complex<double> z);

PowerSeriesMap scale_rotate(const PowerSeriesMap& m, std::complex<double> factor);

// c_n -> (-1)^n c_n, i.e. f(z) -> f(-z).
PowerSeriesMap reflect_negate(const PowerSeriesMap& m);

// Map with boundary real part matching the target quantile: c_n = a_n - i b_n
// from the Fourier coefficients of theta -> Q(|theta|/pi).
PowerSeriesMap gross_map(const DistributionSpec& spec, std::size_t terms,
                         const QuadConfig& quad = {});

// Boundary values f(e^{i theta_j}) on the uniform grid theta_j = -pi + 2 pi j / M.
std::vector<std::complex<double>> boundary_trace(const PowerSeriesMap& m, std::size_t grid);

struct EnergyReport {
  double value = 0.0;  // (1/4) sum n^2 |c_n|^2 over the stored modes
  ConvergenceDiagnostic diagnostic;
};

EnergyReport skorokhod_energy(const PowerSeriesMap& m);

// pi * sum n |c_n|^2, the area of the image counted with multiplicity.
double area(const PowerSeriesMap& m);

struct PerimeterResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t grid = 0;  // trapezoid grid size at acceptance
  bool converged = false;
};

// Boundary length int |f'(e^{i t})| dt by trapezoid doubling.
PerimeterResult perimeter(const PowerSeriesMap& m, double rel_tol = 1e-6,
                          std::size_t max_grid = std::size_t(1) << 20);

struct DomainReport {
  double energy = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
  bool chain_holds = false;  // area <= L^2 / (4 pi) <= 4 pi energy, up to slack
  ConvergenceDiagnostic diagnostic;
};

// Throws divergence_error when the energy diagnostic reports a divergent tail.
DomainReport isoperimetric_report(const PowerSeriesMap& m, double eps = 1e-8);

// Energy from the quantile alone: (1 / (2 pi^2)) int_0^1 du / rho(Q(u))^2 for laws
// with a density, and the exact sum over segments for strictly increasing
// piecewise linear quantiles. Throws spec_error when the law has atoms or the
// quantile has flat stretches, since the integral is infinite there.
double closed_form_energy(const DistributionSpec& spec, const QuadConfig& quad = {});

// Conformal map of the disc onto a regular m-gon (m even, >= 4), normalized so
// the vertices sit at distance 1: c_{mn+1} = C r_n / (mn + 1) with the standard
// Schwarz-Christoffel coefficients.
PowerSeriesMap polygon_map(int sides, std::size_t terms);

}  // namespace skorokhod
