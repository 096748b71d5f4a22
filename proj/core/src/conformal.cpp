#include "skorokhod/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>

#include "skorokhod/errors.hpp"
#include "skorokhod/fft.hpp"

namespace skorokhod {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::complex<double> evaluate(const PowerSeriesMap& m, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (std::size_t k = m.coeff.size(); k >= 1; --k) acc = acc * z + m.coeff[k - 1];
  return acc * z;
}

PowerSeriesMap scale_rotate(const PowerSeriesMap& m, std::complex<double> factor) {
  PowerSeriesMap out = m;
  for (auto& c : out.coeff) c *= factor;
  return out;
}

PowerSeriesMap reflect_negate(const PowerSeriesMap& m) {
  PowerSeriesMap out = m;
  for (std::size_t k = 0; k < out.coeff.size(); ++k)
    if ((k + 1) % 2 == 1) out.coeff[k] = -out.coeff[k];
  return out;
}

PowerSeriesMap gross_map(const DistributionSpec& spec, std::size_t terms,
                         const QuadConfig& quad) {
  const ValidationReport report = validate(spec);
  if (!report.pass) throw spec_error("invalid target: " + report.reason);
  const FourierSeries s = gross_coefficients(quantile(spec), terms, quad);
  PowerSeriesMap m;
  m.coeff.resize(terms);
  // Re sum c_n e^{in theta} = sum (a_n cos + b_n sin) needs c_n = a_n - i b_n
  for (std::size_t k = 0; k < terms; ++k) m.coeff[k] = {s.a[k], -s.b[k]};
  return m;
}

std::vector<std::complex<double>> boundary_trace(const PowerSeriesMap& m,
                                                 std::size_t grid) {
  return eval_trig_grid(m.coeff, grid);
}

EnergyReport skorokhod_energy(const PowerSeriesMap& m) {
  EnergyReport report;
  std::vector<double> terms(m.coeff.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < m.coeff.size(); ++k) {
    const double n = static_cast<double>(k + 1);
    terms[k] = 0.25 * n * n * std::norm(m.coeff[k]);
    acc += terms[k];
  }
  report.value = acc;
  report.diagnostic = diagnose_energy_terms(terms);
  return report;
}

double area(const PowerSeriesMap& m) {
  double acc = 0.0;
  for (std::size_t k = 0; k < m.coeff.size(); ++k)
    acc += static_cast<double>(k + 1) * std::norm(m.coeff[k]);
  return kPi * acc;
}

namespace {

// trapezoid value of int |f'(e^{it})| dt on a uniform grid; the integrand is
// |sum n c_n e^{i n t}| since the extra e^{-it} has modulus one
double perimeter_on_grid(const std::vector<std::complex<double>>& deriv,
                         std::size_t grid) {
  const std::vector<std::complex<double>> vals = eval_trig_grid(deriv, grid);
  long double acc = 0.0L;
  for (const auto& v : vals) acc += std::abs(v);
  return static_cast<double>(acc * 2.0L * kPi / static_cast<long double>(grid));
}

}  // namespace

PerimeterResult perimeter(const PowerSeriesMap& m, double rel_tol,
                          std::size_t max_grid) {
  std::vector<std::complex<double>> deriv(m.coeff.size());
  for (std::size_t k = 0; k < m.coeff.size(); ++k)
    deriv[k] = static_cast<double>(k + 1) * m.coeff[k];

  std::size_t grid = 256;
  while (grid <= 2 * m.coeff.size()) grid <<= 1;

  PerimeterResult result;
  result.value = perimeter_on_grid(deriv, grid);
  result.grid = grid;
  result.error_estimate = std::numeric_limits<double>::infinity();
  while (grid < max_grid) {
    grid <<= 1;
    const double next = perimeter_on_grid(deriv, grid);
    result.error_estimate = std::abs(next - result.value);
    result.value = next;
    result.grid = grid;
    if (result.error_estimate <= rel_tol * std::max(std::abs(next), 1e-300)) {
      result.converged = true;
      break;
    }
  }
  return result;
}

DomainReport isoperimetric_report(const PowerSeriesMap& m, double eps) {
  const EnergyReport energy_report = skorokhod_energy(m);
  if (energy_report.diagnostic.verdict == Verdict::divergent)
    throw divergence_error("energy terms diverge; the image domain is unbounded");

  DomainReport report;
  report.energy = energy_report.value;
  report.diagnostic = energy_report.diagnostic;
  report.area = area(m);
  const PerimeterResult p = perimeter(m, 1e-9);
  report.perimeter = p.value;

  const double mid = p.value * p.value / (4.0 * kPi);
  const double len_slack =
      p.value * (std::isfinite(p.error_estimate) ? p.error_estimate : 0.0) /
      (2.0 * kPi);
  const double lhs_slack = eps * std::max(1.0, std::abs(mid)) + len_slack;
  const double rhs_slack =
      eps * std::max(1.0, 4.0 * kPi * report.energy) + len_slack;
  report.chain_holds = report.area <= mid + lhs_slack &&
                       mid <= 4.0 * kPi * report.energy + rhs_slack;
  return report;
}

double closed_form_energy(const DistributionSpec& spec, const QuadConfig& quad) {
  const ValidationReport report = validate(spec);
  if (!report.pass) throw spec_error("invalid target: " + report.reason);

  if (std::holds_alternative<TwoPoint>(spec.law) ||
      std::holds_alternative<Atomic>(spec.law))
    throw spec_error("closed_form_energy: discrete law has no density");

  const auto rho = density(spec);
  if (rho) {
    const QuantileFn q = quantile(spec);
    auto integrand = [&](double u) {
      const double d = (*rho)(q(u));
      return 1.0 / (d * d);
    };
    const QuadResult r = adaptive_gauss(integrand, 0.0, 1.0, quad);
    if (!r.converged)
      throw std::runtime_error("closed_form_energy: quadrature did not converge");
    return r.value / (2.0 * kPi * kPi);
  }

  // tabulated law: exact over segments when the quantile is continuous and
  // strictly increasing, since 1/rho(Q(u)) = Q'(u) is constant per piece
  const QuantileFn q = quantile(spec);
  const auto& segs = q.segments();
  double acc = 0.0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const QuantileSegment& s = segs[i];
    if (s.x_hi <= s.x_lo)
      throw spec_error("closed_form_energy: law has an atom at " +
                       std::to_string(s.x_lo));
    if (i + 1 < segs.size() && segs[i + 1].x_lo > s.x_hi)
      throw spec_error("closed_form_energy: support has a gap above " +
                       std::to_string(s.x_hi));
    acc += (s.x_hi - s.x_lo) * (s.x_hi - s.x_lo) / (s.u_hi - s.u_lo);
  }
  return acc / (2.0 * kPi * kPi);
}

PowerSeriesMap polygon_map(int sides, std::size_t terms) {
  if (sides < 4 || sides % 2 != 0)
    throw spec_error("polygon_map: the side count must be even and at least 4");
  const double md = static_cast<double>(sides);
  // vertex radius int_0^1 (1 - t^m)^{-2/m} dt = B(1/m, (m-2)/m) / m
  const double log_beta = std::lgamma(1.0 / md) + std::lgamma((md - 2.0) / md) -
                          std::lgamma(1.0 / md + (md - 2.0) / md);
  const double scale = md * std::exp(-log_beta);

  PowerSeriesMap m;
  m.coeff.assign(terms, 0.0);
  double r = 1.0;  // binomial series of (1 - w^m)^{-2/m}
  for (std::size_t n = 0; md * static_cast<double>(n) + 1.0 <= static_cast<double>(terms); ++n) {
    const std::size_t mode = static_cast<std::size_t>(sides) * n + 1;
    m.coeff[mode - 1] = scale * r / static_cast<double>(mode);
    r *= (2.0 / md + static_cast<double>(n)) / (static_cast<double>(n) + 1.0);
  }
  return m;
}

}  // namespace skorokhod
