#include "skorokhod/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "skorokhod/errors.hpp"
#include "skorokhod/fourier.hpp"

namespace skorokhod {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kChunk = 4096;
constexpr std::size_t kMaxJumps = std::size_t{1} << 20;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// one derived stream per chunk/path keeps batches reproducible no matter how
// the work is split
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) + index);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

FourierSeries trace_series(const PowerSeriesMap& m) {
  FourierSeries s;
  s.a0 = 0.0;
  s.a.resize(m.coeff.size());
  s.b.resize(m.coeff.size());
  for (std::size_t k = 0; k < m.coeff.size(); ++k) {
    s.a[k] = m.coeff[k].real();
    s.b[k] = -m.coeff[k].imag();
  }
  return s;
}

// Piecewise evaluation of F and its left limit, built once per reference law.
// Tables and atomic laws go through the quantile segments; smooth laws use
// the closed-form CDF.
class CdfEvaluator {
 public:
  explicit CdfEvaluator(const DistributionSpec& spec) : spec_(&spec) {
    const QuantileFn q = quantile(spec);
    if (q.has_segments()) {
      table_ = true;
      segs_ = q.segments();
      for (const auto& s : segs_)
        if (s.x_hi == s.x_lo) atoms_.push_back(s.x_lo);
      atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    }
  }

  const std::vector<double>& atoms() const { return atoms_; }

  double le(double x) const {
    if (!table_) return cdf(*spec_, x);
    auto it = std::upper_bound(
        segs_.begin(), segs_.end(), x,
        [](double v, const QuantileSegment& s) { return v < s.x_lo; });
    if (it == segs_.begin()) return 0.0;
    const QuantileSegment& s = *(it - 1);
    if (x >= s.x_hi) return s.u_hi;
    return s.u_lo + (x - s.x_lo) / (s.x_hi - s.x_lo) * (s.u_hi - s.u_lo);
  }

  double lt(double x) const {
    if (!table_) return cdf_left(*spec_, x);
    auto it = std::lower_bound(
        segs_.begin(), segs_.end(), x,
        [](const QuantileSegment& s, double v) { return s.x_lo < v; });
    if (it == segs_.begin()) return 0.0;
    const QuantileSegment& s = *(it - 1);
    if (x > s.x_hi) return s.u_hi;
    return s.u_lo + (x - s.x_lo) / (s.x_hi - s.x_lo) * (s.u_hi - s.u_lo);
  }

 private:
  const DistributionSpec* spec_;
  bool table_ = false;
  std::vector<QuantileSegment> segs_;
  std::vector<double> atoms_;
};

}  // namespace

ExitBatch sample_exit_conformal(const PowerSeriesMap& m, std::size_t n,
                                std::uint64_t seed) {
  if (n == 0) throw spec_error("sample_exit_conformal: n must be positive");
  const FourierSeries s = trace_series(m);
  ExitBatch batch;
  batch.method = "conformal";
  batch.seed = seed;
  batch.values.resize(n);
  for (std::size_t start = 0; start < n; start += kChunk) {
    std::mt19937_64 rng(stream_seed(seed, start / kChunk));
    const std::size_t stop = std::min(n, start + kChunk);
    for (std::size_t i = start; i < stop; ++i) {
      const double theta = -kPi + 2.0 * kPi * uniform01(rng);
      batch.values[i] = evaluate(s, theta);
    }
  }
  batch.n = n;
  return batch;
}

std::vector<SquareExit> simulate_square_exit_points(const SquareDomain& d,
                                                    std::size_t n,
                                                    std::uint64_t seed,
                                                    double step) {
  if (!(d.half_side > 0.0)) throw spec_error("square half side must be positive");
  if (n == 0) throw spec_error("simulate_square_exit: n must be positive");
  const double s = d.half_side;
  if (step <= 0.0) step = 1e-4 * s;
  if (step > s / 50.0)
    throw spec_error("absorption step must be at most half_side / 50");

  std::vector<SquareExit> out;
  out.reserve(n);
  for (std::size_t path = 0; path < n; ++path) {
    std::mt19937_64 rng(stream_seed(seed, path));
    double x = 0.0, y = 0.0;
    for (std::size_t it = 0; it < kMaxJumps; ++it) {
      const double rx = s - std::abs(x), ry = s - std::abs(y);
      const double r = std::min(rx, ry);
      if (r < step) {
        SquareExit e;
        if (rx <= ry) {
          e.x = (x >= 0.0) ? s : -s;
          e.y = y;
          e.side = (x >= 0.0) ? 0 : 2;
        } else {
          e.x = x;
          e.y = (y >= 0.0) ? s : -s;
          e.side = (y >= 0.0) ? 1 : 3;
        }
        out.push_back(e);
        break;
      }
      const double phi = 2.0 * kPi * uniform01(rng);
      x += r * std::cos(phi);
      y += r * std::sin(phi);
    }
  }
  return out;
}

ExitBatch simulate_square_exit(const SquareDomain& d, std::size_t n,
                               std::uint64_t seed, double step) {
  const std::vector<SquareExit> pts = simulate_square_exit_points(d, n, seed, step);
  ExitBatch batch;
  batch.method = "geometric";
  batch.seed = seed;
  batch.values.reserve(pts.size());
  for (const auto& e : pts) batch.values.push_back(e.x);
  batch.n = batch.values.size();
  batch.discarded = n - pts.size();
  return batch;
}

KsReport ks_distance(const ExitBatch& batch, const DistributionSpec& ref,
                     double threshold) {
  const std::size_t n = batch.values.size();
  if (n < 10) throw spec_error("ks_distance needs at least 10 samples");
  std::vector<double> xs = batch.values;
  std::sort(xs.begin(), xs.end());
  const CdfEvaluator F(ref);

  // the sup of |F_emp - F| is approached at a discontinuity of one of the
  // two functions, so sample points and reference atoms, from both sides,
  // cover it exactly
  double d = 0.0;
  const double dn = static_cast<double>(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && xs[j] == xs[i]) ++j;
    const double x = xs[i];
    d = std::max({d, std::abs(static_cast<double>(j) / dn - F.le(x)),
                  std::abs(static_cast<double>(i) / dn - F.lt(x))});
    i = j;
  }
  for (double t : F.atoms()) {
    const auto le = std::upper_bound(xs.begin(), xs.end(), t) - xs.begin();
    const auto lt = std::lower_bound(xs.begin(), xs.end(), t) - xs.begin();
    d = std::max({d, std::abs(static_cast<double>(le) / dn - F.le(t)),
                  std::abs(static_cast<double>(lt) / dn - F.lt(t))});
  }

  KsReport report;
  report.statistic = d;
  report.threshold = threshold > 0.0 ? threshold : 1.63 / std::sqrt(dn);
  report.pass = report.statistic <= report.threshold;
  return report;
}

KsReport ks_distance(const ExitBatch& a, const ExitBatch& b, double threshold) {
  const std::size_t na = a.values.size(), nb = b.values.size();
  if (na < 10 || nb < 10) throw spec_error("ks_distance needs at least 10 samples");
  std::vector<double> xa = a.values, xb = b.values;
  std::sort(xa.begin(), xa.end());
  std::sort(xb.begin(), xb.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < na || j < nb) {
    const double t = (j >= nb || (i < na && xa[i] <= xb[j])) ? xa[i] : xb[j];
    while (i < na && xa[i] == t) ++i;
    while (j < nb && xb[j] == t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / static_cast<double>(na) -
                             static_cast<double>(j) / static_cast<double>(nb)));
  }
  KsReport report;
  report.statistic = d;
  report.threshold =
      threshold > 0.0
          ? threshold
          : 1.63 * std::sqrt(static_cast<double>(na + nb) /
                             (static_cast<double>(na) * static_cast<double>(nb)));
  report.pass = report.statistic <= report.threshold;
  return report;
}

ExitBatch snapped(const ExitBatch& batch, double resolution) {
  if (!(resolution > 0.0)) throw spec_error("snap resolution must be positive");
  ExitBatch out = batch;
  for (double& v : out.values) v = std::round(v / resolution) * resolution;
  return out;
}

DistributionSpec estimate_mu(const ExitBatch& batch) {
  if (batch.values.size() < 100)
    throw spec_error("estimate_mu needs at least 100 samples");
  const auto [lo, hi] = std::minmax_element(batch.values.begin(), batch.values.end());
  if (*lo == *hi) throw spec_error("estimate_mu: degenerate batch");
  DistributionSpec spec;
  spec.law = Empirical{batch.values};
  return spec;
}

DominanceReport verify_energy_dominance(const PowerSeriesMap& phi, std::size_t N,
                                        std::size_t grid, double tol) {
  if (N == 0) throw spec_error("verify_energy_dominance: N must be positive");
  if (grid < 2 * (N + 1))
    throw spec_error("verify_energy_dominance: grid must be at least 2N + 2");
  const EnergyReport input_energy = skorokhod_energy(phi);
  if (input_energy.diagnostic.verdict == Verdict::divergent)
    throw divergence_error("input map has divergent energy terms");

  // exact exit quantile of the truncated map: sort the boundary real parts
  const std::vector<std::complex<double>> trace = boundary_trace(phi, grid);
  std::vector<double> re(grid);
  for (std::size_t j = 0; j < grid; ++j) re[j] = trace[j].real();
  std::sort(re.begin(), re.end());

  std::vector<QuantileSegment> segs(grid);
  const double g = static_cast<double>(grid);
  for (std::size_t i = 0; i < grid; ++i)
    segs[i] = {static_cast<double>(i) / g, static_cast<double>(i + 1) / g, re[i],
               re[i]};
  const FourierSeries rebuilt =
      gross_coefficients(QuantileFn::piecewise_linear(std::move(segs)), N);

  DominanceReport report;
  report.lambda_u = input_energy.value;
  report.lambda_g = kinetic_energy(rebuilt);
  report.pass = report.lambda_g <= report.lambda_u + tol;
  return report;
}

}  // namespace skorokhod
