#include "skorokhod/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "skorokhod/errors.hpp"
#include "skorokhod/fft.hpp"

namespace skorokhod {

namespace {
constexpr double kPi = std::numbers::pi;
}

PeriodicSamples::PeriodicSamples(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 4 || values_.size() % 2 != 0)
    throw spec_error("periodic samples need an even count of at least 4");
  for (double v : values_)
    if (!std::isfinite(v)) throw spec_error("non-finite periodic sample");
}

std::vector<double> PeriodicSamples::grid(std::size_t M) {
  std::vector<double> theta(M);
  for (std::size_t j = 0; j < M; ++j)
    theta[j] = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(M);
  return theta;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::divergent: return "divergent";
    default: return "inconclusive";
  }
}

double kinetic_energy(const FourierSeries& s) {
  double acc = 0.0;
  for (std::size_t k = 0; k < s.order(); ++k) {
    const double n = static_cast<double>(k + 1);
    acc += n * n * (s.a[k] * s.a[k] + s.b[k] * s.b[k]);
  }
  return 0.25 * acc;
}

FourierSeries hilbert_multiplier(const FourierSeries& s) {
  FourierSeries out;
  out.a0 = 0.0;
  out.a.resize(s.order());
  out.b.resize(s.order());
  for (std::size_t k = 0; k < s.order(); ++k) {
    out.a[k] = -s.b[k];
    out.b[k] = s.a[k];
  }
  return out;
}

FourierSeries dft_series(const PeriodicSamples& samples, std::size_t N) {
  const std::size_t M = samples.size();
  if (N > M / 2 - 1)
    throw spec_error("dft_series: N exceeds the aliasing guard M/2 - 1");
  const auto& g = samples.values();
  FourierSeries s;
  s.a.assign(N, 0.0);
  s.b.assign(N, 0.0);
  const double scale = 2.0 / static_cast<double>(M);
  double mean = 0.0;
  for (double v : g) mean += v;
  s.a0 = scale * mean;
  if (is_pow2(M)) {
    std::vector<std::complex<double>> x(g.begin(), g.end());
    fft_pow2(x, false);
    // sum_j g_j e^{-i n theta_j} = (-1)^n X_n on this grid
    for (std::size_t n = 1; n <= N; ++n) {
      const double sign = (n & 1u) ? -1.0 : 1.0;
      s.a[n - 1] = scale * sign * x[n].real();
      s.b[n - 1] = -scale * sign * x[n].imag();
    }
    return s;
  }
  const std::vector<double> theta = PeriodicSamples::grid(M);
  for (std::size_t n = 1; n <= N; ++n) {
    double ca = 0.0, sa = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
      ca += g[j] * std::cos(static_cast<double>(n) * theta[j]);
      sa += g[j] * std::sin(static_cast<double>(n) * theta[j]);
    }
    s.a[n - 1] = scale * ca;
    s.b[n - 1] = scale * sa;
  }
  return s;
}

double evaluate(const FourierSeries& s, double theta) {
  const double c = std::cos(theta);
  const std::size_t N = s.order();
  double d1 = 0.0, d2 = 0.0, e1 = 0.0, e2 = 0.0;
  for (std::size_t k = N; k >= 1; --k) {
    const double d = s.a[k - 1] + 2.0 * c * d1 - d2;
    d2 = d1;
    d1 = d;
    const double e = s.b[k - 1] + 2.0 * c * e1 - e2;
    e2 = e1;
    e1 = e;
  }
  return 0.5 * s.a0 + (d1 * c - d2) + e1 * std::sin(theta);
}

double l2_norm(const FourierSeries& s) {
  double acc = 0.25 * s.a0 * s.a0;
  for (std::size_t k = 0; k < s.order(); ++k)
    acc += 0.5 * (s.a[k] * s.a[k] + s.b[k] * s.b[k]);
  return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// convergence diagnostics
// ---------------------------------------------------------------------------

namespace {
constexpr double kDivergentAbove = -1.1;
constexpr double kConvergedBelow = -1.25;
constexpr double kResidualMax = 0.5;
constexpr std::size_t kFirstMode = 8;
constexpr std::size_t kMinBlocks = 4;
}  // namespace

ConvergenceDiagnostic diagnose_energy_terms(std::span<const double> terms) {
  const std::size_t N = terms.size();
  ConvergenceDiagnostic diag;
  diag.tail_bound = std::numeric_limits<double>::quiet_NaN();

  // an effectively exact polynomial: the upper half carries nothing beyond
  // floating-point noise relative to the total
  double total = 0.0, upper = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    total += terms[i];
    if (i >= N / 2) upper += terms[i];
  }
  if (upper <= 1e-16 * total) {
    diag.verdict = Verdict::converged;
    diag.tail_exponent = -std::numeric_limits<double>::infinity();
    diag.tail_bound = 0.0;
    return diag;
  }

  std::vector<double> js, logs;
  for (std::size_t j = 3; (std::size_t{1} << (j + 1)) <= N + 1; ++j) {
    if ((std::size_t{1} << j) < kFirstMode) continue;
    double sum = 0.0;
    for (std::size_t n = std::size_t{1} << j; n < (std::size_t{1} << (j + 1)); ++n)
      sum += terms[n - 1];
    if (sum > 0.0) {
      js.push_back(static_cast<double>(j));
      logs.push_back(std::log2(sum));
    }
  }
  if (js.size() < kMinBlocks) return diag;  // inconclusive

  const double m = static_cast<double>(js.size());
  double sj = 0.0, sl = 0.0, sjj = 0.0, sjl = 0.0;
  for (std::size_t i = 0; i < js.size(); ++i) {
    sj += js[i];
    sl += logs[i];
    sjj += js[i] * js[i];
    sjl += js[i] * logs[i];
  }
  const double slope = (m * sjl - sj * sl) / (m * sjj - sj * sj);
  const double intercept = (sl - slope * sj) / m;
  double rss = 0.0;
  for (std::size_t i = 0; i < js.size(); ++i) {
    const double r = logs[i] - (intercept + slope * js[i]);
    rss += r * r;
  }
  diag.fit_residual = std::sqrt(rss / m);
  diag.tail_exponent = slope - 1.0;

  if (diag.fit_residual > kResidualMax) return diag;
  if (diag.tail_exponent >= kDivergentAbove) {
    diag.verdict = Verdict::divergent;
    diag.tail_bound = std::numeric_limits<double>::infinity();
  } else if (diag.tail_exponent <= kConvergedBelow) {
    diag.verdict = Verdict::converged;
    const double ratio = std::exp2(slope);
    double last = 0.0;
    for (std::size_t n = std::size_t{1} << static_cast<std::size_t>(js.back()); n <= N; ++n)
      last += terms[n - 1];
    diag.tail_bound = last * ratio / (1.0 - ratio);
  }
  return diag;
}

ConvergenceDiagnostic energy_convergence_diagnostic(const FourierSeries& s) {
  if (s.order() < 64)
    throw spec_error("energy diagnostic requires at least 64 modes");
  std::vector<double> terms(s.order());
  for (std::size_t k = 0; k < s.order(); ++k) {
    const double n = static_cast<double>(k + 1);
    terms[k] = 0.25 * n * n * (s.a[k] * s.a[k] + s.b[k] * s.b[k]);
  }
  return diagnose_energy_terms(terms);
}

// ---------------------------------------------------------------------------
// Gross coefficients
// ---------------------------------------------------------------------------

namespace {

// exact integral of the linear piece over [u_lo, u_hi] against cos(n pi u),
// folded into the running sum for every n at once is still O(K N); this is
// the per-mode kernel.
double segment_integral(const QuantileSegment& s, double k) {
  const double s0 = std::sin(k * s.u_lo), s1 = std::sin(k * s.u_hi);
  const double c0 = std::cos(k * s.u_lo), c1 = std::cos(k * s.u_hi);
  const double slope = (s.x_hi - s.x_lo) / (s.u_hi - s.u_lo);
  return s.x_lo * (s1 - s0) / k +
         slope * ((s.u_hi - s.u_lo) * s1 / k + (c1 - c0) / (k * k));
}

std::vector<double> staircase_fast(const std::vector<QuantileSegment>& segs,
                                   std::size_t N) {
  // uniform staircase: a_n = (2 / n pi) sum_i (x_i - x_{i+1}) sin(n pi i / K)
  const std::size_t K = segs.size();
  std::vector<double> d(K - 1);
  for (std::size_t i = 0; i + 1 < K; ++i) d[i] = segs[i].x_lo - segs[i + 1].x_lo;
  const std::vector<double> sums = dst_grid(d, K);
  std::vector<double> a(N, 0.0);
  const std::size_t upto = std::min(N, K - 1);
  for (std::size_t n = 1; n <= upto; ++n)
    a[n - 1] = 2.0 * sums[n - 1] / (static_cast<double>(n) * kPi);
  for (std::size_t n = upto + 1; n <= N; ++n) {
    double acc = 0.0;
    for (const QuantileSegment& s : segs) acc += segment_integral(s, static_cast<double>(n) * kPi);
    a[n - 1] = 2.0 * acc;
  }
  return a;
}

// composite Gauss-Legendre between knots, refined so each panel spans at
// most ~2 oscillation periods; a doubling pass guards accuracy.
double smooth_mode(const QuantileFn& q, double n, std::span<const double> knots,
                   const QuadConfig& cfg, double* worst_gap) {
  const double k = n * kPi;
  auto integrate = [&](int refine) {
    double total = 0.0;
    double lo = 0.0;
    std::size_t knot = 0;
    while (lo < 1.0) {
      const double hi = (knot < knots.size()) ? knots[knot] : 1.0;
      ++knot;
      if (hi <= lo) continue;
      const int panels =
          std::max(1, static_cast<int>(std::ceil((hi - lo) * n / 4.0))) * refine;
      const double h = (hi - lo) / panels;
      for (int p = 0; p < panels; ++p) {
        const double u0 = lo + p * h;
        total += gauss_panel([&](double u) { return q(u) * std::cos(k * u); }, u0,
                             u0 + h, cfg.points);
      }
      lo = hi;
    }
    return total;
  };
  const double coarse = integrate(1);
  const double fine = integrate(2);
  *worst_gap = std::max(*worst_gap, std::abs(fine - coarse));
  return fine;
}

}  // namespace

FourierSeries gross_coefficients(const QuantileFn& q, std::size_t N,
                                 const QuadConfig& cfg) {
  if (N == 0) throw spec_error("gross_coefficients: N must be positive");
  FourierSeries s;
  s.a0 = 2.0 * q.mean();
  s.b.assign(N, 0.0);
  const Interval sup = q.support();
  const double scale = std::max({1.0, std::abs(sup.lo), std::abs(sup.hi)});
  if (std::abs(s.a0) > 1e-6 * scale)
    throw spec_error("target is not centered: a0 = " + std::to_string(s.a0));

  if (q.has_segments()) {
    const auto& segs = q.segments();
    if (q.is_uniform_staircase() && segs.size() >= 64) {
      s.a = staircase_fast(segs, N);
      return s;
    }
    s.a.assign(N, 0.0);
    for (std::size_t n = 1; n <= N; ++n) {
      const double k = static_cast<double>(n) * kPi;
      double acc = 0.0;
      for (const QuantileSegment& seg : segs) acc += segment_integral(seg, k);
      s.a[n - 1] = 2.0 * acc;
    }
    return s;
  }

  s.a.assign(N, 0.0);
  double worst_gap = 0.0;
  for (std::size_t n = 1; n <= N; ++n)
    s.a[n - 1] =
        2.0 * smooth_mode(q, static_cast<double>(n), q.knots(), cfg, &worst_gap);
  if (worst_gap > std::max(cfg.tol * 100.0, 1e-10) * scale)
    throw std::runtime_error(
        "gross_coefficients: quadrature did not converge between knots (gap " +
        std::to_string(worst_gap) + ")");
  return s;
}

}  // namespace skorokhod
