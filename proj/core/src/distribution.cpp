#include "skorokhod/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "skorokhod/errors.hpp"

namespace skorokhod {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

constexpr double kProbSlack = 1e-12;

bool all_finite(std::initializer_list<double> xs) {
  for (double x : xs)
    if (!std::isfinite(x)) return false;
  return true;
}

// Structural parameter check only; centering and variance belong to validate().
std::optional<std::string> param_error(const Law& law) {
  return std::visit(
      overloaded{
          [](const Uniform& u) -> std::optional<std::string> {
            if (!all_finite({u.a, u.b})) return "unbounded or non-finite endpoints";
            if (!(u.a < u.b)) return "uniform requires a < b";
            return std::nullopt;
          },
          [](const Arcsine& s) -> std::optional<std::string> {
            if (!all_finite({s.center, s.halfwidth})) return "unbounded or non-finite parameters";
            if (!(s.halfwidth > 0.0)) return "arcsine requires halfwidth > 0";
            return std::nullopt;
          },
          [](const TwoPoint& t) -> std::optional<std::string> {
            if (!all_finite({t.x1, t.p1, t.x2})) return "non-finite parameters";
            if (!(t.p1 > 0.0 && t.p1 < 1.0)) return "two_point requires p1 in (0,1)";
            return std::nullopt;
          },
          [](const Atomic& a) -> std::optional<std::string> {
            if (a.atoms.size() < 2) return "atomic requires at least two atoms";
            double total = 0.0;
            for (const Atom& atom : a.atoms) {
              if (!all_finite({atom.x, atom.p})) return "non-finite atom";
              if (!(atom.p > 0.0)) return "atom probabilities must be positive";
              total += atom.p;
            }
            if (std::abs(total - 1.0) > kProbSlack)
              return "atom probabilities sum to " + num(total) + ", not 1";
            std::vector<double> xs;
            xs.reserve(a.atoms.size());
            for (const Atom& atom : a.atoms) xs.push_back(atom.x);
            std::sort(xs.begin(), xs.end());
            if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
              return "duplicate atom locations";
            return std::nullopt;
          },
          [](const CdfTable& t) -> std::optional<std::string> {
            if (t.points.size() < 2) return "cdf_table requires at least two points";
            for (const CdfPoint& p : t.points)
              if (!all_finite({p.x, p.F})) return "non-finite table entry";
            for (std::size_t i = 1; i < t.points.size(); ++i) {
              if (t.points[i].x < t.points[i - 1].x) return "table x values decrease";
              if (t.points[i].F < t.points[i - 1].F) return "table CDF values decrease";
            }
            if (t.points.front().F < -kProbSlack) return "table CDF starts below 0";
            if (std::abs(t.points.back().F - 1.0) > kProbSlack)
              return "table CDF ends at " + num(t.points.back().F) + ", not 1";
            return std::nullopt;
          },
          [](const Empirical& e) -> std::optional<std::string> {
            if (e.samples.size() < 2) return "empirical requires at least two samples";
            for (double x : e.samples)
              if (!std::isfinite(x)) return "non-finite sample";
            return std::nullopt;
          },
      },
      law);
}

void ensure_params(const DistributionSpec& spec) {
  if (auto err = param_error(spec.law)) throw spec_error(kind_name(spec) + ": " + *err);
}

std::vector<Atom> sorted_atoms(const Atomic& a) {
  std::vector<Atom> atoms = a.atoms;
  std::sort(atoms.begin(), atoms.end(), [](const Atom& l, const Atom& r) { return l.x < r.x; });
  return atoms;
}

Atomic as_atomic(const TwoPoint& t) {
  Atomic a;
  a.atoms = {{t.x1, t.p1}, {t.x2, 1.0 - t.p1}};
  return a;
}

// Quantile pieces for a table: a CDF jump is an atom (constant piece), a
// linear CDF stretch is a linear piece, a flat CDF stretch is a hole in the
// support and contributes no piece (Q jumps there).
std::vector<QuantileSegment> table_segments(const CdfTable& table) {
  std::vector<QuantileSegment> segs;
  const auto& pts = table.points;
  if (pts.front().F > kProbSlack)
    segs.push_back({0.0, pts.front().F, pts.front().x, pts.front().x});
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const CdfPoint& l = pts[i - 1];
    const CdfPoint& r = pts[i];
    if (r.F > l.F) segs.push_back({l.F, r.F, r.x == l.x ? r.x : l.x, r.x});
  }
  if (segs.empty()) throw spec_error("cdf_table carries no probability mass");
  segs.front().u_lo = 0.0;
  segs.back().u_hi = 1.0;
  // close tiny float gaps between consecutive pieces
  for (std::size_t i = 1; i < segs.size(); ++i) segs[i].u_lo = segs[i - 1].u_hi;
  return segs;
}

Moments segment_moments(const std::vector<QuantileSegment>& segs) {
  double m1 = 0.0, m2 = 0.0;
  for (const QuantileSegment& s : segs) {
    const double du = s.u_hi - s.u_lo;
    m1 += du * 0.5 * (s.x_lo + s.x_hi);
    m2 += du * (s.x_lo * s.x_lo + s.x_lo * s.x_hi + s.x_hi * s.x_hi) / 3.0;
  }
  return {m1, m2 - m1 * m1};
}

}  // namespace

// ---------------------------------------------------------------------------
// QuantileFn
// ---------------------------------------------------------------------------

QuantileFn QuantileFn::piecewise_linear(std::vector<QuantileSegment> segments) {
  if (segments.empty()) throw spec_error("quantile needs at least one segment");
  QuantileFn q;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const QuantileSegment& s = segments[i];
    if (!(s.u_hi > s.u_lo) || s.x_hi < s.x_lo)
      throw spec_error("malformed quantile segment");
    if (i > 0) {
      if (s.u_lo != segments[i - 1].u_hi || s.x_lo < segments[i - 1].x_hi)
        throw spec_error("quantile segments out of order");
      q.knots_.push_back(s.u_lo);
    }
  }
  if (segments.front().u_lo != 0.0 || segments.back().u_hi != 1.0)
    throw spec_error("quantile segments must cover (0,1)");
  q.support_ = {segments.front().x_lo, segments.back().x_hi};
  const Moments m = segment_moments(segments);
  q.mean_ = m.mean;
  q.segments_ = std::move(segments);
  return q;
}

QuantileFn QuantileFn::smooth(std::function<double(double)> eval, Interval support,
                              double mean) {
  QuantileFn q;
  q.eval_ = std::move(eval);
  q.support_ = support;
  q.mean_ = mean;
  return q;
}

double QuantileFn::operator()(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw spec_error("quantile argument outside [0,1]");
  if (!segments_.empty()) {
    if (u <= segments_.front().u_lo) return segments_.front().x_lo;
    // left-continuous: piece covering (u_lo, u_hi]
    auto it = std::partition_point(segments_.begin(), segments_.end(),
                                   [u](const QuantileSegment& s) { return s.u_hi < u; });
    if (it == segments_.end()) return segments_.back().x_hi;
    const QuantileSegment& s = *it;
    const double t = (u - s.u_lo) / (s.u_hi - s.u_lo);
    return s.x_lo + (s.x_hi - s.x_lo) * t;
  }
  return eval_(u);
}

bool QuantileFn::is_uniform_staircase() const {
  if (segments_.empty()) return false;
  const std::size_t k = segments_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const QuantileSegment& s = segments_[i];
    if (s.x_lo != s.x_hi) return false;
    const double expect = static_cast<double>(i + 1) / static_cast<double>(k);
    if (std::abs(s.u_hi - expect) > 4.0 * std::numeric_limits<double>::epsilon())
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

std::string kind_name(const DistributionSpec& spec) {
  return std::visit(overloaded{[](const Uniform&) { return std::string("uniform"); },
                               [](const Arcsine&) { return std::string("arcsine"); },
                               [](const TwoPoint&) { return std::string("two_point"); },
                               [](const Atomic&) { return std::string("atomic"); },
                               [](const CdfTable&) { return std::string("cdf_table"); },
                               [](const Empirical&) { return std::string("empirical"); }},
                    spec.law);
}

Moments moments(const DistributionSpec& spec) {
  ensure_params(spec);
  return std::visit(
      overloaded{
          [](const Uniform& u) -> Moments {
            const double m = 0.5 * (u.a + u.b);
            const double w = u.b - u.a;
            return {m, w * w / 12.0};
          },
          [](const Arcsine& s) -> Moments {
            return {s.center, 0.5 * s.halfwidth * s.halfwidth};
          },
          [](const TwoPoint& t) -> Moments {
            const double p2 = 1.0 - t.p1;
            const double m = t.p1 * t.x1 + p2 * t.x2;
            const double v = t.p1 * (t.x1 - m) * (t.x1 - m) + p2 * (t.x2 - m) * (t.x2 - m);
            return {m, v};
          },
          [](const Atomic& a) -> Moments {
            double m = 0.0, m2 = 0.0;
            for (const Atom& atom : a.atoms) {
              m += atom.p * atom.x;
              m2 += atom.p * atom.x * atom.x;
            }
            return {m, m2 - m * m};
          },
          [](const CdfTable& t) -> Moments { return segment_moments(table_segments(t)); },
          [](const Empirical& e) -> Moments {
            double m = 0.0;
            for (double x : e.samples) m += x;
            m /= static_cast<double>(e.samples.size());
            double v = 0.0;
            for (double x : e.samples) v += (x - m) * (x - m);
            v /= static_cast<double>(e.samples.size());
            return {m, v};
          },
      },
      spec.law);
}

Interval support(const DistributionSpec& spec) {
  ensure_params(spec);
  return std::visit(
      overloaded{
          [](const Uniform& u) -> Interval { return {u.a, u.b}; },
          [](const Arcsine& s) -> Interval {
            return {s.center - s.halfwidth, s.center + s.halfwidth};
          },
          [](const TwoPoint& t) -> Interval {
            return {std::min(t.x1, t.x2), std::max(t.x1, t.x2)};
          },
          [](const Atomic& a) -> Interval {
            const std::vector<Atom> atoms = sorted_atoms(a);
            return {atoms.front().x, atoms.back().x};
          },
          [](const CdfTable& t) -> Interval {
            const auto segs = table_segments(t);
            return {segs.front().x_lo, segs.back().x_hi};
          },
          [](const Empirical& e) -> Interval {
            auto [lo, hi] = std::minmax_element(e.samples.begin(), e.samples.end());
            return {*lo, *hi};
          },
      },
      spec.law);
}

QuantileFn quantile(const DistributionSpec& spec) {
  ensure_params(spec);
  return std::visit(
      overloaded{
          [](const Uniform& u) {
            return QuantileFn::piecewise_linear({{0.0, 1.0, u.a, u.b}});
          },
          [](const Arcsine& s) {
            const double c = s.center, h = s.halfwidth;
            return QuantileFn::smooth(
                [c, h](double u) { return c - h * std::cos(std::numbers::pi * u); },
                {c - h, c + h}, c);
          },
          [](const TwoPoint& t) { return quantile({Atomic{as_atomic(t)}}); },
          [](const Atomic& a) {
            std::vector<QuantileSegment> segs;
            double acc = 0.0;
            const std::vector<Atom> atoms = sorted_atoms(a);
            for (std::size_t i = 0; i < atoms.size(); ++i) {
              const double next = (i + 1 == atoms.size()) ? 1.0 : acc + atoms[i].p;
              segs.push_back({acc, next, atoms[i].x, atoms[i].x});
              acc = next;
            }
            return QuantileFn::piecewise_linear(std::move(segs));
          },
          [](const CdfTable& t) { return QuantileFn::piecewise_linear(table_segments(t)); },
          [](const Empirical& e) {
            return QuantileFn::piecewise_linear(
                table_segments(empirical_from_samples(e.samples)));
          },
      },
      spec.law);
}

double quantile_from_cdf(const CdfTable& table, double u) {
  if (auto err = param_error(Law{table})) throw spec_error("cdf_table: " + *err);
  if (!(u > 0.0 && u < 1.0)) throw spec_error("quantile argument outside (0,1)");
  const auto& pts = table.points;
  auto it = std::partition_point(pts.begin(), pts.end(),
                                 [u](const CdfPoint& p) { return p.F < u; });
  if (it == pts.end()) return pts.back().x;
  if (it == pts.begin()) return it->x;
  const CdfPoint& r = *it;
  const CdfPoint& l = *(it - 1);  // l.F < u <= r.F
  if (r.x == l.x || r.F == l.F) return r.x;
  return l.x + (r.x - l.x) * (u - l.F) / (r.F - l.F);
}

CdfTable empirical_from_samples(std::vector<double> samples) {
  if (samples.size() < 2) throw spec_error("empirical requires at least two samples");
  for (double x : samples)
    if (!std::isfinite(x)) throw spec_error("non-finite sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  CdfTable table;
  double below = 0.0;
  for (std::size_t i = 0; i < samples.size();) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    const double upto = (j == samples.size()) ? 1.0 : static_cast<double>(j) / n;
    table.points.push_back({samples[i], below});
    table.points.push_back({samples[i], upto});
    below = upto;
    i = j;
  }
  return table;
}

namespace {

double table_cdf(const std::vector<CdfPoint>& pts, double x, bool left_limit) {
  if (pts.empty()) return 0.0;
  auto at_or_after = std::partition_point(
      pts.begin(), pts.end(), [x, left_limit](const CdfPoint& p) {
        return left_limit ? p.x < x : p.x <= x;
      });
  // at_or_after = first point with p.x >= x (or > x when not a left limit)
  if (at_or_after == pts.begin()) return 0.0;
  const CdfPoint& l = *(at_or_after - 1);
  if (at_or_after == pts.end()) return l.F;
  const CdfPoint& r = *at_or_after;
  if (r.x == l.x) return l.F;
  const double t = (x - l.x) / (r.x - l.x);
  return l.F + (r.F - l.F) * std::clamp(t, 0.0, 1.0);
}

CdfTable law_table(const Law& law) {
  if (const auto* t = std::get_if<CdfTable>(&law)) return *t;
  if (const auto* e = std::get_if<Empirical>(&law)) return empirical_from_samples(e->samples);
  CdfTable table;
  const Atomic atomic =
      std::holds_alternative<TwoPoint>(law) ? as_atomic(std::get<TwoPoint>(law)) : std::get<Atomic>(law);
  double acc = 0.0;
  for (const Atom& atom : sorted_atoms(atomic)) {
    table.points.push_back({atom.x, acc});
    acc += atom.p;
    table.points.push_back({atom.x, std::min(acc, 1.0)});
  }
  table.points.back().F = 1.0;
  return table;
}

}  // namespace

double cdf(const DistributionSpec& spec, double x) {
  ensure_params(spec);
  return std::visit(
      overloaded{
          [x](const Uniform& u) { return std::clamp((x - u.a) / (u.b - u.a), 0.0, 1.0); },
          [x](const Arcsine& s) {
            const double t = (x - s.center) / s.halfwidth;
            if (t <= -1.0) return 0.0;
            if (t >= 1.0) return 1.0;
            return 0.5 + std::asin(t) / std::numbers::pi;
          },
          [x, &spec](const auto&) { return table_cdf(law_table(spec.law).points, x, false); },
      },
      spec.law);
}

double cdf_left(const DistributionSpec& spec, double x) {
  ensure_params(spec);
  if (std::holds_alternative<Uniform>(spec.law) || std::holds_alternative<Arcsine>(spec.law))
    return cdf(spec, x);
  return table_cdf(law_table(spec.law).points, x, true);
}

std::optional<std::function<double(double)>> density(const DistributionSpec& spec) {
  ensure_params(spec);
  if (const auto* u = std::get_if<Uniform>(&spec.law)) {
    const double a = u->a, b = u->b;
    return [a, b](double x) { return (x > a && x < b) ? 1.0 / (b - a) : 0.0; };
  }
  if (const auto* s = std::get_if<Arcsine>(&spec.law)) {
    const double c = s->center, h = s->halfwidth;
    return [c, h](double x) {
      const double d = h * h - (x - c) * (x - c);
      return d > 0.0 ? 1.0 / (std::numbers::pi * std::sqrt(d)) : 0.0;
    };
  }
  return std::nullopt;
}

DistributionSpec auto_centered(const DistributionSpec& spec) {
  const double m = moments(spec).mean;
  DistributionSpec out = spec;
  std::visit(overloaded{[m](Uniform& u) {
                          u.a -= m;
                          u.b -= m;
                        },
                        [m](Arcsine& s) { s.center -= m; },
                        [m](TwoPoint& t) {
                          t.x1 -= m;
                          t.x2 -= m;
                        },
                        [m](Atomic& a) {
                          for (Atom& atom : a.atoms) atom.x -= m;
                        },
                        [m](CdfTable& t) {
                          for (CdfPoint& p : t.points) p.x -= m;
                        },
                        [m](Empirical& e) {
                          for (double& x : e.samples) x -= m;
                        }},
             out.law);
  return out;
}

ValidationReport validate(const DistributionSpec& spec) {
  ValidationReport report;
  if (auto err = param_error(spec.law)) {
    report.reason = kind_name(spec) + ": " + *err;
    return report;
  }
  const Moments m = moments(spec);
  const Interval sup = support(spec);
  report.mean = m.mean;
  report.variance = m.variance;
  report.support = sup;
  report.bounded = std::isfinite(sup.lo) && std::isfinite(sup.hi);
  if (!report.bounded) {
    report.reason = "unbounded support";
    return report;
  }
  if (!(m.variance > 0.0)) {
    report.reason = "zero variance (degenerate law)";
    return report;
  }
  double tol = spec.mean_tolerance;
  if (tol <= 0.0) {
    tol = 1e-9;
    if (const auto* e = std::get_if<Empirical>(&spec.law))
      tol = 3.0 * std::sqrt(m.variance / static_cast<double>(e->samples.size()));
  }
  if (std::abs(m.mean) > tol) {
    report.reason = "mean " + num(m.mean) + " exceeds tolerance " + num(tol);
    return report;
  }
  report.pass = true;
  return report;
}

}  // namespace skorokhod
