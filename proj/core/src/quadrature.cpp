#include "skorokhod/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace skorokhod {
namespace {

struct GlRule {
  std::vector<double> node;    // on (-1, 1), symmetric
  std::vector<double> weight;
};

// Legendre nodes by Newton iteration on P_n, weights 2 / ((1-x^2) P_n'(x)^2).
GlRule build_rule(int n) {
  GlRule rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.node[i] = -x;
    rule.node[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weight[i] = w;
    rule.weight[n - 1 - i] = w;
  }
  return rule;
}

const GlRule& rule_for(int points) {
  static std::map<int, GlRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(points);
  if (it == cache.end()) it = cache.emplace(points, build_rule(points)).first;
  return it->second;
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double whole, double tol, int depth, const QuadConfig& cfg,
           QuadResult& out) {
  const double m = 0.5 * (a + b);
  const double left = gauss_panel(f, a, m, cfg.points);
  const double right = gauss_panel(f, m, b, cfg.points);
  const double gap = std::abs(left + right - whole);
  if (gap <= tol || depth >= cfg.max_depth) {
    out.value += left + right;
    out.error_estimate += gap;
    if (gap > tol) out.converged = false;
    return;
  }
  adapt(f, a, m, left, 0.5 * tol, depth + 1, cfg, out);
  adapt(f, m, b, right, 0.5 * tol, depth + 1, cfg, out);
}

}  // namespace

double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   int points) {
  if (points < 1) throw std::invalid_argument("gauss_panel: points < 1");
  const GlRule& rule = rule_for(points);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < points; ++i)
    sum += rule.weight[i] * f(mid + half * rule.node[i]);
  return half * sum;
}

QuadResult adaptive_gauss(const std::function<double(double)>& f, double a,
                          double b, const QuadConfig& cfg) {
  QuadResult out;
  if (a == b) return out;
  adapt(f, a, b, gauss_panel(f, a, b, cfg.points), cfg.tol, 0, cfg, out);
  return out;
}

}  // namespace skorokhod
