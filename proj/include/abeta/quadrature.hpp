#ifndef ABETA_QUADRATURE_HPP
#define ABETA_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "abeta/errors.hpp"

namespace abeta::quadrature {

/// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendreRule {
 public:
  explicit GaussLegendreRule(int points) {
    if (points < 1) throw DomainError("Gauss-Legendre rule needs at least one point");
    nodes_.assign(static_cast<std::size_t>(points), 0.0);
    weights_.assign(static_cast<std::size_t>(points), 2.0);
    if (points == 1) return;
    const int half = (points + 1) / 2;
    for (int i = 0; i < half; ++i) {
      // Tricomi's initial guess, then Newton on P_n.
      double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        const auto [pn, pn1] = legendre_pair(points, x);
        dp = points * (x * pn - pn1) / (x * x - 1.0);
        const double dx = pn / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      const auto [pn, pn1] = legendre_pair(points, x);
      dp = points * (x * pn - pn1) / (x * x - 1.0);
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      const auto lo = static_cast<std::size_t>(i);
      const auto hi = static_cast<std::size_t>(points - 1 - i);
      nodes_[lo] = -x;
      nodes_[hi] = x;
      weights_[lo] = w;
      weights_[hi] = w;
    }
  }

  int points() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  template <class F>
  double apply(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      sum += weights_[i] * f(mid + half * nodes_[i]);
    }
    return half * sum;
  }

 private:
  // (P_n(x), P_{n-1}(x)) by the three-term recurrence.
  static std::pair<double, double> legendre_pair(int n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    return {p1, p0};
  }

  std::vector<double> nodes_;
  std::vector<double> weights_;
};

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;  // sum of per-panel |coarse - refined| differences
};

namespace detail {

template <class F>
void adaptive_panel(const GaussLegendreRule& rule, F& f, double a, double b, double whole,
                    double tol, int depth, IntegralEstimate& acc) {
  const double mid = 0.5 * (a + b);
  const double left = rule.apply(f, a, mid);
  const double right = rule.apply(f, mid, b);
  const double diff = std::abs(left + right - whole);
  // Panels whose disagreement is at rounding level cannot be refined further.
  const double floor =
      64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
  const double accept = std::max(tol, floor);
  if (diff <= accept || depth <= 0 || mid <= a || mid >= b) {
    if (diff > accept) {
      throw ConvergenceError("adaptive quadrature exhausted its subdivision depth");
    }
    acc.value += left + right;
    acc.error += diff;
    return;
  }
  adaptive_panel(rule, f, a, mid, left, 0.5 * tol, depth - 1, acc);
  adaptive_panel(rule, f, mid, b, right, 0.5 * tol, depth - 1, acc);
}

}  // namespace detail

/// Adaptive composite Gauss-Legendre quadrature of f over [a, b].
///
/// Each panel is compared against the sum of its two halves and bisected until
/// the difference is below its share of `tol`. Throws ConvergenceError if a
/// panel still disagrees after `max_depth` bisections.
template <class F>
IntegralEstimate integrate(F&& f, double a, double b, const GaussLegendreRule& rule,
                           double tol, int max_depth = 48) {
  IntegralEstimate acc;
  if (a == b) return acc;
  const double whole = rule.apply(f, a, b);
  detail::adaptive_panel(rule, f, a, b, whole, tol, max_depth, acc);
  return acc;
}

/// Same as integrate() but over a caller-supplied partition; the tolerance is
/// shared equally between panels.
template <class F>
IntegralEstimate integrate_partition(F&& f, const std::vector<double>& breaks,
                                     const GaussLegendreRule& rule, double tol,
                                     int max_depth = 48) {
  IntegralEstimate acc;
  if (breaks.size() < 2) return acc;
  const double share = tol / static_cast<double>(breaks.size() - 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const auto panel = integrate(f, breaks[i], breaks[i + 1], rule, share, max_depth);
    acc.value += panel.value;
    acc.error += panel.error;
  }
  return acc;
}

}  // namespace abeta::quadrature

#endif  // ABETA_QUADRATURE_HPP
