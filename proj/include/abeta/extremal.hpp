#ifndef ABETA_EXTREMAL_HPP
#define ABETA_EXTREMAL_HPP

// The extremal member f~(z) = z + sum_{n>=2} 2/(n - beta(n-1)) z^n of A_beta,
// its boundary value at -1 and the majorant of the normalized area functional.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "abeta/beta.hpp"
#include "abeta/errors.hpp"
#include "abeta/quadrature.hpp"

namespace abeta {

struct ExtremalEvalConfig {
  double tolerance = 1e-13;  // absolute truncation target
  long max_terms = 100'000'000;
  int quadrature_points = 20;

  void validate() const {
    if (!(tolerance > 0.0)) throw DomainError("ExtremalEvalConfig: tolerance must be positive");
    if (max_terms < 8) throw DomainError("ExtremalEvalConfig: max_terms must be at least 8");
    if (quadrature_points < 1) {
      throw DomainError("ExtremalEvalConfig: quadrature_points must be positive");
    }
  }
};

/// A truncated series value together with a rigorous bound on the omitted tail.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  long terms = 0;
};

/// Sharp coefficient bound |a_n| <= 2/(n - beta(n-1)); equals 1 at n = 1.
inline double extremal_coeff(long n, BetaParam beta) {
  if (n < 1) throw DomainError("extremal_coeff: n must be >= 1");
  if (n == 1) return 1.0;
  return 2.0 / (beta.slope() * static_cast<double>(n) + beta.value());
}

/// Upper bound for sum_{n > last} extremal_coeff(n) |r|^n.
///
/// The coefficients are nonincreasing in n for every beta in [0, 1], so the
/// tail is dominated by a geometric series started at index last + 1.
inline double extremal_tail_bound(long last, BetaParam beta, double r) {
  const double ar = std::abs(r);
  if (ar >= 1.0) return std::numeric_limits<double>::infinity();
  if (ar == 0.0) return 0.0;
  const long next = std::max(last + 1, 2L);
  return extremal_coeff(next, beta) * std::pow(ar, static_cast<double>(next)) / (1.0 - ar);
}

namespace detail {

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline void require_open_disk(double r, const char* op) {
  if (!(std::abs(r) < 1.0)) {
    throw DomainError(std::string(op) + ": argument must satisfy |r| < 1");
  }
}

}  // namespace detail

/// f~(r) with a certified truncation bound.
inline SeriesValue eval_extremal_certified(double r, BetaParam beta,
                                           const ExtremalEvalConfig& cfg = {}) {
  cfg.validate();
  detail::require_open_disk(r, "eval_extremal");
  SeriesValue out;
  if (r == 0.0) return out;
  const double ar = std::abs(r);
  detail::CompensatedSum sum;
  double power = r;  // r^n
  for (long n = 1;; ++n) {
    sum.add(extremal_coeff(n, beta) * power);
    power *= r;
    const double tail = extremal_coeff(n + 1, beta) * std::abs(power) / (1.0 - ar);
    if (tail <= cfg.tolerance) {
      out.value = sum.value();
      out.tail_bound = tail;
      out.terms = n;
      return out;
    }
    if (n >= cfg.max_terms) {
      throw ConvergenceError("eval_extremal: tail bound " + std::to_string(tail) +
                             " above tolerance after max_terms terms at r = " +
                             std::to_string(r));
    }
  }
}

inline double eval_extremal(double r, BetaParam beta, const ExtremalEvalConfig& cfg = {}) {
  return eval_extremal_certified(r, beta, cfg).value;
}

/// f~(-1) = -int_0^1 (1 - t^{1-beta}) / (1 + t^{1-beta}) dt, defined for beta < 1.
///
/// With u = t^{1-beta} the integrand is (1-u)/(1+u), whose t-derivative is
/// unbounded at 0 when beta > 0. The piece [0, eps] with eps^{1-beta} = 1/4 is
/// integrated term by term from (1-u)/(1+u) = 1 + 2 sum_k (-u)^k; [eps, 1] is
/// split dyadically and integrated with adaptive Gauss-Legendre panels.
inline double extremal_at_minus_one(BetaParam beta, const ExtremalEvalConfig& cfg = {}) {
  cfg.validate();
  require_radius_beta(beta);
  const double a = beta.slope();
  const auto integrand = [a](double t) {
    const double u = std::pow(t, a);
    return (1.0 - u) / (1.0 + u);
  };

  // Below this cut-off the integrand (bounded by 1) contributes less than
  // the cut-off itself, far below any useful tolerance.
  constexpr double kSmallest = 1e-300;
  double eps = std::exp(-std::log(4.0) / a);
  double head = 0.0;
  if (eps < kSmallest) {
    eps = kSmallest;
  } else {
    // int_0^eps t^{ka} dt = eps^{ka+1}/(ka+1), and eps^a = 1/4.
    detail::CompensatedSum s;
    s.add(eps);
    double u_power = 1.0;
    for (int k = 1; k < 200; ++k) {
      u_power *= -0.25;
      const double term = 2.0 * eps * u_power / (k * a + 1.0);
      s.add(term);
      if (std::abs(term) < 1e-3 * cfg.tolerance * eps) break;
    }
    head = s.value();
  }

  std::vector<double> breaks{eps};
  for (double x = std::ldexp(1.0, std::ilogb(eps) + 1); x < 1.0; x *= 2.0) {
    breaks.push_back(x);
  }
  breaks.push_back(1.0);

  const quadrature::GaussLegendreRule rule(cfg.quadrature_points);
  const auto body = quadrature::integrate_partition(integrand, breaks, rule, cfg.tolerance);
  return -(head + body.value);
}

/// Majorant r^2 + sum_{n>=2} 4n/(n - beta(n-1))^2 r^{2n} of the normalized area
/// S_r/pi, with a certified tail bound.
///
/// With x = r^2 and b_n = 4n/(n - beta(n-1))^2 the ratio b_{n+1}/b_n never
/// exceeds (n+1)/n, so past index N the tail is dominated by a geometric series
/// of ratio x (N+2)/(N+1). This holds for beta = 1 as well.
inline SeriesValue area_majorant_certified(double r, BetaParam beta,
                                           const ExtremalEvalConfig& cfg = {}) {
  cfg.validate();
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("area_majorant: r must lie in [0, 1)");
  SeriesValue out;
  if (r == 0.0) return out;
  const double x = r * r;
  const auto coeff = [beta](long n) {
    const double d = coefficient_denominator(n, beta);
    return n == 1 ? 1.0 : 4.0 * static_cast<double>(n) / (d * d);
  };
  detail::CompensatedSum sum;
  double power = x;
  for (long n = 1;; ++n) {
    sum.add(coeff(n) * power);
    power *= x;
    const double ratio = x * static_cast<double>(n + 2) / static_cast<double>(n + 1);
    if (ratio < 1.0) {
      const double tail = coeff(n + 1) * power / (1.0 - ratio);
      if (tail <= cfg.tolerance) {
        out.value = sum.value();
        out.tail_bound = tail;
        out.terms = n;
        return out;
      }
    }
    if (n >= cfg.max_terms) {
      throw ConvergenceError("area_majorant: tail bound above tolerance after max_terms terms");
    }
  }
}

inline double area_majorant(double r, BetaParam beta, const ExtremalEvalConfig& cfg = {}) {
  return area_majorant_certified(r, beta, cfg).value;
}

/// Upper bound for sum_{n > last} n |a_n|^2 r^{2n} over all members of A_beta.
inline double area_tail_bound(long last, BetaParam beta, double r) {
  if (!(r >= 0.0 && r < 1.0)) return std::numeric_limits<double>::infinity();
  if (r == 0.0) return 0.0;
  const double x = r * r;
  const long next = std::max(last + 1, 2L);
  const double ratio = x * static_cast<double>(next + 1) / static_cast<double>(next);
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  const double d = coefficient_denominator(next, beta);
  const double term = 4.0 * static_cast<double>(next) / (d * d) *
                      std::pow(x, static_cast<double>(next));
  return term / (1.0 - ratio);
}

struct GrowthEnvelope {
  double lower = 0.0;  // -f~(-r)
  double upper = 0.0;  // f~(r)
};

/// Sharp growth bounds -f~(-r) <= |f(z)| <= f~(r) on |z| = r.
inline GrowthEnvelope growth_envelope(double r, BetaParam beta,
                                      const ExtremalEvalConfig& cfg = {}) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("growth_envelope: r must lie in [0, 1)");
  return {-eval_extremal(-r, beta, cfg), eval_extremal(r, beta, cfg)};
}

}  // namespace abeta

#endif  // ABETA_EXTREMAL_HPP
