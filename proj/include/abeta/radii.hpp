#ifndef ABETA_RADII_HPP
#define ABETA_RADII_HPP

// Sharp Bohr and Bohr-Rogosinski radii for A_beta with a monotone functional of
// the normalized area S_r/pi.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abeta/beta.hpp"
#include "abeta/errors.hpp"
#include "abeta/extremal.hpp"
#include "abeta/root_finding.hpp"

namespace abeta {

/// F(w) = lambda_1 w + ... + lambda_k w^k with nonnegative lambdas; the empty
/// polynomial is F = 0.
class AreaPolynomial {
 public:
  AreaPolynomial() = default;

  explicit AreaPolynomial(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
    for (std::size_t j = 0; j < lambdas_.size(); ++j) {
      if (!(lambdas_[j] >= 0.0) || !std::isfinite(lambdas_[j])) {
        throw DomainError("AreaPolynomial: lambda_" + std::to_string(j + 1) +
                          " must be a finite nonnegative number");
      }
    }
  }

  const std::vector<double>& lambdas() const noexcept { return lambdas_; }
  int degree() const noexcept { return static_cast<int>(lambdas_.size()); }

  bool is_zero() const noexcept {
    for (double l : lambdas_) {
      if (l != 0.0) return false;
    }
    return true;
  }

  double operator()(double w) const noexcept {
    double acc = 0.0;
    for (auto it = lambdas_.rbegin(); it != lambdas_.rend(); ++it) acc = (acc + *it) * w;
    return acc;
  }

 private:
  std::vector<double> lambdas_;
};

/// Monotone increasing map F: [0, inf) -> [0, inf) with F(0) = 0.
///
/// Polynomials with nonnegative coefficients satisfy the contract by
/// construction. For an arbitrary callable the contract is the caller's
/// obligation; custom() spot-checks it on a grid and rejects obvious
/// violations.
class AreaFunctional {
 public:
  AreaFunctional() : AreaFunctional(AreaPolynomial{}) {}

  AreaFunctional(AreaPolynomial poly)  // NOLINT(google-explicit-constructor)
      : poly_(std::move(poly)) {
    fn_ = [p = *poly_](double w) { return p(w); };
  }

  static AreaFunctional custom(std::function<double(double)> fn, double check_upto = 16.0,
                               int check_points = 257) {
    if (!fn) throw DomainError("AreaFunctional: empty callable");
    if (fn(0.0) != 0.0) throw DomainError("AreaFunctional: F(0) must be 0");
    double prev = 0.0;
    for (int i = 1; i < check_points; ++i) {
      const double w = check_upto * i / (check_points - 1);
      const double v = fn(w);
      if (!(v >= prev)) {
        throw DomainError("AreaFunctional: F is not monotone increasing near w = " +
                          std::to_string(w));
      }
      prev = v;
    }
    AreaFunctional out;
    out.fn_ = std::move(fn);
    out.poly_.reset();
    return out;
  }

  double operator()(double w) const { return fn_(w); }

  /// The polynomial this functional was built from, if any.
  const std::optional<AreaPolynomial>& polynomial() const noexcept { return poly_; }

  bool is_zero() const noexcept { return poly_ && poly_->is_zero(); }

 private:
  std::function<double(double)> fn_;
  std::optional<AreaPolynomial> poly_;
};

enum class RadiusVariant { BohrSchwarz, BohrRogosinski };

inline const char* variant_name(RadiusVariant v) noexcept {
  return v == RadiusVariant::BohrSchwarz ? "bohr" : "rogosinski";
}

struct RadiusProblem {
  RadiusVariant variant = RadiusVariant::BohrSchwarz;
  BetaParam beta{};
  int m = 1;
  double p = 1.0;
  int n_start = 1;  // N: first coefficient index kept in the Rogosinski tail
  AreaFunctional area{};

  void validate() const {
    require_radius_beta(beta);
    if (m < 1) throw DomainError("RadiusProblem: m must be >= 1");
    if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("RadiusProblem: p must be positive");
    if (n_start < 1) throw DomainError("RadiusProblem: N must be >= 1");
  }
};

/// f^(r): r + sum_{n=2}^{N-1} 2/(n - beta(n-1)) r^n, the part of f~ dropped
/// from the Rogosinski tail (0 for N = 1, r for N = 2).
inline double hat_f(int n_start, BetaParam beta, double r) {
  if (n_start < 1) throw DomainError("hat_f: N must be >= 1");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("hat_f: r must lie in [0, 1)");
  if (n_start == 1) return 0.0;
  double sum = r;
  double power = r;
  for (int n = 2; n <= n_start - 1; ++n) {
    power *= r;
    sum += extremal_coeff(n, beta) * power;
  }
  return sum;
}

/// Left side of a radius equation, with f~(-1) evaluated once.
///
/// BohrSchwarz:    H(r) = r^{pm} + f~(r) - r + F(A(r)) + f~(-1)
/// BohrRogosinski: G(r) = f~(r^m)^p + f~(r) - f^(r) + F(A(r)) + f~(-1)
/// where A is area_majorant. Both are strictly increasing on (0, 1), tend to
/// f~(-1) < 0 as r -> 0 and to +inf as r -> 1.
class RadiusEquation {
 public:
  explicit RadiusEquation(RadiusProblem problem, ExtremalEvalConfig cfg = {})
      : problem_(std::move(problem)), cfg_(cfg) {
    problem_.validate();
    cfg_.validate();
    boundary_ = extremal_at_minus_one(problem_.beta, cfg_);
  }

  const RadiusProblem& problem() const noexcept { return problem_; }
  const ExtremalEvalConfig& config() const noexcept { return cfg_; }

  /// f~(-1); the limit of the equation as r -> 0+.
  double boundary_value() const noexcept { return boundary_; }

  double operator()(double r) const {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("radius equation: r must lie in (0, 1)");
    const BetaParam beta = problem_.beta;
    const double f_r = eval_extremal(r, beta, cfg_);
    const double area =
        problem_.area.is_zero() ? 0.0 : problem_.area(area_majorant(r, beta, cfg_));
    double lead = 0.0;
    double dropped = 0.0;
    if (problem_.variant == RadiusVariant::BohrSchwarz) {
      lead = std::pow(r, problem_.p * problem_.m);
      dropped = r;
    } else {
      const double inner = eval_extremal(std::pow(r, problem_.m), beta, cfg_);
      lead = std::pow(inner, problem_.p);
      dropped = hat_f(problem_.n_start, beta, r);
    }
    return lead + (f_r - dropped) + area + boundary_;
  }

 private:
  RadiusProblem problem_;
  ExtremalEvalConfig cfg_;
  double boundary_ = 0.0;
};

inline double equation_bohr(const RadiusProblem& problem, double r,
                            const ExtremalEvalConfig& cfg = {}) {
  if (problem.variant != RadiusVariant::BohrSchwarz) {
    throw DomainError("equation_bohr: problem is not a Bohr problem");
  }
  return RadiusEquation(problem, cfg)(r);
}

inline double equation_rogosinski(const RadiusProblem& problem, double r,
                                  const ExtremalEvalConfig& cfg = {}) {
  if (problem.variant != RadiusVariant::BohrRogosinski) {
    throw DomainError("equation_rogosinski: problem is not a Bohr-Rogosinski problem");
  }
  return RadiusEquation(problem, cfg)(r);
}

inline constexpr double kDefaultRadiusTolerance = 1e-10;
inline constexpr double kRadiusBracketCap = 1.0 - 1e-8;

/// Unique root in (0, 1) of an already-built radius equation.
inline RootResult solve_radius(const RadiusEquation& eq, double tol = kDefaultRadiusTolerance) {
  if (!(tol > 0.0 && tol < 0.5)) throw DomainError("solve_radius: tol must lie in (0, 0.5)");
  const double lo = tol;
  const double f_lo = eq(lo);
  if (!(f_lo < 0.0)) {
    throw ConvergenceError("solve_radius: equation is not negative near 0 (value " +
                           std::to_string(f_lo) + ")");
  }
  // Walk the upper end toward 1 by halving the gap; every rejected point
  // becomes the new lower end.
  double bracket_lo = lo;
  double bracket_f_lo = f_lo;
  double hi = 0.5;
  double f_hi = eq(hi);
  while (!(f_hi > 0.0)) {
    bracket_lo = hi;
    bracket_f_lo = f_hi;
    if (hi >= kRadiusBracketCap) {
      throw ConvergenceError("solve_radius: no sign change below 1 - 1e-8");
    }
    hi = std::min(kRadiusBracketCap, 1.0 - 0.5 * (1.0 - hi));
    f_hi = eq(hi);
  }
  if (bracket_f_lo == 0.0) {
    // Only reachable if the equation vanishes exactly at a probe point.
    bracket_lo = std::max(lo, bracket_lo - tol);
    bracket_f_lo = eq(bracket_lo);
  }
  return refine_bracket(eq, bracket_lo, bracket_f_lo, hi, f_hi, tol);
}

inline RootResult solve_radius(const RadiusProblem& problem,
                               double tol = kDefaultRadiusTolerance,
                               const ExtremalEvalConfig& cfg = {}) {
  return solve_radius(RadiusEquation(problem, cfg), tol);
}

/// Baseline Bohr radius without area term and with p = 1: root of
/// r^m + f~(r) - r + f~(-1) = 0.
inline RootResult baseline_bohr_radius(BetaParam beta, int m,
                                           double tol = kDefaultRadiusTolerance,
                                           const ExtremalEvalConfig& cfg = {}) {
  RadiusProblem problem;
  problem.variant = RadiusVariant::BohrSchwarz;
  problem.beta = beta;
  problem.m = m;
  return solve_radius(problem, tol, cfg);
}

/// Baseline Bohr-Rogosinski radius: root of f~(r^m) + f~(r) - f^(r) + f~(-1) = 0.
inline RootResult baseline_rogosinski_radius(BetaParam beta, int m, int n_start,
                                           double tol = kDefaultRadiusTolerance,
                                           const ExtremalEvalConfig& cfg = {}) {
  RadiusProblem problem;
  problem.variant = RadiusVariant::BohrRogosinski;
  problem.beta = beta;
  problem.m = m;
  problem.n_start = n_start;
  return solve_radius(problem, tol, cfg);
}

}  // namespace abeta

#endif  // ABETA_RADII_HPP
