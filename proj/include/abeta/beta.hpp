#ifndef ABETA_BETA_HPP
#define ABETA_BETA_HPP

#include <cmath>
#include <string>

#include "abeta/errors.hpp"

namespace abeta {

/// Filtration parameter of the class A_beta, always in [0, 1].
class BetaParam {
 public:
  constexpr BetaParam() = default;

  explicit BetaParam(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw DomainError("beta must lie in [0, 1], got " + std::to_string(value));
    }
  }

  constexpr double value() const noexcept { return value_; }

  /// 1 - beta, the slope of the coefficient denominators n - beta (n - 1).
  constexpr double slope() const noexcept { return 1.0 - value_; }

  constexpr bool is_one() const noexcept { return value_ == 1.0; }

  friend constexpr bool operator==(BetaParam, BetaParam) = default;

 private:
  double value_ = 0.0;
};

/// Radius equations need a finite boundary value at -1, which only exists for
/// beta < 1.
inline void require_radius_beta(BetaParam beta) {
  if (beta.is_one()) {
    throw DomainError("beta = 1 is not admissible here: the extremal function "
                      "has no finite boundary value at -1");
  }
}

/// Denominator n - beta (n - 1) of the sharp coefficient bound.
constexpr double coefficient_denominator(long n, BetaParam beta) noexcept {
  return beta.slope() * static_cast<double>(n) + beta.value();
}

}  // namespace abeta

#endif  // ABETA_BETA_HPP
