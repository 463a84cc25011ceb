#ifndef ABETA_BOUNDS_HPP
#define ABETA_BOUNDS_HPP

// Sharp Fekete-Szego and logarithmic-coefficient bounds for A_beta, together
// with the two lemmas over the Caratheodory class that produce them.

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "abeta/beta.hpp"
#include "abeta/errors.hpp"

namespace abeta {

using cplx = std::complex<double>;

/// Sharp bound on |c_2 - v c_1^2| over the Caratheodory class.
inline double ma_minda_bound(double v) {
  if (!std::isfinite(v)) throw DomainError("ma_minda_bound: v must be finite");
  if (v < 0.0) return -4.0 * v + 2.0;
  if (v <= 1.0) return 2.0;
  return 4.0 * v - 2.0;
}

/// mu at which the Fekete-Szego bound switches from its middle to its upper
/// branch: (2 - beta)^2 / (3 - 2 beta).
inline double fekete_szego_upper_breakpoint(BetaParam beta) {
  const double b = beta.value();
  return (2.0 - b) * (2.0 - b) / (3.0 - 2.0 * b);
}

/// Sharp bound on |a_3 - mu a_2^2| over A_beta for real mu.
inline double fekete_szego_bound(double mu, BetaParam beta) {
  if (!std::isfinite(mu)) throw DomainError("fekete_szego_bound: mu must be a finite real");
  const double b = beta.value();
  const double denom = (3.0 - 2.0 * b) * (2.0 - b) * (2.0 - b);
  const double outer = ((8.0 - 12.0 * mu) + (8.0 * mu - 8.0) * b + 2.0 * b * b) / denom;
  if (mu < 0.0) return outer;
  if (mu <= fekete_szego_upper_breakpoint(beta)) return 2.0 / (3.0 - 2.0 * b);
  return -outer;
}

/// Coefficients of the functional |B_2 c_1^2 + B_3 c_2| - |B_1 c_1|.
struct PsiInputs {
  double b1 = 1.0;
  cplx b2{};
  double b3 = 0.0;

  /// |4 B_2 + 2 B_3|.
  double b4() const { return std::abs(4.0 * b2 + 2.0 * b3); }

  void validate() const {
    if (!(b1 > 0.0)) throw DomainError("PsiInputs: B1 must be positive");
  }
};

/// Which of the piecewise cases of the Psi bounds applies.
enum class PsiPlusBranch { Large, Default };
enum class PsiMinusBranch { Linear, Root, Rational };

inline PsiPlusBranch psi_plus_branch(const PsiInputs& b) {
  b.validate();
  return std::abs(2.0 * b.b2 + b.b3) >= std::abs(b.b3) + b.b1 ? PsiPlusBranch::Large
                                                               : PsiPlusBranch::Default;
}

inline PsiMinusBranch psi_minus_branch(const PsiInputs& b) {
  b.validate();
  const double s = b.b4() + 2.0 * std::abs(b.b3);
  if (b.b1 >= s) return PsiMinusBranch::Linear;
  if (b.b1 * b.b1 <= 2.0 * std::abs(b.b3) * s) return PsiMinusBranch::Root;
  return PsiMinusBranch::Rational;
}

/// Sharp upper bound of Psi_+ = |B_2 c_1^2 + B_3 c_2| - |B_1 c_1|.
inline double psi_plus_bound(const PsiInputs& b) {
  if (psi_plus_branch(b) == PsiPlusBranch::Large) return b.b4() - 2.0 * b.b1;
  return 2.0 * std::abs(b.b3);
}

/// Sharp upper bound of Psi_- = -Psi_+.
inline double psi_minus_bound(const PsiInputs& b) {
  const double a3 = std::abs(b.b3);
  const double s = b.b4() + 2.0 * a3;
  switch (psi_minus_branch(b)) {
    case PsiMinusBranch::Linear:
      return 2.0 * b.b1 - b.b4();
    case PsiMinusBranch::Root:
      return 2.0 * b.b1 * std::sqrt(2.0 * a3 / s);
    case PsiMinusBranch::Rational:
      break;
  }
  return 2.0 * a3 + b.b1 * b.b1 / s;
}

/// First two logarithmic coefficients, of f or of its inverse.
struct LogCoeffPair {
  cplx first{};
  cplx second{};

  /// |second| - |first|, the quantity bounded below.
  double modulus_difference() const { return std::abs(second) - std::abs(first); }
};

/// gamma_1, gamma_2 of log(f(z)/z) = 2 sum gamma_n z^n.
inline LogCoeffPair log_coeffs(cplx a2, cplx a3) {
  return {0.5 * a2, 0.5 * (a3 - 0.5 * a2 * a2)};
}

/// Second and third Taylor coefficients of the inverse function f^{-1}.
inline std::pair<cplx, cplx> inverse_coeffs(cplx a2, cplx a3) {
  return {-a2, -a3 + 2.0 * a2 * a2};
}

/// Gamma_1, Gamma_2 of log(f^{-1}(w)/w) = 2 sum Gamma_n w^n.
inline LogCoeffPair inverse_log_coeffs(cplx a2, cplx a3) {
  return {-0.5 * a2, -0.5 * (a3 - 1.5 * a2 * a2)};
}

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

/// Sharp bounds of |gamma_2| - |gamma_1| over A_beta.
inline BoundPair log_diff_bounds(BetaParam beta) {
  const double b = beta.value();
  return {-1.0 / std::sqrt(5.0 - 6.0 * b + 2.0 * b * b), 1.0 / (3.0 - 2.0 * b)};
}

/// Sharp bounds of |Gamma_2| - |Gamma_1| over A_beta.
///
/// The upper bound has a separate expression at beta = 1; both expressions
/// equal 1 there, so the first one is used on [0, 1) and the second only at
/// the endpoint.
inline BoundPair inverse_log_diff_bounds(BetaParam beta) {
  const double b = beta.value();
  const double lower = -1.0 / std::sqrt(3.0 * (3.0 - 2.0 * b));
  const double upper = beta.is_one()
                           ? (-1.0 + 5.0 * b - 3.0 * b * b) /
                                 ((2.0 - b) * (2.0 - b) * (3.0 - 2.0 * b))
                           : 1.0 / (3.0 - 2.0 * b);
  return {lower, upper};
}

/// |gamma_2| - |gamma_1| = Psi_+(c_1, c_2) / (2 (2 - beta)) with these inputs.
inline PsiInputs log_diff_psi_inputs(BetaParam beta) {
  const double b = beta.value();
  return {1.0, cplx(-1.0 / (2.0 * (2.0 - b))), (2.0 - b) / (3.0 - 2.0 * b)};
}

/// |Gamma_2| - |Gamma_1| = Psi_+(c_1, c_2) / (2 (2 - beta)) with these inputs.
inline PsiInputs inverse_log_diff_psi_inputs(BetaParam beta) {
  const double b = beta.value();
  return {1.0, cplx(3.0 / (2.0 * (2.0 - b))), -(2.0 - b) / (3.0 - 2.0 * b)};
}

/// Bounds obtained by pushing Psi inputs through psi_plus_bound and
/// psi_minus_bound and rescaling by 1/(2(2 - beta)).
inline BoundPair psi_pipeline_bounds(const PsiInputs& inputs, BetaParam beta) {
  const double scale = 1.0 / (2.0 * (2.0 - beta.value()));
  return {-scale * psi_minus_bound(inputs), scale * psi_plus_bound(inputs)};
}

}  // namespace abeta

#endif  // ABETA_BOUNDS_HPP
