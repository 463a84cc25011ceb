#ifndef ABETA_ROOT_FINDING_HPP
#define ABETA_ROOT_FINDING_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include "abeta/errors.hpp"

namespace abeta {

/// A root of a strictly increasing function certified by a sign-change bracket.
struct RootResult {
  double root = 0.0;
  double lo = 0.0;  // f(lo) < 0
  double hi = 0.0;  // f(hi) > 0
  double residual = 0.0;  // f(root)
  int iterations = 0;  // function evaluations spent inside the bracket

  double width() const noexcept { return hi - lo; }
};

/// Shrinks a sign-change bracket of a strictly increasing f until its width is
/// at most tol.
///
/// Steps are Illinois-modified regula falsi; whenever three consecutive steps
/// fail to halve the bracket the next step is a plain bisection, so the
/// iteration count never exceeds that of bisection by more than a constant
/// factor. The returned root is the midpoint of the final bracket.
template <class F>
RootResult refine_bracket(F&& f, double lo, double f_lo, double hi, double f_hi, double tol,
                          int max_iterations = 1000) {
  if (!(tol > 0.0)) throw DomainError("refine_bracket: tol must be positive");
  if (!(lo < hi) || !(f_lo < 0.0) || !(f_hi > 0.0)) {
    throw DomainError("refine_bracket: need lo < hi with f(lo) < 0 < f(hi)");
  }
  RootResult out;
  double w_lo = f_lo;  // Illinois-weighted endpoint values; same signs as f
  double w_hi = f_hi;
  int last_side = 0;
  int since_check = 0;
  double width_at_check = hi - lo;
  bool bisect_next = false;

  while (hi - lo > tol) {
    if (out.iterations >= max_iterations) {
      throw ConvergenceError("refine_bracket: iteration budget exhausted, width " +
                             std::to_string(hi - lo));
    }
    const double mid = 0.5 * (lo + hi);
    double x = mid;
    if (!bisect_next) {
      x = lo - w_lo * (hi - lo) / (w_hi - w_lo);
      if (!(x > lo && x < hi)) x = mid;
    }
    bisect_next = false;
    const double fx = f(x);
    ++out.iterations;

    if (fx == 0.0) {
      // Strict monotonicity puts the sign change exactly at x.
      lo = std::max(lo, x - 0.25 * tol);
      hi = std::min(hi, x + 0.25 * tol);
      break;
    }
    if (fx < 0.0) {
      lo = x;
      w_lo = fx;
      if (last_side == -1) w_hi *= 0.5;
      last_side = -1;
    } else {
      hi = x;
      w_hi = fx;
      if (last_side == 1) w_lo *= 0.5;
      last_side = 1;
    }
    if (++since_check == 3) {
      if (hi - lo > 0.5 * width_at_check) bisect_next = true;
      width_at_check = hi - lo;
      since_check = 0;
    }
  }

  out.lo = lo;
  out.hi = hi;
  out.root = 0.5 * (lo + hi);
  out.residual = f(out.root);
  return out;
}

}  // namespace abeta

#endif  // ABETA_ROOT_FINDING_HPP
