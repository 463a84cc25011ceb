#ifndef ABETA_TESTS_ORACLES_HPP
#define ABETA_TESTS_ORACLES_HPP

// Reference values computed by routes that share no code with the library:
// closed forms at beta = 0, a generic Gauss hypergeometric series, an averaged
// alternating series, plain bisection and Cauchy-integral coefficient
// extraction.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// --- beta = 0 closed forms ---------------------------------------------------

/// f~(r) = -r - 2 log(1 - r).
inline double extremal_beta0(double r) { return -r - 2.0 * std::log1p(-r); }

/// f~(-1) = 1 - 2 log 2.
inline double minus_one_beta0() { return 1.0 - 2.0 * std::numbers::ln2; }

/// r^2 + sum 4/n r^{2n} over n >= 2, i.e. x + 4(-log(1 - x) - x), x = r^2.
inline double area_beta0(double r) {
  const double x = r * r;
  return x + 4.0 * (-std::log1p(-x) - x);
}

/// beta = 1: coefficients 2 and 4n, so 2r/(1-r) - r and 4x/(1-x)^2 - 3x.
inline double extremal_beta1(double r) { return 2.0 * r / (1.0 - r) - r; }
inline double area_beta1(double r) {
  const double x = r * r;
  return 4.0 * x / ((1.0 - x) * (1.0 - x)) - 3.0 * x;
}

// --- Gauss hypergeometric form ------------------------------------------------

/// 2F1(a, b; c; z) by its defining series, |z| < 1.
inline double hyp2f1(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < 200000; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) && n > 10) break;
  }
  return sum;
}

/// f~(z) = z (-1 + 2 2F1(1, 1/(1-beta); (2-beta)/(1-beta); z)).
inline double extremal_hypergeometric(double r, double beta) {
  const double b = 1.0 / (1.0 - beta);
  const double c = (2.0 - beta) / (1.0 - beta);
  return r * (-1.0 + 2.0 * hyp2f1(1.0, b, c, r));
}

// --- f~(-1) as an alternating series -------------------------------------------

/// f~(-1) = -1 + sum_{n>=2} 2(-1)^n / ((1-beta) n + beta), summed by repeated
/// averaging of consecutive partial sums.
inline double minus_one_alternating(double beta) {
  const int start = 60;
  const int depth = 60;
  double s = -1.0;
  for (int n = 2; n < start; ++n) {
    s += 2.0 * ((n % 2 == 0) ? 1.0 : -1.0) / ((1.0 - beta) * n + beta);
  }
  std::vector<double> partial;
  for (int n = start; n <= start + depth; ++n) {
    s += 2.0 * ((n % 2 == 0) ? 1.0 : -1.0) / ((1.0 - beta) * n + beta);
    partial.push_back(s);
  }
  while (partial.size() > 1) {
    for (std::size_t i = 0; i + 1 < partial.size(); ++i) {
      partial[i] = 0.5 * (partial[i] + partial[i + 1]);
    }
    partial.pop_back();
  }
  return partial.front();
}

// --- root finding ------------------------------------------------------------

/// 200 plain bisection steps on an increasing function with f(lo) < 0 < f(hi).
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// beta = 0, p = 1, F = 0: r^m + f~(r) - r + f~(-1).
inline double bohr_radius_beta0(int m) {
  return bisect(
      [m](double r) {
        return std::pow(r, m) + extremal_beta0(r) - r + minus_one_beta0();
      },
      1e-12, 1.0 - 1e-12);
}

// --- coefficient extraction ---------------------------------------------------

/// Taylor coefficients 0..n_max of g at 0 by the trapezoidal rule on |z| = rho.
inline std::vector<cplx> cauchy_coefficients(const std::function<cplx(cplx)>& g, int n_max,
                                             double rho = 0.01, int points = 32) {
  std::vector<cplx> out(static_cast<std::size_t>(n_max + 1));
  for (int k = 0; k < points; ++k) {
    const double t = 2.0 * std::numbers::pi * k / points;
    const cplx v = g(std::polar(rho, t));
    for (int n = 0; n <= n_max; ++n) {
      out[static_cast<std::size_t>(n)] += v * std::polar(1.0, -n * t);
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    out[static_cast<std::size_t>(n)] /= points * std::pow(rho, n);
  }
  return out;
}

inline cplx polyval(const std::vector<cplx>& a, cplx z) {
  cplx acc{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// gamma_1, gamma_2 with log(f(z)/z) = 2 sum gamma_n z^n, f given by its
/// Taylor polynomial a (a[0] = 0, a[1] = 1).
inline std::pair<cplx, cplx> log_coefficients(const std::vector<cplx>& a) {
  const auto c = cauchy_coefficients(
      [&a](cplx z) { return std::log(polyval(a, z) / z); }, 2);
  return {0.5 * c[1], 0.5 * c[2]};
}

/// Gamma_1, Gamma_2 of the inverse function, which is evaluated by Newton's
/// method on f(z) = w.
inline std::pair<cplx, cplx> inverse_log_coefficients(const std::vector<cplx>& a) {
  std::vector<cplx> da;
  for (std::size_t n = 1; n < a.size(); ++n) da.push_back(static_cast<double>(n) * a[n]);
  const auto inverse = [&](cplx w) {
    cplx z = w;
    for (int i = 0; i < 60; ++i) {
      const cplx step = (polyval(a, z) - w) / polyval(da, z);
      z -= step;
      if (std::abs(step) < 1e-18) break;
    }
    return z;
  };
  const auto c = cauchy_coefficients([&](cplx w) { return std::log(inverse(w) / w); }, 2);
  return {0.5 * c[1], 0.5 * c[2]};
}

}  // namespace oracle

#endif  // ABETA_TESTS_ORACLES_HPP
