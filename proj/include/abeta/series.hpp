#ifndef ABETA_SERIES_HPP
#define ABETA_SERIES_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "abeta/beta.hpp"
#include "abeta/errors.hpp"

namespace abeta {

/// Power series c_0 + c_1 z + ... + c_N z^N known up to order N.
template <class T>
class TruncatedSeries {
 public:
  using value_type = T;

  TruncatedSeries() : coeffs_(1, T{}) {}

  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, T{}) {}

  /// Series whose order is coeffs.size() - 1; an empty list gives the zero
  /// series of order 0.
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(T{});
  }

  TruncatedSeries(std::initializer_list<T> coeffs)
      : TruncatedSeries(std::vector<T>(coeffs)) {}

  /// Polynomial `coeffs` padded with zeros (or truncated) to the given order.
  static TruncatedSeries from_polynomial(const std::vector<T>& coeffs, std::size_t order) {
    TruncatedSeries s(order);
    const std::size_t n = std::min(coeffs.size(), order + 1);
    std::copy_n(coeffs.begin(), n, s.coeffs_.begin());
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const T& operator[](std::size_t n) const { return coeffs_[n]; }
  T& operator[](std::size_t n) { return coeffs_[n]; }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of z^n, zero beyond the order.
  T coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : T{}; }

  TruncatedSeries truncated(std::size_t order) const {
    return from_polynomial(coeffs_, order);
  }

  /// Horner evaluation of the truncated polynomial.
  template <class Z>
  auto evaluate(const Z& z) const {
    using R = decltype(T{} * z);
    R acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<T> coeffs_;
};

/// Cauchy product truncated to the smaller of the two orders.
template <class T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncatedSeries<T> out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == T{}) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Long division num/den truncated to the smaller order; requires den.c_0 != 0.
template <class T>
TruncatedSeries<T> series_div(const TruncatedSeries<T>& num, const TruncatedSeries<T>& den) {
  if (den[0] == T{}) throw DomainError("series_div: denominator has zero constant term");
  const std::size_t order = std::min(num.order(), den.order());
  TruncatedSeries<T> q(order);
  for (std::size_t n = 0; n <= order; ++n) {
    T acc = num[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= den[k] * q[n - k];
    q[n] = acc / den[0];
  }
  return q;
}

template <class T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return series_mul(a, b);
}

template <class T>
TruncatedSeries<T> operator/(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return series_div(a, b);
}

/// Taylor coefficients of the member f of A_beta generated by a Caratheodory
/// function p = 1 + c_1 z + ... through beta f(z)/z + (1 - beta) f'(z) = p(z).
///
/// With f(z) = sum_{n>=1} a_n z^n, the z^{n-1} coefficient of the left side
/// is (beta + (1 - beta) n) a_n, hence a_n = c_{n-1} / (n - beta (n - 1)).
/// The result is f itself as a series of order c.order() + 1 with f_0 = 0 and
/// f_1 = 1.
template <class T>
TruncatedSeries<T> caratheodory_to_member(const TruncatedSeries<T>& c, BetaParam beta) {
  using std::abs;
  if (abs(c[0] - T{1}) > 1e-12) {
    throw DomainError("caratheodory_to_member: c_0 must equal 1");
  }
  TruncatedSeries<T> f(c.order() + 1);
  f[1] = T{1};
  for (std::size_t n = 2; n <= f.order(); ++n) {
    f[n] = c[n - 1] / coefficient_denominator(static_cast<long>(n), beta);
  }
  return f;
}

using ComplexSeries = TruncatedSeries<std::complex<double>>;

}  // namespace abeta

#endif  // ABETA_SERIES_HPP
