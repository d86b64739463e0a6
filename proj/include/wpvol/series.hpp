#ifndef WPVOL_SERIES_HPP
#define WPVOL_SERIES_HPP

#include <span>
#include <vector>

#include "wpvol/rational.hpp"

namespace wpvol {

/// Truncated formal power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
///
/// The truncation order N is part of the value: coefficients beyond it are
/// unknown, not zero. Binary operations return a result at the smaller of
/// the operand orders, so a coefficient is never reported unless every input
/// determined it.
class Series {
 public:
  /// The zero series at order 0.
  Series();

  /// Takes ownership of the coefficients; order = coeffs.size() - 1.
  /// Throws std::invalid_argument on an empty vector.
  explicit Series(std::vector<Rational> coeffs);

  static Series zero(int order);
  static Series constant(const Rational& c, int order);
  /// The identity series x (requires order >= 1).
  static Series identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Coefficient of x^k; k must not exceed order().
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// Drops coefficients above `order`. Throws if order > this->order().
  Series truncated(int order) const;

  /// Re-declares the series at a higher order, treating the new coefficients
  /// as exactly zero. Only meaningful when the caller knows they vanish
  /// (e.g. a polynomial or an intermediate Newton iterate).
  Series padded(int order) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& scalar);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator-(Series a);
Series operator*(const Series& a, const Series& b);
Series operator*(Series a, const Rational& scalar);
Series operator*(const Rational& scalar, Series a);

/// Cauchy product truncated at min(a.order, b.order).
Series mul(const Series& a, const Series& b);

/// a^e by binary exponentiation; a^0 is the constant 1 at a.order().
Series pow(const Series& a, unsigned e);

/// Term-wise derivative; the result has order a.order() - 1.
/// Throws std::invalid_argument for order-0 input.
Series derivative(const Series& a);

/// k-th derivative.
Series derivative(const Series& a, int k);

/// Term-wise antiderivative with the given constant term; order + 1.
Series antiderivative(const Series& a, const Rational& constant);

/// Multiplicative inverse. Throws std::domain_error if a[0] == 0.
Series reciprocal(const Series& a);

/// outer(inner(x)) by Horner evaluation in the series ring, at
/// min(outer.order, inner.order). Throws std::domain_error unless inner[0] == 0.
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse b with a(b(x)) = x + O(x^{N+1}), computed by Newton
/// iteration with doubling precision. Requires a[0] == 0 and a[1] != 0
/// (std::domain_error otherwise).
Series revert(const Series& a);

/// The series x(y) = sum_{k>=1} (-1)^{k-1} y^k / ((k-1)! k!) = -sqrt(y) J0'(2 sqrt(y))
/// truncated at y^order. Requires order >= 1.
Series bessel_x_of_y(int order);

}  // namespace wpvol

#endif  // WPVOL_SERIES_HPP
