#include "wpvol/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wpvol/factorial.hpp"

namespace wpvol {

Series::Series() : coeffs_(1) {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::zero(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  return Series(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

Series Series::constant(const Rational& c, int order) {
  Series s = zero(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::identity(int order) {
  if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
  Series s = zero(order);
  s.coeffs_[1] = 1;
  return s;
}

Series Series::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw std::invalid_argument("cannot truncate order " + std::to_string(this->order()) + " series to order " +
                                std::to_string(order));
  }
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::padded(int order) const {
  if (order <= this->order()) return truncated(order);
  std::vector<Rational> c = coeffs_;
  c.resize(static_cast<std::size_t>(order) + 1);
  return Series(std::move(c));
}

Series& Series::operator+=(const Series& other) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

Series& Series::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator-(Series a) { return a *= Rational(-1); }
Series operator*(const Series& a, const Series& b) { return mul(a, b); }
Series operator*(Series a, const Rational& scalar) { return a *= scalar; }
Series operator*(const Rational& scalar, Series a) { return a *= scalar; }

Series mul(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  // Skip leading zeros; y(x) and its powers have high valuation.
  int va = 0;
  while (va <= n && a[va] == 0) ++va;
  int vb = 0;
  while (vb <= n && b[vb] == 0) ++vb;

  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  Rational term;
  for (int i = va; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = vb; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      c[static_cast<std::size_t>(i + j)] += term;
    }
  }
  return Series(std::move(c));
}

Series pow(const Series& a, unsigned e) {
  Series result = Series::constant(1, a.order());
  Series base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

Series derivative(const Series& a) {
  if (a.order() < 1) throw std::invalid_argument("derivative of an order-0 series is undetermined");
  std::vector<Rational> c(static_cast<std::size_t>(a.order()));
  for (int k = 1; k <= a.order(); ++k) c[static_cast<std::size_t>(k - 1)] = a[k] * k;
  return Series(std::move(c));
}

Series derivative(const Series& a, int k) {
  Series r = a;
  for (int i = 0; i < k; ++i) r = derivative(r);
  return r;
}

Series antiderivative(const Series& a, const Rational& constant) {
  std::vector<Rational> c(static_cast<std::size_t>(a.order()) + 2);
  c[0] = constant;
  for (int k = 0; k <= a.order(); ++k) c[static_cast<std::size_t>(k + 1)] = a[k] / (k + 1);
  return Series(std::move(c));
}

Series reciprocal(const Series& a) {
  if (a[0] == 0) throw std::domain_error("reciprocal of a series with zero constant term");
  const int n = a.order();
  const Rational inv0 = 1 / a[0];
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc;
    for (int j = 1; j <= k; ++j) {
      if (a[j] != 0) acc += a[j] * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return Series(std::move(b));
}

Series compose(const Series& outer, const Series& inner) {
  if (inner[0] != 0) throw std::domain_error("compose: inner series must have zero constant term");
  const int n = std::min(outer.order(), inner.order());
  const Series in = inner.truncated(n);
  Series acc = Series::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = mul(acc, in);
    acc = acc + Series::constant(outer[k], n);
  }
  return acc;
}

Series revert(const Series& a) {
  if (a.order() < 1 || a[0] != 0 || a[1] == 0) {
    throw std::domain_error("revert: need a[0] == 0 and a[1] != 0");
  }
  const int n = a.order();
  // The unknown x^n coefficient of a' only meets a residual of valuation >= 2,
  // so it never reaches x^n of the correction.
  const Series da = derivative(a).padded(n);

  // b is exact through x^prec; each Newton step b -= (a(b) - x) / a'(b)
  // roughly doubles the number of correct coefficients.
  int prec = 1;
  Series b = Series::identity(1) * (1 / a[1]);
  while (prec < n) {
    prec = std::min(2 * prec + 1, n);
    b = b.padded(prec);
    const Series residual = compose(a.truncated(prec), b) - Series::identity(prec);
    const Series slope = compose(da.truncated(prec), b);
    b = b - mul(residual, reciprocal(slope));
  }
  return b;
}

Series bessel_x_of_y(int order) {
  if (order < 1) throw std::invalid_argument("bessel_x_of_y needs order >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) {
    Rational term(1, 1);
    term /= Rational(factorial(k - 1) * factorial(k));
    c[static_cast<std::size_t>(k)] = (k % 2 == 1) ? term : Rational(-term);
  }
  return Series(std::move(c));
}

}  // namespace wpvol
