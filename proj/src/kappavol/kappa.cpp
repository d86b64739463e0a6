#include "wpvol/kappa.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <boost/multiprecision/mpfr.hpp>

#include "wpvol/factorial.hpp"

namespace wpvol {

std::vector<MultiIndex> enumerate_multiindices(int weight, int max_i) {
  if (weight < 0) throw std::invalid_argument("multi-index weight must be >= 0");
  if (max_i < 2) throw std::invalid_argument("max position must be >= 2");

  std::vector<MultiIndex> out;
  std::vector<int> parts;
  const int max_part = max_i - 1;
  // Non-decreasing part lists visited in lexicographic order.
  const std::function<void(int, int)> extend = [&](int remaining, int smallest) {
    if (remaining == 0) {
      MultiIndex l;
      for (int p : parts) l.set(p + 1, l.at(p + 1) + 1);
      out.push_back(std::move(l));
      return;
    }
    for (int p = smallest; p <= std::min(remaining, max_part); ++p) {
      parts.push_back(p);
      extend(remaining - p, p);
      parts.pop_back();
    }
  };
  extend(weight, 1);
  return out;
}

bool is_conventional_zero(int g, int n) { return (g == 0 && n <= 2) || (g == 1 && n == 0); }

VolumeRecord volume(TauCalculator& calc, int g, int n) {
  if (g < 0 || n < 0) throw std::invalid_argument("genus and number of points must be >= 0");
  VolumeRecord rec;
  rec.g = g;
  rec.n = n;
  rec.dim = 3 * g - 3 + n;
  if (is_conventional_zero(g, n) || rec.dim < 0) return rec;

  Rational sum;
  for (const MultiIndex& l : enumerate_multiindices(rec.dim, std::max(rec.dim + 1, 2))) {
    const Rational correlator = calc.tau_batch(g, l, n);
    if (correlator == 0) continue;
    Integer denom = 1;
    for (const auto& [i, li] : l.entries()) {
      Integer fi;
      mpz_pow_ui(fi.get_mpz_t(), factorial(i - 1).get_mpz_t(), static_cast<unsigned long>(li));
      denom *= factorial(li) * fi;
    }
    const Rational term = sign_power(g - 1 + n + l.length()) * correlator / Rational(denom);
    sum += term;
  }
  rec.V = sum * Rational(factorial(rec.dim));
  rec.v = sum / Rational(factorial(n));
  return rec;
}

WpVolume wp_volume_display(TauCalculator& calc, int g, int n, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  const VolumeRecord rec = volume(calc, g, n);

  // Display-only floating evaluation; digits plus guard digits.
  const unsigned precision = static_cast<unsigned>(digits) + 20;
  boost::multiprecision::mpfr_float value(0, precision);
  boost::multiprecision::mpfr_float pi(0, precision);
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  mpfr_pow_ui(pi.backend().data(), pi.backend().data(), static_cast<unsigned long>(rec.pi_power()), MPFR_RNDN);
  mpfr_set_q(value.backend().data(), rec.v.get_mpq_t(), MPFR_RNDN);
  mpfr_mul(value.backend().data(), value.backend().data(), pi.backend().data(), MPFR_RNDN);

  WpVolume out;
  out.coefficient = rec.v;
  out.pi_power = rec.pi_power();
  out.decimal = value.str(digits, std::ios_base::fmtflags(0));
  return out;
}

}  // namespace wpvol
