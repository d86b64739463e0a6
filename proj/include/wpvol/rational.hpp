#ifndef WPVOL_RATIONAL_HPP
#define WPVOL_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wpvol {

/// Exact rational scalar. GMP keeps every result of the arithmetic operators
/// in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p" (optional leading '-', decimal digits only).
/// Throws std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// (-1)^k as a rational.
inline Rational sign_power(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace wpvol

#endif  // WPVOL_RATIONAL_HPP
