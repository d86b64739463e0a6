// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.
#ifndef WPVOL_TESTS_ORACLES_HPP
#define WPVOL_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "wpvol/factorial.hpp"
#include "wpvol/series.hpp"
#include "wpvol/tau.hpp"

namespace wpvol::oracle {

/// Compositional inverse by Lagrange inversion:
///   [x^n] b = (1/n) [y^{n-1}] (y / a(y))^n.
/// Uses only reciprocal and products, never compose or Newton steps.
inline Series revert_lagrange(const Series& a) {
  const int order = a.order();
  std::vector<Rational> shifted(a.coeffs().begin() + 1, a.coeffs().end());  // a(y)/y
  const Series h = reciprocal(Series(shifted));                              // y/a(y), order - 1
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  Series power = Series::constant(1, h.order());
  for (int n = 1; n <= order; ++n) {
    power = mul(power, h);
    b[static_cast<std::size_t>(n)] = power[n - 1] / n;
  }
  return Series(std::move(b));
}

/// Genus-0 closed form <tau_{d_1} ... tau_{d_n}>_0 = (n-3)! / prod d_i!
/// when sum d_i = n - 3, zero otherwise.
inline Rational genus_zero_correlator(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  int sum = 0;
  for (int x : d) sum += x;
  if (n < 3 || sum != n - 3) return 0;
  Integer denom = 1;
  for (int x : d) denom *= factorial(x);
  return Rational(factorial(n - 3)) / Rational(denom);
}

/// One-point function <tau_{3g-2}>_g = 1 / (24^g g!).
inline Rational one_point(int g) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 24, static_cast<unsigned long>(g));
  return Rational(1) / Rational(p * factorial(g));
}

/// Partition count of `weight` into parts of size at most `max_part`,
/// by the standard coin-change table.
inline long long partition_count(int weight, int max_part) {
  std::vector<long long> ways(static_cast<std::size_t>(weight) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= max_part; ++part) {
    for (int w = part; w <= weight; ++w) ways[static_cast<std::size_t>(w)] += ways[static_cast<std::size_t>(w - part)];
  }
  return ways[static_cast<std::size_t>(weight)];
}

/// Random small rational p/q with |p| <= 9, 1 <= q <= 5.
inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random series of the given order; optionally forcing a[0] = 0 and/or a[1] != 0.
inline Series random_series(std::mt19937& rng, int order, bool zero_constant, bool unit_linear) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = random_rational(rng);
  if (zero_constant) c[0] = 0;
  if (unit_linear && order >= 1 && c[1] == 0) c[1] = 1;
  if (!zero_constant && c[0] == 0) c[0] = 1;
  return Series(std::move(c));
}

// Random stable key with the dimension constraint satisfied, g <= 3, n <= 8,
// containing at least one 0 and one 1.
inline TauKey random_key_with_zero_and_one(std::mt19937& rng) {
  std::uniform_int_distribution<int> genus_dist(0, 3);
  for (;;) {
    const int g = genus_dist(rng);
    std::uniform_int_distribution<int> n_dist(3, 8);
    const int n = n_dist(rng);
    int remaining = 3 * g - 3 + n - 1;  // d = 0 and d = 1 already placed
    if (remaining < 0) continue;
    std::vector<int> d{0, 1};
    std::uniform_int_distribution<int> slot(2, n - 1);
    d.resize(static_cast<std::size_t>(n), 0);
    while (remaining-- > 0) ++d[static_cast<std::size_t>(slot(rng))];
    return TauKey(g, d);
  }
}

// Random key with the dimension constraint satisfied and an index >= 2 somewhere.
inline TauKey random_dimensional_key(std::mt19937& rng, int max_genus, int max_points) {
  std::uniform_int_distribution<int> genus_dist(0, max_genus);
  for (;;) {
    const int g = genus_dist(rng);
    std::uniform_int_distribution<int> n_dist(1, max_points);
    const int n = n_dist(rng);
    int remaining = 3 * g - 3 + n;
    if (remaining < 0 || 2 * g - 2 + n <= 0) continue;
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    std::uniform_int_distribution<int> slot(0, n - 1);
    while (remaining-- > 0) ++d[static_cast<std::size_t>(slot(rng))];
    return TauKey(g, d);
  }
}

}  // namespace wpvol::oracle

#endif  // WPVOL_TESTS_ORACLES_HPP
