#ifndef WPVOL_ASYMPT_HPP
#define WPVOL_ASYMPT_HPP

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "wpvol/rational.hpp"
#include "wpvol/tau.hpp"

namespace wpvol {

/// 50-digit working precision for everything downstream of exact data.
using Decimal = boost::multiprecision::mpfr_float_50;

/// Digits used when rendering decimals in reports.
inline constexpr int kReportDigits = 10;

Decimal to_decimal(const Rational& q);
std::string format_decimal(const Decimal& x, int digits = kReportDigits);

/// -1 + 5(g-1)/2
Rational predicted_exponent(int g);

/// Value of an alternating series together with a bound on the discarded
/// tail plus accumulated rounding.
struct BoundedValue {
  Decimal value;
  Decimal error;

  /// Sign is certain when |value| > error; returns 0 otherwise.
  int certain_sign() const;
};

/// J_0(z) = sum_m (-1)^m (z^2/4)^m / (m!)^2
BoundedValue bessel_j0(const Decimal& z);
/// x(y) = sum_{k>=1} (-1)^{k-1} y^k / ((k-1)! k!)
BoundedValue bessel_x(const Decimal& y);
/// x'(y) = sum_{k>=1} (-1)^{k-1} y^{k-1} / ((k-1)!)^2 = J_0(2 sqrt y)
BoundedValue bessel_x_prime(const Decimal& y);

/// First positive zero j_{0,1} of J_0, by bisection with certified signs.
Decimal bessel_j0_first_zero();

/// The critical point y_c = (j_{0,1}/2)^2 where x'(y) first vanishes, and
/// the radius of convergence x_c = x(y_c) of y(x).
struct BesselSingularity {
  Decimal j0_zero;
  Decimal y_c;
  BoundedValue x_c;
  BoundedValue x_prime_at_y_c;
};
BesselSingularity bessel_singularity();

/// C = 1 / x_c
Decimal predicted_C();

struct GrowthFit {
  int g = 0;
  int n_min = 0;
  int n_max = 0;
  /// Free fit log v = n log C + e log n + c.
  Decimal C_est;
  Decimal exponent_est;
  /// RMS residual of the free fit in log space.
  Decimal residual;
  /// Fit with e fixed at predicted_exponent(g).
  Decimal C_fixed_exponent;
};

/// Fits log v_n against (n, log n, 1). `samples` holds (n, v_n) pairs.
/// Throws std::invalid_argument for fewer than 6 points or v_n <= 0.
GrowthFit fit_growth(int g, const std::vector<std::pair<int, Rational>>& samples);

/// v_{g,n} for n_min <= n <= n_max, computed on `threads` workers.
std::vector<std::pair<int, Rational>> normalized_volumes(TauCalculator& calc, int g, int n_min, int n_max,
                                                          int threads = 1);

GrowthFit fit_growth(TauCalculator& calc, int g, int n_min, int n_max, int threads = 1);

/// r_n = (v_{n+1}/v_n) ((n+1)/n)^{-e}, e = predicted_exponent(g). Tends to C.
std::vector<Decimal> ratio_diagnostic(int g, const std::vector<std::pair<int, Rational>>& samples);

struct GrowthComparison {
  struct Entry {
    GrowthFit fit;
    Decimal rel_dev;  ///< |C_fixed_exponent - predicted| / predicted
  };
  struct Pair {
    int g1 = 0;
    int g2 = 0;
    Decimal rel_dev;  ///< |C1 - C2| / C1 on the fixed-exponent estimates
  };
  Decimal predicted;
  std::vector<Entry> per_genus;
  std::vector<Pair> pairwise;  ///< empty for a single genus
};

GrowthComparison compare_C(const std::vector<GrowthFit>& fits);

}  // namespace wpvol

#endif  // WPVOL_ASYMPT_HPP
