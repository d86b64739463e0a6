#ifndef WPVOL_KAPPA_HPP
#define WPVOL_KAPPA_HPP

#include <string>
#include <vector>

#include "wpvol/multi_index.hpp"
#include "wpvol/rational.hpp"
#include "wpvol/tau.hpp"

namespace wpvol {

/// Every MultiIndex with sum (i-1) l_i == weight and all positions i <= max_i,
/// i.e. the partitions of `weight` into parts in [1, max_i - 1].
///
/// Order: lexicographic on the ascending list of parts, so for weight 3 the
/// sequence is {l_2=3}, {l_2=1,l_3=1}, {l_4=1}.
std::vector<MultiIndex> enumerate_multiindices(int weight, int max_i);

/// V_{g,n} = <kappa_1^{3g-3+n}> together with v_{g,n} = V_{g,n} / (n! (3g-3+n)!).
struct VolumeRecord {
  int g = 0;
  int n = 0;
  int dim = 0;  ///< 3g - 3 + n
  Rational V;
  Rational v;

  /// Exponent of pi in the Weil-Petersson volume pi^{2 dim} v.
  int pi_power() const { return 2 * dim; }
};

/// (g, n) in {(0,0), (0,1), (0,2), (1,0)}: the moduli space is empty or
/// unstable and V is set to 0 by convention.
bool is_conventional_zero(int g, int n);

/// V_{g,n} by converting kappa_1 powers to tau correlators:
///
///   V / d! = sum_{|l| = d} <tau_0^n prod tau_i^{l_i}>_g (-1)^{g-1+n+||l||}
///                          / prod_i l_i! ((i-1)!)^{l_i},   d = 3g-3+n.
///
/// Negative dimension and the conventional cases return V = v = 0.
VolumeRecord volume(TauCalculator& calc, int g, int n);

/// Exact Weil-Petersson volume v * pi^{pi_power} and a decimal rendering
/// with `digits` significant digits.
struct WpVolume {
  Rational coefficient;
  int pi_power = 0;
  std::string decimal;
};

WpVolume wp_volume_display(TauCalculator& calc, int g, int n, int digits);

}  // namespace wpvol

#endif  // WPVOL_KAPPA_HPP
