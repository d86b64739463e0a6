#ifndef WPVOL_GENEXP_HPP
#define WPVOL_GENEXP_HPP

#include <optional>
#include <string>
#include <vector>

#include "wpvol/multi_index.hpp"
#include "wpvol/rational.hpp"
#include "wpvol/series.hpp"
#include "wpvol/tau.hpp"

namespace wpvol {

/// y(x) = phi_0''(x): the compositional inverse of bessel_x_of_y.
Series build_y(int order);

/// phi_0: double antiderivative of y with zero constants, at `order`.
/// Requires order >= 3.
Series build_phi0(int order);

/// f_1 = 1 - 1/y', f_2 = y''/y'^3, f_i = f_{i-1}'/y'. Each derivative costs
/// one order, so f_i computed from y at order W is valid to order W - i
/// (W - 1 for f_1).
Series build_f(int i, const Series& y);

/// y, y' and f_1..f_{i_max}, all built from y at working order
/// W = order + i_max so every f_i is valid to at least `order`.
/// Immutable after construction.
class GenusExpansionContext {
 public:
  GenusExpansionContext(int order, int i_max);

  int order() const { return order_; }
  int working_order() const { return working_order_; }
  int i_max() const { return i_max_; }

  const Series& y() const { return y_; }
  const Series& y_prime() const { return y_prime_; }
  /// f_i for 1 <= i <= i_max; throws std::out_of_range otherwise.
  const Series& f(int i) const;

 private:
  int order_;
  int i_max_;
  int working_order_;
  Series y_;
  Series y_prime_;
  std::vector<Series> f_;  // f_[i - 1] = f_i
};

/// f_i through its closed form sum_{k>=0} (-1)^{i+k}/(i+k-1)! y^k/k!, with y
/// substituted at `order`. Requires i >= 2 and order <= ctx working order.
Series build_f_lemma(int i, const GenusExpansionContext& ctx, int order);

/// phi_g = sum_{|l|=3g-3} <tau_2^{l_2} ... tau_{3g-2}^{l_{3g-2}}>_g
///           y'^{2(g-1)+||l||} prod_i f_i^{l_i}/l_i!
///
/// Requires g >= 2 (std::invalid_argument otherwise), ctx.i_max() >= 3g-2
/// and order <= ctx.order().
Series build_phi_g(int g, const GenusExpansionContext& ctx, TauCalculator& calc, int order);

/// Outcome of one coefficient-wise comparison.
struct CheckReport {
  std::string check;
  int g = 0;
  int n = 0;
  bool pass = false;
  struct Mismatch {
    int power = 0;
    Rational lhs;
    Rational rhs;
  };
  std::optional<Mismatch> first_mismatch;
};

/// Compares two series up to the smaller of their orders.
CheckReport compare_series(std::string check, int g, int n, const Series& lhs, const Series& rhs);

/// d^n/dx^n phi_g against
///   sum_{|l|=3g-3+n} <tau_0^n prod tau_i^{l_i}>_g y'^{2(g-1)+n+||l||} prod f_i^{l_i}/l_i!
/// Requires ctx.i_max() >= 3g-2+n and ctx.order() >= n.
CheckReport check_derivative_formula(int g, int n, const GenusExpansionContext& ctx, TauCalculator& calc);

/// <tau_0^n prod tau_i^{l_i}>_g
///   = l_2 (2(g-1) + (n-1) + (||l||-1)) <tau_0^{n-1} prod tau_i^{l_i - delta_{i,2}}>_g
///   + sum_{j>=3} l_j <tau_0^{n-1} prod tau_i^{l_i - delta_{i,j} + delta_{i,j-1}}>_g
/// Requires n >= 1 and |l| = 3g-3+n.
CheckReport check_induction_identity(int g, int n, const MultiIndex& l, TauCalculator& calc);

}  // namespace wpvol

#endif  // WPVOL_GENEXP_HPP
