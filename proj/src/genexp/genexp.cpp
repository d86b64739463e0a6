#include "wpvol/genexp.hpp"

#include <map>
#include <stdexcept>

#include "wpvol/factorial.hpp"
#include "wpvol/kappa.hpp"

namespace wpvol {

Series build_y(int order) {
  if (order < 1) throw std::invalid_argument("build_y needs order >= 1");
  return revert(bessel_x_of_y(order));
}

Series build_phi0(int order) {
  if (order < 3) throw std::invalid_argument("build_phi0 needs order >= 3");
  return antiderivative(antiderivative(build_y(order - 2), 0), 0);
}

Series build_f(int i, const Series& y) {
  if (i < 1) throw std::invalid_argument("f_i is defined for i >= 1");
  const int supported = i == 1 ? y.order() - 1 : y.order() - i;
  if (supported < 0) {
    throw std::invalid_argument("f_" + std::to_string(i) + " needs y to order >= " + std::to_string(i) + ", have " +
                                std::to_string(y.order()));
  }
  const Series y1 = derivative(y);
  const Series inv = reciprocal(y1);
  if (i == 1) return Series::constant(1, inv.order()) - inv;

  Series f = mul(derivative(y1), pow(inv, 3));
  for (int k = 3; k <= i; ++k) f = mul(derivative(f), inv);
  return f;
}

GenusExpansionContext::GenusExpansionContext(int order, int i_max)
    : order_(order), i_max_(i_max), working_order_(order + i_max) {
  if (order < 0) throw std::invalid_argument("context order must be >= 0");
  if (i_max < 1) throw std::invalid_argument("context i_max must be >= 1");
  y_ = build_y(working_order_);
  y_prime_ = derivative(y_);
  const Series inv = reciprocal(y_prime_);

  // Same recursion as build_f, sharing intermediate results.
  f_.push_back(Series::constant(1, inv.order()) - inv);
  if (i_max_ >= 2) f_.push_back(mul(derivative(y_prime_), pow(inv, 3)));
  for (int i = 3; i <= i_max_; ++i) f_.push_back(mul(derivative(f_.back()), inv));
}

const Series& GenusExpansionContext::f(int i) const {
  if (i < 1 || i > i_max_) {
    throw std::out_of_range("f_" + std::to_string(i) + " not built (context has i_max " + std::to_string(i_max_) + ")");
  }
  return f_[static_cast<std::size_t>(i - 1)];
}

Series build_f_lemma(int i, const GenusExpansionContext& ctx, int order) {
  if (i < 2) throw std::invalid_argument("closed form for f_i is checked for i >= 2 only");
  if (order < 0 || order > ctx.y().order()) throw std::invalid_argument("order exceeds the context's y");

  // y has valuation 1, so terms with k > order vanish to this order.
  std::vector<Rational> outer(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    outer[static_cast<std::size_t>(k)] =
        sign_power(i + k) / Rational(factorial(i + k - 1) * factorial(k));
  }
  return compose(Series(std::move(outer)), ctx.y().truncated(order));
}

namespace {

// Powers of one base series, each computed once by binary exponentiation.
class PowerTable {
 public:
  explicit PowerTable(Series base) : base_(std::move(base)) {}

  const Series& get(unsigned e) {
    auto it = cache_.find(e);
    if (it == cache_.end()) it = cache_.emplace(e, pow(base_, e)).first;
    return it->second;
  }

 private:
  Series base_;
  std::map<unsigned, Series> cache_;
};

// sum_{|l| = weight} <tau_0^zeros prod tau_i^{l_i}>_g y'^{2(g-1)+zeros+||l||} prod f_i^{l_i}/l_i!
Series genus_sum(int g, int zeros, const GenusExpansionContext& ctx, TauCalculator& calc, int order) {
  const int weight = 3 * g - 3 + zeros;
  const int max_i = 3 * g - 2 + zeros;
  if (ctx.i_max() < max_i) {
    throw std::invalid_argument("context i_max " + std::to_string(ctx.i_max()) + " < " + std::to_string(max_i));
  }
  if (order > ctx.order()) throw std::invalid_argument("requested order exceeds the context order");

  PowerTable y_prime(ctx.y_prime().truncated(order));
  std::map<int, PowerTable> f_powers;

  Series sum = Series::zero(order);
  for (const MultiIndex& l : enumerate_multiindices(weight, max_i)) {
    const Rational correlator = calc.tau_batch(g, l, zeros);
    if (correlator == 0) continue;
    Integer denom = 1;
    for (const auto& [i, li] : l.entries()) denom *= factorial(li);

    Series term = y_prime.get(static_cast<unsigned>(2 * (g - 1) + zeros + l.length()));
    for (const auto& [i, li] : l.entries()) {
      auto it = f_powers.find(i);
      if (it == f_powers.end()) it = f_powers.emplace(i, PowerTable(ctx.f(i).truncated(order))).first;
      term = mul(term, it->second.get(static_cast<unsigned>(li)));
    }
    sum += term * (correlator / Rational(denom));
  }
  return sum;
}

}  // namespace

Series build_phi_g(int g, const GenusExpansionContext& ctx, TauCalculator& calc, int order) {
  if (g < 2) throw std::invalid_argument("the genus expansion formula covers g >= 2 only");
  return genus_sum(g, 0, ctx, calc, order);
}

CheckReport compare_series(std::string check, int g, int n, const Series& lhs, const Series& rhs) {
  CheckReport report{std::move(check), g, n, true, std::nullopt};
  const int order = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= order; ++k) {
    if (lhs[k] != rhs[k]) {
      report.pass = false;
      report.first_mismatch = CheckReport::Mismatch{k, lhs[k], rhs[k]};
      break;
    }
  }
  return report;
}

CheckReport check_derivative_formula(int g, int n, const GenusExpansionContext& ctx, TauCalculator& calc) {
  if (g < 2) throw std::invalid_argument("the derivative formula covers g >= 2 only");
  if (n < 0 || n > ctx.order()) throw std::invalid_argument("context order too small for this derivative");
  const Series lhs = derivative(build_phi_g(g, ctx, calc, ctx.order()), n);
  const Series rhs = genus_sum(g, n, ctx, calc, ctx.order() - n);
  return compare_series("derivative", g, n, lhs, rhs);
}

CheckReport check_induction_identity(int g, int n, const MultiIndex& l, TauCalculator& calc) {
  if (n < 1) throw std::invalid_argument("induction identity needs n >= 1");
  if (l.weight() != 3 * g - 3 + n) throw std::invalid_argument("induction identity needs |l| = 3g-3+n");

  const Rational lhs = calc.tau_batch(g, l, n);
  Rational rhs;
  if (const int l2 = l.at(2); l2 > 0) {
    MultiIndex lowered = l;
    lowered.set(2, l2 - 1);
    rhs += l2 * (2 * (g - 1) + (n - 1) + (l.length() - 1)) * calc.tau_batch(g, lowered, n - 1);
  }
  for (const auto& [j, lj] : l.entries()) {
    if (j < 3) continue;
    MultiIndex shifted = l;
    shifted.set(j, lj - 1);
    shifted.set(j - 1, shifted.at(j - 1) + 1);
    rhs += lj * calc.tau_batch(g, shifted, n - 1);
  }

  CheckReport report{"induction", g, n, lhs == rhs, std::nullopt};
  if (!report.pass) report.first_mismatch = CheckReport::Mismatch{0, lhs, rhs};
  return report;
}

}  // namespace wpvol
