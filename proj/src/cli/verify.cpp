#include <algorithm>

#include "wpvol/cli.hpp"
#include "wpvol/factorial.hpp"
#include "wpvol/kappa.hpp"

namespace wpvol::cli {

namespace {

constexpr int kMaxDerivative = 4;
constexpr int kMaxInductionPoints = 4;

CheckReport scalar_report(std::string check, int g, int n, int power, const Rational& lhs, const Rational& rhs) {
  CheckReport r{std::move(check), g, n, lhs == rhs, std::nullopt};
  if (!r.pass) r.first_mismatch = CheckReport::Mismatch{power, lhs, rhs};
  return r;
}

void require_theorem_genus(int g) {
  if (g < 2) throw UsageError("this suite needs --genus >= 2 (the genus expansion starts at g = 2)");
}

// Base conventions: V_{0,3} = 1 and V = 0 on the four unstable (g, n).
void notation_checks(TauCalculator& calc, std::vector<CheckReport>& out) {
  out.push_back(scalar_report("notation", 0, 3, 0, volume(calc, 0, 3).V, 1));
  for (const auto& [g, n] : {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 0}}) {
    out.push_back(scalar_report("notation", g, n, 0, volume(calc, g, n).V, 0));
  }
}

void reversion_checks(int order, std::vector<CheckReport>& out) {
  const Series x_of_y = bessel_x_of_y(std::max(order, 1));
  const Series y = build_y(std::max(order, 1));
  out.push_back(compare_series("reversion", 0, 0, compose(x_of_y, y), Series::identity(y.order())));
}

void lemma_checks(int g, int order, std::vector<CheckReport>& out) {
  const int i_top = std::max(3 * g - 2, 2);
  const GenusExpansionContext ctx(order, i_top);
  for (int i = 2; i <= i_top; ++i) {
    out.push_back(compare_series("lemma", g, i, ctx.f(i).truncated(order), build_f_lemma(i, ctx, order)));
  }
  for (int i = 2; i <= i_top; ++i) {
    const Rational expected = sign_power(i) / Rational(factorial(i - 1));
    out.push_back(scalar_report("lemma_constant", g, i, 0, ctx.f(i)[0], expected));
  }
}

void theorem1_checks(int g, int order, TauCalculator& calc, std::vector<CheckReport>& out) {
  require_theorem_genus(g);
  const GenusExpansionContext ctx(order, 3 * g - 2);
  const Series phi = build_phi_g(g, ctx, calc, order);
  for (int n = 0; n <= order; ++n) {
    out.push_back(scalar_report("theorem1", g, n, n, phi[n], volume(calc, g, n).v));
  }
}

void derivative_checks(int g, int order, TauCalculator& calc, std::vector<CheckReport>& out) {
  require_theorem_genus(g);
  const int top = std::min(kMaxDerivative, order);
  const GenusExpansionContext ctx(order, 3 * g - 2 + top);
  for (int n = 0; n <= top; ++n) out.push_back(check_derivative_formula(g, n, ctx, calc));
}

void induction_checks(int g, TauCalculator& calc, std::vector<CheckReport>& out) {
  for (int n = 1; n <= kMaxInductionPoints; ++n) {
    const int weight = 3 * g - 3 + n;
    if (weight < 0) continue;
    CheckReport agg{"induction", g, n, true, std::nullopt};
    for (const MultiIndex& l : enumerate_multiindices(weight, std::max(weight + 1, 2))) {
      CheckReport r = check_induction_identity(g, n, l, calc);
      if (!r.pass) {
        agg = std::move(r);
        break;
      }
    }
    out.push_back(std::move(agg));
  }
}

}  // namespace

std::vector<CheckReport> run_suite(Suite suite, int g, int order, TauCalculator& calc) {
  if (g < 0) throw UsageError("--genus must be >= 0");
  if (order < 1) throw UsageError("--order must be >= 1");
  std::vector<CheckReport> out;
  switch (suite) {
    case Suite::kLemma:
      lemma_checks(g, order, out);
      break;
    case Suite::kTheorem1:
      theorem1_checks(g, order, calc, out);
      break;
    case Suite::kDerivative:
      derivative_checks(g, order, calc, out);
      break;
    case Suite::kInduction:
      induction_checks(g, calc, out);
      break;
    case Suite::kAll:
      require_theorem_genus(g);
      notation_checks(calc, out);
      reversion_checks(order, out);
      lemma_checks(g, order, out);
      theorem1_checks(g, order, calc, out);
      derivative_checks(g, order, calc, out);
      induction_checks(g, calc, out);
      break;
  }
  return out;
}

}  // namespace wpvol::cli
