#include "wpvol/asympt.hpp"

#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "wpvol/kappa.hpp"

namespace wpvol {

Decimal to_decimal(const Rational& q) {
  Decimal x;
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

std::string format_decimal(const Decimal& x, int digits) { return x.str(digits, std::ios_base::fmtflags(0)); }

Rational predicted_exponent(int g) {
  Rational e(5 * (g - 1) - 2, 2);
  e.canonicalize();
  return e;
}

int BoundedValue::certain_sign() const {
  if (abs(value) <= error) return 0;
  return value > 0 ? 1 : -1;
}

namespace {

const Decimal& negligible() {
  static const Decimal eps("1e-60");
  return eps;
}

// sum_{k>=0} (-1)^k t_k with t_0 = first and t_{k+1} = t_k * step(k).
// Summation stops once the terms decrease and fall below 1e-60; the next
// term then bounds the tail.
BoundedValue alternating_sum(const Decimal& first, const std::function<Decimal(int)>& step) {
  const Decimal ulp = std::numeric_limits<Decimal>::epsilon();
  Decimal sum = 0;
  Decimal term = first;
  Decimal largest = abs(first);
  int k = 0;
  for (;; ++k) {
    sum += (k % 2 == 0) ? term : Decimal(-term);
    const Decimal next = term * step(k);
    if (abs(next) > largest) largest = abs(next);
    if (abs(next) < abs(term) && abs(next) < negligible()) {
      term = next;
      break;
    }
    term = next;
  }
  // Tail of a decreasing alternating series plus a per-operation rounding budget.
  const Decimal rounding = largest * ulp * (4 * (k + 1));
  return {sum, abs(term) + rounding};
}

}  // namespace

BoundedValue bessel_j0(const Decimal& z) {
  const Decimal quarter_z2 = z * z / 4;
  return alternating_sum(Decimal(1), [&](int m) { return quarter_z2 / Decimal((m + 1) * (m + 1)); });
}

BoundedValue bessel_x(const Decimal& y) {
  // k = j + 1: t_j = y^{j+1} / (j! (j+1)!)
  return alternating_sum(y, [&](int j) { return y / Decimal((j + 1) * (j + 2)); });
}

BoundedValue bessel_x_prime(const Decimal& y) {
  return alternating_sum(Decimal(1), [&](int j) { return y / Decimal((j + 1) * (j + 1)); });
}

Decimal bessel_j0_first_zero() {
  Decimal lo = 2;
  Decimal hi = 3;
  if (bessel_j0(lo).certain_sign() != 1 || bessel_j0(hi).certain_sign() != -1) {
    throw std::logic_error("J0 does not bracket its first zero on [2, 3]");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const Decimal mid = (lo + hi) / 2;
    const int s = bessel_j0(mid).certain_sign();
    if (s == 0) return mid;
    (s > 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

BesselSingularity bessel_singularity() {
  BesselSingularity s;
  s.j0_zero = bessel_j0_first_zero();
  s.y_c = (s.j0_zero / 2) * (s.j0_zero / 2);
  s.x_c = bessel_x(s.y_c);
  s.x_prime_at_y_c = bessel_x_prime(s.y_c);
  return s;
}

Decimal predicted_C() { return 1 / bessel_singularity().x_c.value; }

GrowthFit fit_growth(int g, const std::vector<std::pair<int, Rational>>& samples) {
  if (samples.size() < 6) throw std::invalid_argument("growth fit needs at least 6 data points");
  for (const auto& [n, v] : samples) {
    if (v <= 0) throw std::invalid_argument("growth fit needs positive values; v at n=" + std::to_string(n) + " is " + to_string(v));
    if (n < 1) throw std::invalid_argument("growth fit needs n >= 1");
  }

  using Matrix = Eigen::Matrix<Decimal, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Decimal, Eigen::Dynamic, 1>;
  const auto rows = static_cast<Eigen::Index>(samples.size());
  Matrix design(rows, 3);
  Matrix fixed_design(rows, 2);
  Vector logs(rows);
  Vector fixed_logs(rows);
  const Decimal e = to_decimal(predicted_exponent(g));
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& [n, v] = samples[static_cast<std::size_t>(r)];
    const Decimal log_n = log(Decimal(n));
    design(r, 0) = n;
    design(r, 1) = log_n;
    design(r, 2) = 1;
    logs(r) = log(to_decimal(v));
    fixed_design(r, 0) = n;
    fixed_design(r, 1) = 1;
    fixed_logs(r) = logs(r) - e * log_n;
  }

  const Vector coef = design.colPivHouseholderQr().solve(logs);
  const Vector fixed = fixed_design.colPivHouseholderQr().solve(fixed_logs);
  const Vector resid = design * coef - logs;

  GrowthFit fit;
  fit.g = g;
  fit.n_min = samples.front().first;
  fit.n_max = samples.back().first;
  fit.C_est = exp(coef(0));
  fit.exponent_est = coef(1);
  fit.residual = sqrt(resid.squaredNorm() / Decimal(rows));
  fit.C_fixed_exponent = exp(fixed(0));
  return fit;
}

std::vector<std::pair<int, Rational>> normalized_volumes(TauCalculator& calc, int g, int n_min, int n_max,
                                                          int threads) {
  if (n_max < n_min) throw std::invalid_argument("empty n range");
  const int count = n_max - n_min + 1;
  std::vector<std::pair<int, Rational>> out(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  const auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      out[static_cast<std::size_t>(i)] = {n_min + i, volume(calc, g, n_min + i).v};
    }
  };
  const int workers = std::max(1, std::min(threads, count));
  std::vector<std::jthread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  return out;
}

GrowthFit fit_growth(TauCalculator& calc, int g, int n_min, int n_max, int threads) {
  return fit_growth(g, normalized_volumes(calc, g, n_min, n_max, threads));
}

std::vector<Decimal> ratio_diagnostic(int g, const std::vector<std::pair<int, Rational>>& samples) {
  const Decimal e = to_decimal(predicted_exponent(g));
  std::vector<Decimal> out;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const auto& [n, v] = samples[i];
    const auto& [n1, v1] = samples[i + 1];
    if (n1 != n + 1) throw std::invalid_argument("ratio diagnostic needs consecutive n");
    out.push_back(to_decimal(v1 / v) * pow(Decimal(n1) / Decimal(n), -e));
  }
  return out;
}

GrowthComparison compare_C(const std::vector<GrowthFit>& fits) {
  GrowthComparison cmp;
  cmp.predicted = predicted_C();
  for (const GrowthFit& fit : fits) {
    cmp.per_genus.push_back({fit, abs(fit.C_fixed_exponent - cmp.predicted) / cmp.predicted});
  }
  for (std::size_t i = 0; i < fits.size(); ++i) {
    for (std::size_t j = i + 1; j < fits.size(); ++j) {
      const Decimal& a = fits[i].C_fixed_exponent;
      const Decimal& b = fits[j].C_fixed_exponent;
      cmp.pairwise.push_back({fits[i].g, fits[j].g, abs(a - b) / a});
    }
  }
  return cmp;
}

}  // namespace wpvol
