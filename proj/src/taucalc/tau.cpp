#include "wpvol/tau.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "wpvol/factorial.hpp"

namespace wpvol {

TauKey::TauKey(int genus, std::vector<int> indices) : genus_(genus), indices_(std::move(indices)) {
  if (genus_ < 0) throw std::invalid_argument("genus must be >= 0");
  std::sort(indices_.begin(), indices_.end(), std::greater<>());
}

int TauKey::index_sum() const { return std::accumulate(indices_.begin(), indices_.end(), 0); }

std::string TauKey::to_string() const {
  std::string out = std::to_string(genus_) + "|";
  if (indices_.empty()) return out + "-";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out;
}

std::size_t TauKeyHash::operator()(const TauKey& key) const noexcept {
  std::size_t h = std::hash<int>{}(key.genus());
  for (int d : key.indices()) h ^= std::hash<int>{}(d) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

// Distinct values with multiplicities, preserving descending order.
std::vector<std::pair<int, int>> group(const std::vector<int>& sorted_desc) {
  std::vector<std::pair<int, int>> out;
  for (int d : sorted_desc) {
    if (!out.empty() && out.back().first == d) {
      ++out.back().second;
    } else {
      out.emplace_back(d, 1);
    }
  }
  return out;
}

// Key indices with one occurrence of `value` removed.
std::vector<int> remove_one(const std::vector<int>& indices, int value) {
  std::vector<int> out = indices;
  const auto it = std::find(out.begin(), out.end(), value);
  if (it == out.end()) throw std::invalid_argument("index " + std::to_string(value) + " not present in key");
  out.erase(it);
  return out;
}

std::vector<int> replace_one(const std::vector<int>& indices, int from, int to) {
  std::vector<int> out = indices;
  *std::find(out.begin(), out.end(), from) = to;
  return out;
}

}  // namespace

TauCalculator::TauCalculator(Rational genus_one_base) : genus_one_base_(std::move(genus_one_base)) {}

TauCalculator::TauCalculator(MemoStore store, Rational genus_one_base)
    : store_(std::move(store)), genus_one_base_(std::move(genus_one_base)) {}

Rational TauCalculator::tau(const TauKey& key) {
  if (!key.indices().empty() && key.indices().back() < 0) return 0;
  if (!key.stable() || !key.dimension_matches()) return 0;
  if (key.genus() == 0 && key.indices() == std::vector<int>{0, 0, 0}) return 1;
  if (key.genus() == 1 && key.indices() == std::vector<int>{1}) return genus_one_base_;

  if (auto hit = store_.find(key)) return *hit;
  Rational value = dispatch(key);
  store_.insert(key, value);
  return value;
}

Rational TauCalculator::dispatch(const TauKey& key) {
  const auto& d = key.indices();
  if (d.back() == 0) return via_string(key);
  if (d.front() == 1) return via_dilaton(key);
  return via_dvv(key, d.front());
}

Rational TauCalculator::tau_batch(int genus, const MultiIndex& l) { return tau_batch(genus, l, 0); }

Rational TauCalculator::tau_batch(int genus, const MultiIndex& l, int zeros) {
  std::vector<int> indices = l.tau_indices();
  indices.insert(indices.end(), static_cast<std::size_t>(zeros), 0);
  return tau(TauKey(genus, std::move(indices)));
}

// <tau_0 prod tau_{d_i}>_g = sum_j <tau_{d_j - 1} prod_{i != j} tau_{d_i}>_g
Rational TauCalculator::via_string(const TauKey& key) {
  const std::vector<int> rest = remove_one(key.indices(), 0);
  Rational sum;
  for (const auto& [value, mult] : group(rest)) {
    if (value == 0) continue;
    sum += mult * tau(TauKey(key.genus(), replace_one(rest, value, value - 1)));
  }
  return sum;
}

// <tau_1 prod_{i=1..n} tau_{d_i}>_g = (2g - 2 + n) <prod tau_{d_i}>_g
Rational TauCalculator::via_dilaton(const TauKey& key) {
  if (key.genus() == 1 && key.indices() == std::vector<int>{1}) return genus_one_base_;
  const std::vector<int> rest = remove_one(key.indices(), 1);
  const int n = static_cast<int>(rest.size());
  return (2 * key.genus() - 2 + n) * tau(TauKey(key.genus(), rest));
}

// (2k+1)!! <tau_k prod tau_{d_i}>_g
//   = sum_j (2k+2d_j-1)!!/(2d_j-1)!! <tau_{k+d_j-1} prod_{i!=j} tau_{d_i}>_g
//   + 1/2 sum_{a+b=k-2} (2a+1)!!(2b+1)!! [ <tau_a tau_b prod>_{g-1}
//                                         + sum_{g1+g2=g, I+J} <tau_a I>_{g1} <tau_b J>_{g2} ]
Rational TauCalculator::via_dvv(const TauKey& key, int k) {
  if (k < 2) throw std::invalid_argument("DVV step needs an index >= 2");
  const int g = key.genus();
  const std::vector<int> rest = remove_one(key.indices(), k);
  const auto groups = group(rest);

  Rational joining;
  for (const auto& [value, mult] : groups) {
    Rational coeff(odd_double_factorial(k + value), odd_double_factorial(value));
    coeff.canonicalize();
    joining += mult * coeff * tau(TauKey(g, replace_one(rest, value, k + value - 1)));
  }

  Rational cutting;
  if (g >= 1) {
    for (int a = 0; a <= k - 2; ++a) {
      const int b = k - 2 - a;
      std::vector<int> merged = rest;
      merged.push_back(a);
      merged.push_back(b);
      const Integer weight = odd_double_factorial(a + 1) * odd_double_factorial(b + 1);
      cutting += weight * tau(TauKey(g - 1, std::move(merged)));
    }
  }

  // Split `rest` into (I, J) over labelled points: for each distinct value
  // choose how many copies go to I, weighted by the binomial count.
  Rational splitting;
  std::vector<int> chosen(groups.size(), 0);
  const std::function<void(std::size_t)> visit = [&](std::size_t pos) {
    if (pos < groups.size()) {
      for (int c = 0; c <= groups[pos].second; ++c) {
        chosen[pos] = c;
        visit(pos + 1);
      }
      return;
    }
    std::vector<int> left;
    std::vector<int> right;
    Integer multiplicity = 1;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const auto [value, mult] = groups[i];
      left.insert(left.end(), static_cast<std::size_t>(chosen[i]), value);
      right.insert(right.end(), static_cast<std::size_t>(mult - chosen[i]), value);
      multiplicity *= binomial(mult, chosen[i]);
    }
    const int left_sum = std::accumulate(left.begin(), left.end(), 0);
    const int left_points = static_cast<int>(left.size()) + 1;
    for (int a = 0; a <= k - 2; ++a) {
      const int b = k - 2 - a;
      // Dimension of the left factor fixes its genus; the right factor then
      // matches automatically.
      const int three_g1 = left_sum + a + 3 - left_points;
      if (three_g1 < 0 || three_g1 % 3 != 0 || three_g1 / 3 > g) continue;
      const int g1 = three_g1 / 3;
      std::vector<int> lhs = left;
      lhs.push_back(a);
      const Rational left_value = tau(TauKey(g1, std::move(lhs)));
      if (left_value == 0) continue;
      std::vector<int> rhs = right;
      rhs.push_back(b);
      const Rational right_value = tau(TauKey(g - g1, std::move(rhs)));
      if (right_value == 0) continue;
      splitting += multiplicity * odd_double_factorial(a + 1) * odd_double_factorial(b + 1) * left_value * right_value;
    }
  };
  visit(0);

  Rational total = joining + (cutting + splitting) / 2;
  return total / Rational(odd_double_factorial(k + 1));
}

}  // namespace wpvol
