#ifndef WPVOL_TAU_HPP
#define WPVOL_TAU_HPP

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wpvol/multi_index.hpp"
#include "wpvol/rational.hpp"

namespace wpvol {

/// Canonical key of one correlator <tau_{d_1} ... tau_{d_n}>_g: genus plus the
/// indices sorted descending, so every permutation maps to the same key.
class TauKey {
 public:
  TauKey() = default;
  TauKey(int genus, std::vector<int> indices);
  TauKey(int genus, std::initializer_list<int> indices) : TauKey(genus, std::vector<int>(indices)) {}

  int genus() const { return genus_; }
  const std::vector<int>& indices() const { return indices_; }
  int points() const { return static_cast<int>(indices_.size()); }
  int index_sum() const;

  /// 2g - 2 + n > 0
  bool stable() const { return 2 * genus_ - 2 + points() > 0; }
  /// sum d_i == 3g - 3 + n
  bool dimension_matches() const { return index_sum() == 3 * genus_ - 3 + points(); }

  /// "g|d1,d2,...,dn" ("g|-" when empty), the key part of a cache line.
  std::string to_string() const;

  friend bool operator==(const TauKey&, const TauKey&) = default;
  friend auto operator<=>(const TauKey&, const TauKey&) = default;

 private:
  int genus_ = 0;
  std::vector<int> indices_;
};

struct TauKeyHash {
  std::size_t operator()(const TauKey& key) const noexcept;
};

/// Thread-safe write-once map TauKey -> value. The first write of a key wins;
/// later writes of the same key are ignored.
class MemoStore {
 public:
  MemoStore() = default;
  MemoStore(const MemoStore& other);
  MemoStore(MemoStore&& other) noexcept;
  MemoStore& operator=(MemoStore other) noexcept;

  std::optional<Rational> find(const TauKey& key) const;
  void insert(const TauKey& key, const Rational& value);
  std::size_t size() const;
  void clear();

  /// All entries sorted by key.
  std::vector<std::pair<TauKey, Rational>> entries() const;

  friend bool operator==(const MemoStore& a, const MemoStore& b) { return a.entries() == b.entries(); }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<TauKey, Rational, TauKeyHash> map_;
};

/// One cache line: "g|d1,...,dn|p/q", "-" for an empty index list.
std::string format_cache_line(const TauKey& key, const Rational& value);
/// Inverse of format_cache_line. Throws std::invalid_argument.
std::pair<TauKey, Rational> parse_cache_line(const std::string& line);

/// Thrown by load_cache for unreadable files or malformed lines.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes every entry, one per line, lines sorted lexicographically.
void save_cache(const MemoStore& store, const std::filesystem::path& path);
MemoStore load_cache(const std::filesystem::path& path);

/// Witten-Kontsevich correlators with a memo table.
///
/// Evaluation order: dimension and stability gates, the base cases
/// <tau_0^3>_0 = 1 and <tau_1>_1, then the string equation whenever a
/// 0-index is present, the dilaton equation when every index is 1, and the
/// DVV recursion on the largest index otherwise.
///
/// tau() may be called concurrently; the memo store is internally locked and
/// racing computations of one key agree.
class TauCalculator {
 public:
  /// `genus_one_base` is the value of <tau_1>_1. Anything other than 1/24 is
  /// only useful to probe how the recursion depends on it.
  explicit TauCalculator(Rational genus_one_base = Rational(1, 24));
  TauCalculator(MemoStore store, Rational genus_one_base = Rational(1, 24));

  Rational tau(const TauKey& key);
  Rational tau(int genus, std::vector<int> indices) { return tau(TauKey(genus, std::move(indices))); }

  /// <tau_2^{l_2} tau_3^{l_3} ...>_g
  Rational tau_batch(int genus, const MultiIndex& l);

  /// <tau_0^zeros tau_2^{l_2} ...>_g
  Rational tau_batch(int genus, const MultiIndex& l, int zeros);

  /// One string-equation step removing a 0-index. Requires a 0 in the key.
  Rational via_string(const TauKey& key);
  /// One dilaton step removing a 1-index. Requires a 1 in the key.
  Rational via_dilaton(const TauKey& key);
  /// One DVV step on an index equal to `k` (k >= 2, present in the key).
  Rational via_dvv(const TauKey& key, int k);

  const MemoStore& store() const { return store_; }
  MemoStore& store() { return store_; }

 private:
  Rational dispatch(const TauKey& key);

  MemoStore store_;
  Rational genus_one_base_;
};

}  // namespace wpvol

#endif  // WPVOL_TAU_HPP
