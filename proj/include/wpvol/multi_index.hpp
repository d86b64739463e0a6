#ifndef WPVOL_MULTI_INDEX_HPP
#define WPVOL_MULTI_INDEX_HPP

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpvol {

/// The multi-index l = (l_2, l_3, ...) counting tau_i insertions with i >= 2.
/// Only nonzero multiplicities are stored.
class MultiIndex {
 public:
  MultiIndex() = default;

  /// Throws std::invalid_argument if some key is < 2 or some value is < 0.
  /// Zero multiplicities are dropped.
  explicit MultiIndex(const std::map<int, int>& entries) {
    for (const auto& [i, li] : entries) set(i, li);
  }
  MultiIndex(std::initializer_list<std::pair<const int, int>> entries) : MultiIndex(std::map<int, int>(entries)) {}

  /// Sets l_i; l_i = 0 erases the entry.
  void set(int i, int li) {
    if (i < 2) throw std::invalid_argument("multi-index position must be >= 2, got " + std::to_string(i));
    if (li < 0) throw std::invalid_argument("multi-index entry must be >= 0");
    if (li == 0) {
      entries_.erase(i);
    } else {
      entries_[i] = li;
    }
  }

  int at(int i) const {
    const auto it = entries_.find(i);
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<int, int>& entries() const { return entries_; }

  /// |l| = sum (i-1) l_i
  int weight() const {
    int w = 0;
    for (const auto& [i, li] : entries_) w += (i - 1) * li;
    return w;
  }

  /// ||l|| = sum l_i
  int length() const {
    int len = 0;
    for (const auto& [i, li] : entries_) len += li;
    return len;
  }

  int max_position() const { return entries_.empty() ? 1 : entries_.rbegin()->first; }

  /// tau indices, each i repeated l_i times, in descending order.
  std::vector<int> tau_indices() const {
    std::vector<int> out;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) out.insert(out.end(), it->second, it->first);
    return out;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::map<int, int> entries_;
};

}  // namespace wpvol

#endif  // WPVOL_MULTI_INDEX_HPP
