#include "wpvol/factorial.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace wpvol {

namespace {

// Grow-only table guarded by a mutex; values are returned by copy so callers
// never hold references into storage that another thread may reallocate.
class MemoTable {
 public:
  template <typename Next>
  Integer get(int n, Next next) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= n) {
      values_.push_back(next(static_cast<int>(values_.size()), values_));
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::vector<Integer> values_;
};

}  // namespace

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  static MemoTable table;
  return table.get(n, [](int k, const std::vector<Integer>& prev) {
    return k == 0 ? Integer(1) : Integer(prev.back() * k);
  });
}

Integer odd_double_factorial(int k) {
  if (k < 0) throw std::invalid_argument("double factorial index must be >= 0");
  static MemoTable table;
  return table.get(k, [](int j, const std::vector<Integer>& prev) {
    return j == 0 ? Integer(1) : Integer(prev.back() * (2 * j - 1));
  });
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace wpvol
