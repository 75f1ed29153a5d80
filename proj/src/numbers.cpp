#include "motzkin/numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace motzkin {

namespace {

// Memoized prefix of M_n. Growth is monotone; every value is computed once
// under the lock and then only read.
class MotzkinCache {
 public:
  BigInt value(int n) {
    std::scoped_lock lock(mu_);
    while (static_cast<int>(values_.size()) <= n) {
      const int m = static_cast<int>(values_.size());
      BigInt next = values_[m - 1];
      for (int k = 0; k + 2 <= m; ++k) {
        next += values_[k] * values_[m - 2 - k];
      }
      values_.push_back(std::move(next));
    }
    return values_[n];
  }

 private:
  std::mutex mu_;
  std::vector<BigInt> values_{BigInt(1)};  // M_0
};

MotzkinCache& motzkin_cache() {
  static MotzkinCache cache;
  return cache;
}

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": index must be >= 0");
  }
}

}  // namespace

BigInt motzkin(int n) {
  require_nonnegative(n, "motzkin");
  return motzkin_cache().value(n);
}

BigInt motzkin_increment(int n) {
  require_nonnegative(n, "motzkin_increment");
  if (n == 0) return 0;
  if (n == 1) return 1;  // the 1-word "0" counts as unique
  return motzkin(n) - motzkin(n - 1);
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

BigInt catalan(int k) {
  require_nonnegative(k, "catalan");
  return binomial(2 * k, k) / (k + 1);
}

BigInt triangular(int n) {
  require_nonnegative(n, "triangular");
  return BigInt(n) * (n + 1) / 2;
}

BigInt tetrahedral(int t) {
  require_nonnegative(t, "tetrahedral");
  return BigInt(t) * (t + 1) * (t + 2) / 6;
}

BigInt delta(int r) {
  if (r < 1) {
    throw std::invalid_argument("delta: defined for r >= 1");
  }
  return motzkin_increment(r + 1) - motzkin(r - 1);
}

}  // namespace motzkin
