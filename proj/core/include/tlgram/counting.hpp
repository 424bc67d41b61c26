#ifndef TLGRAM_COUNTING_HPP
#define TLGRAM_COUNTING_HPP

#include <cstdint>

namespace tlgram {

// Exact binomial coefficient; callers stay within n <= 34 where the
// result fits comfortably in 64 bits.
constexpr std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // divisibility holds at every step
  }
  return r;
}

constexpr std::int64_t catalan(int n) {
  return binomial(2 * n, n) / (n + 1);
}

}  // namespace tlgram

#endif  // TLGRAM_COUNTING_HPP
