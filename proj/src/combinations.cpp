#include "lts/combinations.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace lts {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) is divisible by i; cancel first so the product stays exact.
    std::uint64_t g = std::gcd(r, i);
    std::uint64_t factor = (n - k + i) / (i / g);
    r /= g;
    if (r > kMax / factor) return kMax;
    r *= factor;
  }
  return r;
}

}  // namespace lts
