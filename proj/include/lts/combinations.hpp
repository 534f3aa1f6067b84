#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lts/core.hpp"

namespace lts {

// Visits the k-subsets of [lo, hi) in lexicographic order. The visitor gets a
// sorted span and returns false to stop. Returns false iff stopped early.
template <class Visit>
bool for_each_combination(Vertex lo, Vertex hi, std::size_t k, Visit&& visit) {
  if (hi < lo) return true;
  std::size_t range = hi - lo;
  if (k > range) return true;
  std::vector<Vertex> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = lo + static_cast<Vertex>(i);
  for (;;) {
    if (!visit(std::span<const Vertex>(c))) return false;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == hi - k + (i - 1)) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace lts
