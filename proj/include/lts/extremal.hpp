#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lts/core.hpp"

namespace lts {

struct SearchResult {
  std::size_t n = 0;
  std::size_t minimum = 0;      // fewest triples of a spanning weakly spreading system
  TripleSystem witness;
  std::uint64_t nodes_explored = 0;
  bool exhaustive_below = false;  // counts below `minimum` refuted by search, not by the n-3 bound
};

// Triple order in which T2 meets T1 and every later triple meets the union of
// the earlier ones in at least two vertices.
struct Ordering {
  std::vector<Triple> sequence;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 2'000'000'000;
inline constexpr std::size_t kMinSearchOrder = 5;
inline constexpr std::size_t kMaxSearchOrder = 12;

// Smallest m >= start_at (default n-3) admitting a weakly spreading system
// with m triples spanning [0, n). Throws OrderOutOfRange outside 5..12 and
// BudgetExceeded after `budget` search nodes.
SearchResult min_weakly_spreading(std::size_t n, std::optional<std::size_t> start_at = std::nullopt,
                                  std::uint64_t budget = kDefaultSearchBudget);

// Every partial candidate with `depth` triples produced by the generator that
// min_weakly_spreading uses for m triples on n vertices, in generation order.
std::vector<std::vector<Triple>> search_prefixes(std::size_t n, std::size_t m, std::size_t depth);

bool is_valid_ordering(std::span<const Triple> sequence);

std::optional<Ordering> ordering_witness(const TripleSystem& sys);

}  // namespace lts
