#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>

#include "lts/core.hpp"

namespace lts {

// A failing candidate: a vertex set (spreading, strong connectivity) or a
// pair of triples (weak spreading).
using Witness = std::variant<VertexSet, TriplePair>;

struct PropertyVerdict {
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds; first failing candidate
  std::size_t checked_count = 0;   // candidates examined, witness included
};

enum class SpreadingMode { reduced, brute_force };

// Non-negative fraction compared by cross multiplication.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator<(const Ratio& l, const Ratio& r) noexcept { return l.num * r.den < r.num * l.den; }
  friend bool operator==(const Ratio& l, const Ratio& r) noexcept { return l.num * r.den == r.num * l.den; }
};

struct ExpanderReport {
  std::int64_t min_deficiency = 0;                   // min |N(S)| - (|S| - 3)
  std::map<std::size_t, std::size_t> per_size_min_neighbourhood;
  VertexSet worst_set;                               // shortlex-first set attaining min_deficiency
  std::optional<Ratio> min_ratio;                    // min |N(S)|/|S| over nontrivial S
  std::optional<VertexSet> ratio_set;                // shortlex-first set attaining min_ratio
  std::size_t max_size = 0;
  std::uint64_t sets_examined = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;
inline constexpr std::size_t kBruteForceSpreadingMaxN = 20;
inline constexpr std::size_t kStrongConnectivityMaxN = 26;

// Vertices outside s completing a triple with a covered pair inside s.
VertexSet neighbourhood(const TripleSystem& sys, const VertexSet& s);

// Least superset of s with empty neighbourhood.
VertexSet closure(const TripleSystem& sys, const VertexSet& s);

// Nontrivial: at least three vertices and not a triple of the system.
bool is_nontrivial(const TripleSystem& sys, const VertexSet& s);

// Reduced mode checks every non-triple 3-subset; brute_force checks every
// nontrivial subset with an independent fixed-point routine (n <= 20).
PropertyVerdict is_spreading(const TripleSystem& sys, SpreadingMode mode = SpreadingMode::reduced);

// Checks cl(T1 u T2) = V for every pair of distinct triples.
PropertyVerdict is_weakly_spreading(const TripleSystem& sys);

// Every U with 4 <= |U| <= n-1 must meet some triple in exactly two vertices.
// Throws TooLarge when n > 26.
PropertyVerdict is_strongly_connected(const TripleSystem& sys);

// Exhaustive vertex-expansion scan over 1 <= |S| <= max_size (default n/2).
// Throws BudgetExceeded when the number of sets exceeds `budget`.
ExpanderReport expander_deficiency(const TripleSystem& sys, std::optional<std::size_t> max_size = std::nullopt,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace lts
