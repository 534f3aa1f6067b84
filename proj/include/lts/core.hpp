#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lts/errors.hpp"

namespace lts {

using Vertex = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

// Unvalidated triple as it arrives from a file, a caller or a binding.
using RawTriple = std::array<std::int64_t, 3>;

// A block of a triple system, stored with a < b < c.
struct Triple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  // Sorts the three vertices. Throws DegenerateTriple on a repeated vertex.
  static Triple sorted(Vertex x, Vertex y, Vertex z);

  bool contains(Vertex v) const noexcept { return v == a || v == b || v == c; }
  std::array<Vertex, 3> vertices() const noexcept { return {a, b, c}; }

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

using TriplePair = std::pair<Triple, Triple>;

// Subset of the vertex range [0, n) of a system, kept as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  // Throws VertexOutOfRange when a member is >= universe.
  VertexSet(std::size_t universe, std::span<const Vertex> members);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  // Members in increasing order.
  std::vector<Vertex> members() const;

  bool is_subset_of(const VertexSet& other) const;
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Order used for every witness: smaller sets first, then lexicographic on
// the sorted member lists.
bool shortlex_less(std::span<const Vertex> lhs, std::span<const Vertex> rhs);
bool shortlex_less(const VertexSet& lhs, const VertexSet& rhs);

// Immutable validated linear triple system. Construct through build_system.
class TripleSystem {
 public:
  TripleSystem() = default;

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return triples_.size(); }
  const std::vector<Triple>& triples() const noexcept { return triples_; }

  // Unchecked lookup of the third point of a covered pair; -1 when uncovered.
  std::int32_t third_unchecked(Vertex x, Vertex y) const noexcept {
    return pair_table_[static_cast<std::size_t>(x) * n_ + y];
  }

  bool has_triple(const Triple& t) const noexcept;

  // Vertices lying in at least one triple.
  VertexSet span() const;

 private:
  friend TripleSystem build_system(std::size_t n, std::span<const RawTriple> triples);

  std::size_t n_ = 0;
  std::vector<Triple> triples_;
  std::vector<std::int32_t> pair_table_;
};

// Validates linearity and builds the pair -> third-point table.
// Throws VertexOutOfRange, DegenerateTriple, DuplicatePairCoverage (pair() set).
TripleSystem build_system(std::size_t n, std::span<const RawTriple> triples);
TripleSystem build_system(std::size_t n, std::span<const Triple> triples);

// Throws SameVertex when x == y and VertexOutOfRange for indices >= n.
std::optional<Vertex> third_point(const TripleSystem& sys, Vertex x, Vertex y);

bool is_steiner(const TripleSystem& sys);

// Pairs not covered by any triple, lexicographically sorted.
std::vector<VertexPair> uncovered_edges(const TripleSystem& sys);

}  // namespace lts
