// Independent reference routines for tests. They work from the raw triple
// list only (no pair table, no incremental closure) so they can check the
// library's fast paths.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "lts/core.hpp"

namespace lts::oracle {

using Mask = std::uint64_t;

inline Mask mask(std::initializer_list<Vertex> vs) {
  Mask m = 0;
  for (auto v : vs) m |= Mask{1} << v;
  return m;
}

inline Mask mask(const Triple& t) { return mask({t.a, t.b, t.c}); }

inline Mask mask(const VertexSet& s) {
  Mask m = 0;
  for (auto v : s.members()) m |= Mask{1} << v;
  return m;
}

inline Mask full(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<Mask> triple_masks(const TripleSystem& sys) {
  std::vector<Mask> out;
  for (const auto& t : sys.triples()) out.push_back(mask(t));
  return out;
}

// Vertices outside s that complete a triple with two vertices of s.
inline Mask neighbourhood(std::span<const Mask> triples, Mask s) {
  Mask out = 0;
  for (auto t : triples) {
    if (std::popcount(t & s) == 2) out |= t & ~s;
  }
  return out;
}

inline Mask closure(std::span<const Mask> triples, Mask s) {
  for (Mask grow = neighbourhood(triples, s); grow != 0; grow = neighbourhood(triples, s)) s |= grow;
  return s;
}

inline std::size_t covered_pairs(const TripleSystem& sys) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (const auto& t : sys.triples()) {
    pairs.insert({t.a, t.b});
    pairs.insert({t.a, t.c});
    pairs.insert({t.b, t.c});
  }
  return pairs.size();
}

inline bool is_triple(std::span<const Mask> triples, Mask s) {
  return std::find(triples.begin(), triples.end(), s) != triples.end();
}

// Spreading straight from the definition: every subset of size >= 3 that is
// not a triple closes to V.
inline bool spreading_by_definition(const TripleSystem& sys) {
  auto ts = triple_masks(sys);
  const Mask all = full(sys.n());
  for (Mask s = 0; s <= all; ++s) {
    if (std::popcount(s) < 3 || is_triple(ts, s)) continue;
    if (closure(ts, s) != all) return false;
  }
  return true;
}

// Weak spreading straight from the definition over every subfamily of at
// least two triples (small systems only).
inline bool weakly_spreading_by_definition(const TripleSystem& sys) {
  auto ts = triple_masks(sys);
  const Mask all = full(sys.n());
  const std::size_t m = ts.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    if (std::popcount(pick) < 2) continue;
    Mask s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick >> i) & 1u) s |= ts[i];
    }
    if (closure(ts, s) != all) return false;
  }
  return true;
}

inline bool strongly_connected_by_definition(const TripleSystem& sys) {
  auto ts = triple_masks(sys);
  const Mask all = full(sys.n());
  for (Mask u = 0; u < all; ++u) {
    if (std::popcount(u) < 4) continue;
    bool ok = std::any_of(ts.begin(), ts.end(), [u](Mask t) { return std::popcount(t & u) == 2; });
    if (!ok) return false;
  }
  return true;
}

// Number of linear systems of exactly m triples on [0,n) that cover every
// vertex and are weakly spreading by definition (every subfamily of at least
// two triples). Plain recursion over all triples; no ordering assumption.
inline std::size_t count_spanning_wsp(std::size_t n, std::size_t m) {
  std::vector<Mask> all_triples;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) all_triples.push_back(mask({a, b, c}));
    }
  }
  const Mask everything = full(n);
  std::vector<Mask> pick;
  std::size_t found = 0;
  auto weakly_spreading = [&]() {
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << pick.size()); ++sub) {
      if (std::popcount(sub) < 2) continue;
      Mask s = 0;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        if ((sub >> i) & 1u) s |= pick[i];
      }
      if (closure(pick, s) != everything) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t from, Mask covered) -> void {
    if (pick.size() == m) {
      if (covered == everything && weakly_spreading()) ++found;
      return;
    }
    // Each further triple covers at most three new vertices.
    if (static_cast<std::size_t>(std::popcount(everything & ~covered)) > 3 * (m - pick.size())) return;
    for (std::size_t i = from; i < all_triples.size(); ++i) {
      Mask t = all_triples[i];
      bool linear = std::none_of(pick.begin(), pick.end(), [t](Mask u) { return std::popcount(t & u) > 1; });
      if (!linear) continue;
      pick.push_back(t);
      self(self, i + 1, covered | t);
      pick.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return found;
}

// Random linear system: shuffled candidate triples accepted greedily.
inline TripleSystem random_linear_system(std::mt19937_64& rng, std::size_t n, std::size_t attempts) {
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<Triple> triples;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (std::size_t i = 0; i < attempts; ++i) {
    Vertex x = pick(rng), y = pick(rng), z = pick(rng);
    if (x == y || y == z || x == z) continue;
    if (used[x][y] || used[x][z] || used[y][z]) continue;
    used[x][y] = used[y][x] = used[x][z] = used[z][x] = used[y][z] = used[z][y] = true;
    triples.push_back(Triple::sorted(x, y, z));
  }
  return build_system(n, std::span<const Triple>(triples));
}

}  // namespace lts::oracle
