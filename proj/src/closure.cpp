#include "lts/closure.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "lts/combinations.hpp"
#include "lts/parallel.hpp"

namespace lts {

namespace {

void require_universe(const TripleSystem& sys, const VertexSet& s) {
  if (s.universe() != sys.n()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex set over [0," + std::to_string(s.universe()) +
                                                 ") used with a system on " + std::to_string(sys.n()) +
                                                 " vertices");
  }
}

// Incremental closure over a member list. Each newly added vertex is probed
// against the vertices already inside, so every pair is looked up once.
class ClosureScratch {
 public:
  explicit ClosureScratch(std::size_t n) : inside_(n, 0) {}

  // Returns the closure size; stops as soon as it reaches `stop_at`.
  std::size_t run(const TripleSystem& sys, std::span<const Vertex> seeds,
                  std::size_t stop_at = std::numeric_limits<std::size_t>::max()) {
    for (Vertex v : members_) inside_[v] = 0;
    members_.clear();
    for (Vertex v : seeds) add(v);
    for (std::size_t i = 0; i < members_.size() && members_.size() < stop_at; ++i) {
      Vertex v = members_[i];
      for (std::size_t j = 0; j < i; ++j) {
        auto z = sys.third_unchecked(v, members_[j]);
        if (z >= 0) add(static_cast<Vertex>(z));
      }
    }
    return members_.size();
  }

  const std::vector<Vertex>& members() const noexcept { return members_; }

 private:
  void add(Vertex v) {
    if (inside_[v] == 0) {
      inside_[v] = 1;
      members_.push_back(v);
    }
  }

  std::vector<std::uint8_t> inside_;
  std::vector<Vertex> members_;
};

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

std::uint64_t triple_mask(const Triple& t) { return bit(t.a) | bit(t.b) | bit(t.c); }

std::vector<std::uint64_t> triple_masks(const TripleSystem& sys) {
  std::vector<std::uint64_t> masks;
  masks.reserve(sys.size());
  for (const auto& t : sys.triples()) masks.push_back(triple_mask(t));
  return masks;
}

// Plain fixed point over the triple list: absorb any triple with exactly two
// vertices inside until nothing changes. Independent of the pair table.
std::uint64_t scan_closure(std::span<const std::uint64_t> masks, std::uint64_t set) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto t : masks) {
      if (std::popcount(t & set) == 2) {
        set |= t;
        changed = true;
      }
    }
  }
  return set;
}

std::uint64_t mask_of(std::span<const Vertex> vs) {
  std::uint64_t m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

// Chunks (k, x): k-subsets with smallest element x, for k in [k_lo, k_hi].
// In chunk order this is exactly shortlex order.
struct SizeFirstChunk {
  std::size_t k;
  Vertex first;
};

std::vector<SizeFirstChunk> size_first_chunks(std::size_t n, std::size_t k_lo, std::size_t k_hi) {
  std::vector<SizeFirstChunk> chunks;
  for (std::size_t k = k_lo; k <= k_hi && k <= n; ++k) {
    if (k == 0) continue;
    for (Vertex x = 0; x + k <= n; ++x) chunks.push_back({k, x});
  }
  return chunks;
}

// Visits the sets of a chunk in lexicographic order as sorted member lists.
template <class Visit>
bool visit_chunk(std::size_t n, const SizeFirstChunk& chunk, Visit&& visit) {
  std::vector<Vertex> set(chunk.k);
  set[0] = chunk.first;
  return for_each_combination(chunk.first + 1, static_cast<Vertex>(n), chunk.k - 1,
                              [&](std::span<const Vertex> rest) {
                                std::copy(rest.begin(), rest.end(), set.begin() + 1);
                                return visit(std::span<const Vertex>(set));
                              });
}

PropertyVerdict to_verdict(OrderedScan<Witness>&& scan) {
  PropertyVerdict v;
  v.holds = !scan.failure.has_value();
  v.witness = std::move(scan.failure);
  v.checked_count = scan.examined;
  return v;
}

PropertyVerdict spreading_reduced(const TripleSystem& sys) {
  const std::size_t n = sys.n();
  auto scan = first_failure<Witness>(n, [&](std::size_t x) {
    ChunkScan<Witness> r;
    ClosureScratch scratch(n);
    std::array<Vertex, 3> seeds{static_cast<Vertex>(x), 0, 0};
    for (Vertex y = static_cast<Vertex>(x) + 1; y < n && !r.failure; ++y) {
      for (Vertex z = y + 1; z < n; ++z) {
        if (sys.third_unchecked(static_cast<Vertex>(x), y) == static_cast<std::int32_t>(z)) continue;
        ++r.examined;
        seeds[1] = y;
        seeds[2] = z;
        if (scratch.run(sys, seeds, n) < n) {
          r.failure = VertexSet(n, seeds);
          break;
        }
      }
    }
    return r;
  });
  return to_verdict(std::move(scan));
}

PropertyVerdict spreading_brute_force(const TripleSystem& sys) {
  const std::size_t n = sys.n();
  if (n > kBruteForceSpreadingMaxN) {
    throw Error(ErrorCode::ModeTooLarge, "brute-force spreading check needs n <= " +
                                             std::to_string(kBruteForceSpreadingMaxN) + ", got " +
                                             std::to_string(n));
  }
  const auto masks = triple_masks(sys);
  const std::uint64_t everything = n == 64 ? ~std::uint64_t{0} : bit(static_cast<Vertex>(n)) - 1;
  const auto chunks = size_first_chunks(n, 3, n);
  auto scan = first_failure<Witness>(chunks.size(), [&](std::size_t c) {
    ChunkScan<Witness> r;
    visit_chunk(n, chunks[c], [&](std::span<const Vertex> set) {
      std::uint64_t m = mask_of(set);
      if (set.size() == 3 && std::find(masks.begin(), masks.end(), m) != masks.end()) return true;
      ++r.examined;
      if (scan_closure(masks, m) != everything) {
        r.failure = VertexSet(n, set);
        return false;
      }
      return true;
    });
    return r;
  });
  return to_verdict(std::move(scan));
}

}  // namespace

VertexSet neighbourhood(const TripleSystem& sys, const VertexSet& s) {
  require_universe(sys, s);
  VertexSet out(sys.n());
  auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      auto z = sys.third_unchecked(members[i], members[j]);
      if (z >= 0 && !s.contains(static_cast<Vertex>(z))) out.insert(static_cast<Vertex>(z));
    }
  }
  return out;
}

VertexSet closure(const TripleSystem& sys, const VertexSet& s) {
  require_universe(sys, s);
  ClosureScratch scratch(sys.n());
  auto seeds = s.members();
  scratch.run(sys, seeds);
  return VertexSet(sys.n(), scratch.members());
}

bool is_nontrivial(const TripleSystem& sys, const VertexSet& s) {
  auto size = s.size();
  if (size < 3) return false;
  if (size > 3) return true;
  auto m = s.members();
  return !sys.has_triple(Triple{m[0], m[1], m[2]});
}

PropertyVerdict is_spreading(const TripleSystem& sys, SpreadingMode mode) {
  return mode == SpreadingMode::reduced ? spreading_reduced(sys) : spreading_brute_force(sys);
}

PropertyVerdict is_weakly_spreading(const TripleSystem& sys) {
  const std::size_t n = sys.n();
  const auto& triples = sys.triples();
  if (triples.size() < 2) return PropertyVerdict{true, std::nullopt, 0};
  auto scan = first_failure<Witness>(triples.size(), [&](std::size_t i) {
    ChunkScan<Witness> r;
    ClosureScratch scratch(n);
    std::array<Vertex, 6> seeds{};
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      ++r.examined;
      auto a = triples[i].vertices();
      auto b = triples[j].vertices();
      std::copy(a.begin(), a.end(), seeds.begin());
      std::copy(b.begin(), b.end(), seeds.begin() + 3);
      if (scratch.run(sys, seeds, n) < n) {
        r.failure = TriplePair{triples[i], triples[j]};
        break;
      }
    }
    return r;
  });
  return to_verdict(std::move(scan));
}

PropertyVerdict is_strongly_connected(const TripleSystem& sys) {
  const std::size_t n = sys.n();
  if (n > kStrongConnectivityMaxN) {
    throw Error(ErrorCode::TooLarge, "strong connectivity check needs n <= " +
                                         std::to_string(kStrongConnectivityMaxN) + ", got " + std::to_string(n));
  }
  if (n < 5) return PropertyVerdict{true, std::nullopt, 0};
  const auto masks = triple_masks(sys);
  const auto chunks = size_first_chunks(n, 4, n - 1);
  auto scan = first_failure<Witness>(chunks.size(), [&](std::size_t c) {
    ChunkScan<Witness> r;
    visit_chunk(n, chunks[c], [&](std::span<const Vertex> side) {
      ++r.examined;
      std::uint64_t u = mask_of(side);
      bool crossed = std::any_of(masks.begin(), masks.end(),
                                 [u](std::uint64_t t) { return std::popcount(t & u) == 2; });
      if (!crossed) {
        r.failure = VertexSet(n, side);
        return false;
      }
      return true;
    });
    return r;
  });
  return to_verdict(std::move(scan));
}

ExpanderReport expander_deficiency(const TripleSystem& sys, std::optional<std::size_t> max_size,
                                   std::uint64_t budget) {
  const std::size_t n = sys.n();
  const std::size_t top = std::min(max_size.value_or(n / 2), n);

  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= top; ++k) {
    std::uint64_t next = total + binomial(n, k);
    if (next < total || next > budget) {
      throw Error(ErrorCode::BudgetExceeded,
                  "expander scan over sizes 1.." + std::to_string(top) + " exceeds budget " +
                      std::to_string(budget) + "; sizes up to " + std::to_string(k - 1) + " fit");
    }
    total = next;
  }

  struct SizeScan {
    std::size_t min_neighbourhood = std::numeric_limits<std::size_t>::max();
    std::int64_t min_deficiency = std::numeric_limits<std::int64_t>::max();
    std::vector<Vertex> worst;
    std::optional<Ratio> min_ratio;
    std::vector<Vertex> ratio_set;
    std::uint64_t examined = 0;
  };
  std::vector<SizeScan> per_size(top + 1);

  parallel_for(top, [&](std::size_t idx) {
    const std::size_t k = idx + 1;
    SizeScan& out = per_size[k];
    std::vector<std::uint32_t> stamp(n, 0), inside(n, 0);
    std::uint32_t epoch = 0;
    for_each_combination(0, static_cast<Vertex>(n), k, [&](std::span<const Vertex> set) {
      ++epoch;
      for (Vertex v : set) inside[v] = epoch;
      std::size_t count = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          auto z = sys.third_unchecked(set[i], set[j]);
          if (z < 0) continue;
          auto zv = static_cast<std::size_t>(z);
          if (inside[zv] != epoch && stamp[zv] != epoch) {
            stamp[zv] = epoch;
            ++count;
          }
        }
      }
      ++out.examined;
      out.min_neighbourhood = std::min(out.min_neighbourhood, count);
      std::int64_t deficiency = static_cast<std::int64_t>(count) - (static_cast<std::int64_t>(k) - 3);
      if (deficiency < out.min_deficiency) {
        out.min_deficiency = deficiency;
        out.worst.assign(set.begin(), set.end());
      }
      bool nontrivial = k > 3 || (k == 3 && !sys.has_triple(Triple{set[0], set[1], set[2]}));
      if (nontrivial) {
        Ratio r{static_cast<std::int64_t>(count), static_cast<std::int64_t>(k)};
        if (!out.min_ratio || r < *out.min_ratio) {
          out.min_ratio = r;
          out.ratio_set.assign(set.begin(), set.end());
        }
      }
      return true;
    });
  });

  ExpanderReport report;
  report.max_size = top;
  report.worst_set = VertexSet(n);
  report.min_deficiency = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k = 1; k <= top; ++k) {
    const auto& s = per_size[k];
    if (s.examined == 0) continue;
    report.sets_examined += s.examined;
    report.per_size_min_neighbourhood[k] = s.min_neighbourhood;
    if (s.min_deficiency < report.min_deficiency) {
      report.min_deficiency = s.min_deficiency;
      report.worst_set = VertexSet(n, s.worst);
    }
    if (s.min_ratio && (!report.min_ratio || *s.min_ratio < *report.min_ratio)) {
      report.min_ratio = s.min_ratio;
      report.ratio_set = VertexSet(n, s.ratio_set);
    }
  }
  if (report.sets_examined == 0) report.min_deficiency = 0;
  return report;
}

}  // namespace lts
