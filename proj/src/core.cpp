#include "lts/core.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace lts {

namespace {

std::string vertex_list(std::int64_t x, std::int64_t y, std::int64_t z) {
  return "{" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + "}";
}

}  // namespace

Triple Triple::sorted(Vertex x, Vertex y, Vertex z) {
  if (x == y || y == z || x == z) {
    throw Error(ErrorCode::DegenerateTriple, "repeated vertex in " + vertex_list(x, y, z));
  }
  std::array<Vertex, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  return Triple{v[0], v[1], v[2]};
}

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in [0," + std::to_string(universe_) + ")");
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
    if ((words_[w] & ~theirs) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ > universe_) {
    universe_ = other.universe_;
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
  }
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w) {
    words_[w] &= ~other.words_[w];
  }
  return *this;
}

bool shortlex_less(std::span<const Vertex> lhs, std::span<const Vertex> rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

bool shortlex_less(const VertexSet& lhs, const VertexSet& rhs) {
  auto l = lhs.members();
  auto r = rhs.members();
  return shortlex_less(l, r);
}

bool TripleSystem::has_triple(const Triple& t) const noexcept {
  if (t.c >= n_) return false;
  return third_unchecked(t.a, t.b) == static_cast<std::int32_t>(t.c);
}

VertexSet TripleSystem::span() const {
  VertexSet s(n_);
  for (const auto& t : triples_) {
    s.insert(t.a);
    s.insert(t.b);
    s.insert(t.c);
  }
  return s;
}

TripleSystem build_system(std::size_t n, std::span<const RawTriple> raw) {
  std::vector<Triple> triples;
  triples.reserve(raw.size());
  for (const auto& r : raw) {
    for (auto v : r) {
      if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
        throw Error(ErrorCode::VertexOutOfRange, "triple " + vertex_list(r[0], r[1], r[2]) +
                                                     " has entry outside [0," + std::to_string(n) + ")");
      }
    }
    triples.push_back(Triple::sorted(static_cast<Vertex>(r[0]), static_cast<Vertex>(r[1]),
                                     static_cast<Vertex>(r[2])));
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

  TripleSystem sys;
  sys.n_ = n;
  sys.pair_table_.assign(n * n, -1);
  auto cover = [&](Vertex x, Vertex y, Vertex z) {
    auto& slot = sys.pair_table_[static_cast<std::size_t>(x) * n + y];
    if (slot != -1) {
      Error err(ErrorCode::DuplicatePairCoverage,
                "pair (" + std::to_string(x) + "," + std::to_string(y) + ") lies in two triples");
      err.with_pair(x, y);
      throw err;
    }
    slot = static_cast<std::int32_t>(z);
    sys.pair_table_[static_cast<std::size_t>(y) * n + x] = static_cast<std::int32_t>(z);
  };
  for (const auto& t : triples) {
    cover(t.a, t.b, t.c);
    cover(t.a, t.c, t.b);
    cover(t.b, t.c, t.a);
  }
  sys.triples_ = std::move(triples);
  return sys;
}

TripleSystem build_system(std::size_t n, std::span<const Triple> triples) {
  std::vector<RawTriple> raw;
  raw.reserve(triples.size());
  for (const auto& t : triples) raw.push_back({t.a, t.b, t.c});
  return build_system(n, std::span<const RawTriple>(raw));
}

std::optional<Vertex> third_point(const TripleSystem& sys, Vertex x, Vertex y) {
  if (x == y) throw Error(ErrorCode::SameVertex, "third_point needs two distinct vertices");
  if (x >= sys.n() || y >= sys.n()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex outside [0," + std::to_string(sys.n()) + ")");
  }
  auto z = sys.third_unchecked(x, y);
  if (z < 0) return std::nullopt;
  return static_cast<Vertex>(z);
}

bool is_steiner(const TripleSystem& sys) {
  auto n = sys.n();
  return 3 * sys.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<VertexPair> uncovered_edges(const TripleSystem& sys) {
  std::vector<VertexPair> out;
  for (Vertex x = 0; x < sys.n(); ++x) {
    for (Vertex y = x + 1; y < sys.n(); ++y) {
      if (sys.third_unchecked(x, y) < 0) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace lts
