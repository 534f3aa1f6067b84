#include "lts/extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <queue>
#include <string>

namespace lts {

namespace {

using Mask = std::uint32_t;

Mask bit(Vertex v) { return Mask{1} << v; }
Mask mask_of(const Triple& t) { return bit(t.a) | bit(t.b) | bit(t.c); }

bool weakly_spreading_masks(std::span<const Mask> triples, Mask everything) {
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      Mask set = triples[i] | triples[j];
      bool changed = true;
      while (changed && set != everything) {
        changed = false;
        for (Mask t : triples) {
          if (std::popcount(t & set) == 2) {
            set |= t;
            changed = true;
          }
        }
      }
      if (set != everything) return false;
    }
  }
  return true;
}

// Ordering-constrained generation with smallest-fresh-label canonical
// labelling. T1 = {0,1,2}; T2 = {0,3,4} (T1 is symmetric in its vertices);
// each later triple adds the next fresh label through an uncovered pair of
// used vertices. Triples adding no vertex do not change the union, so they
// can be moved to the end of any ordering; they are appended once every
// vertex is used, in increasing order.
class WeaklySpreadingSearch {
 public:
  WeaklySpreadingSearch(std::size_t n, std::size_t m, std::uint64_t budget)
      : n_(n), m_(m), budget_(budget), everything_(bit(static_cast<Vertex>(n)) - 1) {}

  std::optional<std::vector<Triple>> run() {
    push(Triple{0, 1, 2});
    explore(std::nullopt);
    return found_;
  }

  std::vector<std::vector<Triple>> prefixes(std::size_t depth) {
    prefix_depth_ = depth;
    push(Triple{0, 1, 2});
    explore(std::nullopt);
    return std::move(prefixes_);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool uncovered(Vertex x, Vertex y) const noexcept { return (covered_[x] & bit(y)) == 0; }

  void push(const Triple& t) {
    chosen_.push_back(t);
    masks_.push_back(mask_of(t));
    covered_[t.a] |= bit(t.b) | bit(t.c);
    covered_[t.b] |= bit(t.a) | bit(t.c);
    covered_[t.c] |= bit(t.a) | bit(t.b);
    used_ = std::max<std::size_t>(used_, t.c + 1);
  }

  void pop(std::size_t used_before) {
    const Triple t = chosen_.back();
    chosen_.pop_back();
    masks_.pop_back();
    covered_[t.a] &= ~(bit(t.b) | bit(t.c));
    covered_[t.b] &= ~(bit(t.a) | bit(t.c));
    covered_[t.c] &= ~(bit(t.a) | bit(t.b));
    used_ = used_before;
  }

  // Returns true once a witness is found.
  bool explore(std::optional<Triple> last_closing) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::BudgetExceeded, "search exceeded " + std::to_string(budget_) + " nodes at m = " +
                                                 std::to_string(m_));
    }
    const std::size_t count = chosen_.size();
    if (prefix_depth_) {
      if (count == *prefix_depth_) {
        prefixes_.push_back(chosen_);
        return false;
      }
    }
    if (count == m_) {
      if (used_ == n_ && weakly_spreading_masks(masks_, everything_)) {
        found_ = chosen_;
        return true;
      }
      return false;
    }

    const std::size_t remaining = m_ - count;
    const std::size_t before = used_;
    if (used_ < n_) {
      const std::size_t fresh_steps_needed = count == 1 ? 1 + (n_ - 5) : n_ - used_;
      if (fresh_steps_needed > remaining) return false;
      if (count == 1) {
        push(Triple{0, 3, 4});
        bool done = explore(std::nullopt);
        pop(before);
        return done;
      }
      const auto fresh = static_cast<Vertex>(used_);
      for (Vertex x = 0; x < fresh; ++x) {
        for (Vertex y = x + 1; y < fresh; ++y) {
          if (!uncovered(x, y)) continue;
          push(Triple{x, y, fresh});
          bool done = explore(std::nullopt);
          pop(before);
          if (done) return true;
        }
      }
      return false;
    }

    const auto n = static_cast<Vertex>(n_);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        if (!uncovered(x, y)) continue;
        for (Vertex z = y + 1; z < n; ++z) {
          if (!uncovered(x, z) || !uncovered(y, z)) continue;
          Triple t{x, y, z};
          if (last_closing && !(*last_closing < t)) continue;
          push(t);
          bool done = explore(t);
          pop(before);
          if (done) return true;
        }
      }
    }
    return false;
  }

  std::size_t n_;
  std::size_t m_;
  std::uint64_t budget_;
  Mask everything_;
  std::uint64_t nodes_ = 0;
  std::array<Mask, kMaxSearchOrder> covered_{};
  std::vector<Triple> chosen_;
  std::vector<Mask> masks_;
  std::size_t used_ = 0;
  std::optional<std::vector<Triple>> found_;
  std::optional<std::size_t> prefix_depth_;
  std::vector<std::vector<Triple>> prefixes_;
};

void require_search_order(std::size_t n) {
  if (n < kMinSearchOrder || n > kMaxSearchOrder) {
    throw Error(ErrorCode::OrderOutOfRange, "search order must lie in [" + std::to_string(kMinSearchOrder) + "," +
                                                std::to_string(kMaxSearchOrder) + "], got " + std::to_string(n));
  }
}

}  // namespace

SearchResult min_weakly_spreading(std::size_t n, std::optional<std::size_t> start_at, std::uint64_t budget) {
  require_search_order(n);
  const std::size_t bound = n - 3;
  const std::size_t first = std::max<std::size_t>(start_at.value_or(bound), 1);
  const std::size_t max_m = n * (n - 1) / 6;

  SearchResult result;
  result.n = n;
  std::uint64_t spent = 0;
  for (std::size_t m = first; m <= max_m; ++m) {
    WeaklySpreadingSearch search(n, m, budget - spent);
    auto found = search.run();
    spent += search.nodes();
    if (found) {
      result.minimum = m;
      result.witness = build_system(n, std::span<const Triple>(*found));
      result.nodes_explored = spent;
      result.exhaustive_below = first < bound;
      return result;
    }
  }
  throw Error(ErrorCode::BudgetExceeded, "no weakly spreading system found on " + std::to_string(n) + " vertices");
}

std::vector<std::vector<Triple>> search_prefixes(std::size_t n, std::size_t m, std::size_t depth) {
  require_search_order(n);
  WeaklySpreadingSearch search(n, m, kDefaultSearchBudget);
  return search.prefixes(depth);
}

bool is_valid_ordering(std::span<const Triple> sequence) {
  std::vector<Vertex> seen;
  auto overlap = [&](const Triple& t) {
    return static_cast<std::size_t>(std::count_if(seen.begin(), seen.end(), [&](Vertex v) { return t.contains(v); }));
  };
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    const auto& t = sequence[k];
    if (k == 1 && overlap(t) < 1) return false;
    if (k >= 2 && overlap(t) < 2) return false;
    for (Vertex v : t.vertices()) {
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
  }
  return true;
}

std::optional<Ordering> ordering_witness(const TripleSystem& sys) {
  const auto& triples = sys.triples();
  const std::size_t m = triples.size();
  if (m == 0) return std::nullopt;
  if (m == 1) return Ordering{{triples[0]}};

  std::vector<std::vector<std::size_t>> incident(sys.n());
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex v : triples[i].vertices()) incident[v].push_back(i);
  }

  // Once a triple meets the union in two vertices it stays admissible, so for
  // a fixed opening pair the greedy completion succeeds iff any completion does.
  std::vector<std::uint8_t> inside(sys.n());
  std::vector<std::uint8_t> hits(m);
  std::vector<std::uint8_t> placed(m);
  for (std::size_t first = 0; first < m; ++first) {
    for (std::size_t second = 0; second < m; ++second) {
      if (second == first) continue;
      const auto& t1 = triples[first];
      const auto& t2 = triples[second];
      if (!t2.contains(t1.a) && !t2.contains(t1.b) && !t2.contains(t1.c)) continue;

      std::fill(inside.begin(), inside.end(), 0);
      std::fill(hits.begin(), hits.end(), 0);
      std::fill(placed.begin(), placed.end(), 0);
      std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
      Ordering ordering;
      auto place = [&](std::size_t idx) {
        placed[idx] = 1;
        ordering.sequence.push_back(triples[idx]);
        for (Vertex v : triples[idx].vertices()) {
          if (inside[v]) continue;
          inside[v] = 1;
          for (auto t : incident[v]) {
            if (++hits[t] == 2 && !placed[t]) ready.push(t);
          }
        }
      };
      place(first);
      place(second);
      while (!ready.empty()) {
        auto idx = ready.top();
        ready.pop();
        if (!placed[idx]) place(idx);
      }
      if (ordering.sequence.size() == m) return ordering;
    }
  }
  return std::nullopt;
}

}  // namespace lts
