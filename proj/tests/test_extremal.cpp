#include <doctest.h>

#include <set>

#include "lts/closure.hpp"
#include "lts/constructions.hpp"
#include "lts/extremal.hpp"
#include "oracles.hpp"

using namespace lts;

TEST_CASE("min_weakly_spreading small orders") {
  auto five = min_weakly_spreading(5);
  CHECK(five.minimum == 2);
  CHECK_FALSE(five.exhaustive_below);
  CHECK(five.witness.size() == 2);
  CHECK(is_weakly_spreading(five.witness).holds);

  for (std::size_t n : {6u, 7u, 8u}) {
    auto r = min_weakly_spreading(n);
    CHECK(r.minimum == n - 3);
    CHECK(r.witness.n() == n);
    CHECK(r.witness.size() == r.minimum);
    CHECK(r.witness.span().size() == n);
    CHECK(is_weakly_spreading(r.witness).holds);
    CHECK(oracle::weakly_spreading_by_definition(r.witness));
    CHECK(r.nodes_explored > 0);
  }
  CHECK(min_weakly_spreading(8).minimum == 5);
}

TEST_CASE("counts below n-3 are refuted") {
  auto r = min_weakly_spreading(6, 2);
  CHECK(r.minimum == 3);
  CHECK(r.exhaustive_below);

  // Independent enumeration over all subsets of triples. Two disjoint triples
  // on six vertices satisfy the definition vacuously (their union is V); the
  // ordering-constrained search excludes them, which is why it reports 3.
  CHECK(oracle::count_spanning_wsp(6, 2) == 10);
  CHECK(oracle::count_spanning_wsp(6, 3) > 0);
  CHECK(oracle::count_spanning_wsp(7, 3) == 0);
  CHECK(oracle::count_spanning_wsp(7, 4) > 0);
  CHECK(oracle::count_spanning_wsp(8, 4) == 0);
}

TEST_CASE("search argument checks") {
  for (std::size_t n : {4u, 13u}) {
    try {
      min_weakly_spreading(n);
      FAIL("expected OrderOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderOutOfRange);
    }
  }
  try {
    min_weakly_spreading(9, std::nullopt, 5);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("generation emits no duplicate labelled candidates") {
  for (std::size_t n : {7u, 9u, 10u}) {
    for (std::size_t depth = 1; depth <= 4; ++depth) {
      auto prefixes = search_prefixes(n, n - 3, depth);
      std::set<std::vector<Triple>> canonical;
      for (auto p : prefixes) {
        CHECK(is_valid_ordering(p));
        std::sort(p.begin(), p.end());
        canonical.insert(p);
      }
      CHECK(canonical.size() == prefixes.size());
    }
  }
  CHECK(search_prefixes(8, 5, 2).size() == 1);
  // T3 runs through the four pairs of {0..4} left uncovered by {0,1,2} and {0,3,4}.
  CHECK(search_prefixes(8, 5, 3).size() == 4);
}

TEST_CASE("ordering_witness") {
  auto single = ordering_witness(build_system(3, std::vector<RawTriple>{{0, 1, 2}}));
  REQUIRE(single.has_value());
  CHECK(single->sequence.size() == 1);

  CHECK_FALSE(ordering_witness(build_system(6, std::vector<RawTriple>{{0, 1, 2}, {3, 4, 5}})).has_value());
  CHECK_FALSE(ordering_witness(build_system(4, std::span<const RawTriple>{})).has_value());

  auto crowned = crowning(spreading_6p3(3));
  auto ordering = ordering_witness(crowned);
  REQUIRE(ordering.has_value());
  CHECK(ordering->sequence.size() == crowned.size());
  CHECK(is_valid_ordering(ordering->sequence));
  auto sorted = ordering->sequence;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == crowned.triples());
}

TEST_CASE("weakly spreading systems satisfy the n-3 bound through their ordering") {
  std::vector<TripleSystem> corpus{bose_skolem(3),   bose_skolem(5),    spreading_6p3(3),
                                   cayley_latin(3),  cayley_latin(5),   crowning(spreading_6p3(3)),
                                   min_weakly_spreading(7).witness};
  for (const auto& sys : corpus) {
    REQUIRE(is_weakly_spreading(sys).holds);
    auto ordering = ordering_witness(sys);
    REQUIRE(ordering.has_value());
    CHECK(is_valid_ordering(ordering->sequence));
    CHECK(sys.size() + 3 >= sys.span().size());
  }
}

TEST_CASE("is_valid_ordering") {
  std::vector<Triple> good{{0, 1, 2}, {2, 3, 4}, {0, 3, 5}};
  CHECK(is_valid_ordering(good));
  std::vector<Triple> bad_second{{0, 1, 2}, {3, 4, 5}};
  CHECK_FALSE(is_valid_ordering(bad_second));
  std::vector<Triple> bad_third{{0, 1, 2}, {2, 3, 4}, {0, 5, 6}};
  CHECK_FALSE(is_valid_ordering(bad_third));
}
