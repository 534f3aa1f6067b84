#include <doctest.h>

#include <cmath>
#include <random>

#include "lts/bounds.hpp"
#include "lts/constructions.hpp"
#include "lts/errors.hpp"

using namespace lts;

TEST_CASE("sumset") {
  CHECK(sumset(ResidueSet(7, {0}), ResidueSet(7, {0})) == ResidueSet(7, {0}));
  auto s = sumset(ResidueSet(7, {1, 2}), ResidueSet(7, {3, 4}));
  CHECK(s.members() == std::vector<std::uint32_t>{4, 5, 6});
  CHECK(sumset(ResidueSet::whole_group(5), ResidueSet::whole_group(5)) == ResidueSet::whole_group(5));
  CHECK(sumset(ResidueSet(6, {5}), ResidueSet(6, {4})).members() == std::vector<std::uint32_t>{3});

  try {
    sumset(ResidueSet(5, {1}), ResidueSet(7, {1}));
    FAIL("expected ModulusMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModulusMismatch);
  }
  try {
    sumset(ResidueSet(5, {}), ResidueSet(5, {1}));
    FAIL("expected EmptyOperand");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyOperand);
  }
}

TEST_CASE("restricted sumset") {
  CHECK(restricted_sumset(ResidueSet(7, {3})).empty());
  CHECK(restricted_sumset(ResidueSet(5, {0, 1, 2})).members() == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(restricted_sumset(ResidueSet::whole_group(3)) == ResidueSet::whole_group(3));
}

TEST_CASE("Cauchy-Davenport and Erdos-Heilbronn lower bounds hold on random instances") {
  const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  std::mt19937_64 rng(31);
  for (int round = 0; round < 1000; ++round) {
    std::uint32_t p = primes[rng() % primes.size()];
    auto random_set = [&](bool nonempty) {
      std::vector<std::uint32_t> xs;
      for (std::uint32_t x = 0; x < p; ++x) {
        if (rng() % 3 == 0) xs.push_back(x);
      }
      if (nonempty && xs.empty()) xs.push_back(static_cast<std::uint32_t>(rng() % p));
      return ResidueSet(p, xs);
    };
    auto a = random_set(true);
    auto b = random_set(true);
    CHECK(sumset(a, b).size() >= std::min<std::size_t>(p, a.size() + b.size() - 1));
    auto c = random_set(false);
    auto bound = std::min<std::int64_t>(p, 2 * static_cast<std::int64_t>(c.size()) - 3);
    CHECK(static_cast<std::int64_t>(restricted_sumset(c).size()) >= bound);
  }
}

TEST_CASE("tau") {
  CHECK(average_value_ratio(1.0) == doctest::Approx(0.0));
  CHECK(average_value_ratio(0.5) == doctest::Approx(0.5));

  auto t = tau();
  CHECK(std::abs(t.tau - 0.51829) < 1e-4);
  CHECK(t.argmax_z > 0.5);
  CHECK(t.argmax_z < 1.0);

  // Dense grid oracle.
  double best = 0.0;
  for (int i = 0; i <= 200000; ++i) best = std::max(best, average_value_ratio(0.5 + 0.5 * i / 200000.0));
  CHECK(std::abs(best - t.tau) < 1e-9);
  CHECK(t.tau >= best - 1e-12);

  CHECK_THROWS_AS(tau(0.0), Error);
}

TEST_CASE("lower bound constants") {
  auto t = tau();
  auto c = lower_bound_constants(t.tau);
  CHECK(std::abs(c.edge_bound_coeff - 0.169) < 5e-4);
  CHECK(std::abs(c.xi_sp_coeff - 0.1103) < 5e-4);
  CHECK(c.edge_bound_coeff == doctest::Approx(0.16907).epsilon(1e-4));
  CHECK(c.xi_sp_coeff == doctest::Approx(0.11031).epsilon(1e-4));

  auto naive = lower_bound_constants(1.0);
  const double closed = (std::sqrt(13.0) - 1.0) / 12.0;
  CHECK(std::abs(naive.edge_bound_coeff - closed) < 1e-10);
  CHECK(std::abs(naive.xi_sp_coeff - (0.5 - closed) / 3.0) < 1e-12);
  CHECK(naive.xi_sp_coeff == doctest::Approx(0.09429).epsilon(1e-4));
  CHECK(std::abs(c.naive_coeff - closed) < 1e-10);

  // The positive root really solves the quadratic.
  double s = 2.0 * c.edge_bound_coeff;
  CHECK(std::abs(s * s + t.tau / 3.0 * s - t.tau / 3.0) < 1e-12);

  for (double bad : {0.0, -0.5, 1.5}) {
    try {
      lower_bound_constants(bad);
      FAIL("expected OutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OutOfRange);
    }
  }

  auto report = bounds_report();
  CHECK(report.tau == doctest::Approx(t.tau));
  CHECK(report.tau > 0.5);
  CHECK(report.tau < 0.52);
  CHECK(std::isfinite(report.xi_sp_coeff));
}

TEST_CASE("construction density") {
  auto d3 = construction_density(3);
  CHECK(d3.n == 21);
  CHECK(d3.m == 64);
  CHECK(d3.ratio == doctest::Approx(64.0 / 441.0));
  auto d7 = construction_density(7);
  CHECK(d7.n == 45);
  CHECK(d7.m == 288);
  CHECK(d7.ratio == doctest::Approx(288.0 / 2025.0));

  double previous = 1.0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    auto d = construction_density(p);
    CHECK(d.m == 5 * p * p + 6 * p + 1);
    CHECK(d.ratio < previous);
    previous = d.ratio;
  }
  // Lower bound never contradicts the construction.
  CHECK(lower_bound_constants(tau().tau).xi_sp_coeff < 5.0 / 36.0);
  CHECK_THROWS_AS(construction_density(4), Error);
}
