#include "lts/constructions.hpp"

#include <algorithm>
#include <string>

namespace lts {

namespace {

void require_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorCode::NotOddPrime, std::to_string(p) + " is not an odd prime");
  }
}

RawTriple raw(std::uint32_t x, std::uint32_t y, std::uint32_t z) { return {x, y, z}; }

}  // namespace

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "bose_skolem" || name == "bose-skolem") return Family::bose_skolem;
  if (name == "spreading_6p3" || name == "spreading-6p3") return Family::spreading_6p3;
  if (name == "crowning") return Family::crowning;
  if (name == "cayley_latin" || name == "cayley-latin") return Family::cayley_latin;
  if (name == "star_expansion" || name == "star-expansion") return Family::star_expansion;
  return std::nullopt;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::bose_skolem: return "bose_skolem";
    case Family::spreading_6p3: return "spreading_6p3";
    case Family::crowning: return "crowning";
    case Family::cayley_latin: return "cayley_latin";
    case Family::star_expansion: return "star_expansion";
  }
  return "unknown";
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

TripleSystem bose_skolem(std::uint32_t q) {
  if (q % 2 == 0) throw Error(ErrorCode::EvenModulus, "modulus " + std::to_string(q) + " is even");
  if (q < 3) throw Error(ErrorCode::ModulusTooSmall, "modulus must be at least 3");
  const std::uint32_t half = (q + 1) / 2;  // inverse of 2 mod q
  auto a = [](std::uint32_t i) { return i; };
  auto b = [q](std::uint32_t i) { return q + i; };
  auto c = [q](std::uint32_t i) { return 2 * q + i; };

  std::vector<RawTriple> triples;
  for (std::uint32_t i = 0; i < q; ++i) triples.push_back(raw(a(i), b(i), c(i)));
  for (std::uint32_t i = 0; i < q; ++i) {
    for (std::uint32_t j = i + 1; j < q; ++j) {
      std::uint32_t k = static_cast<std::uint32_t>((std::uint64_t{i} + j) * half % q);
      triples.push_back(raw(a(i), a(j), b(k)));
      triples.push_back(raw(b(i), b(j), c(k)));
      triples.push_back(raw(c(i), c(j), a(k)));
    }
  }
  return build_system(3 * static_cast<std::size_t>(q), triples);
}

TripleSystem spreading_6p3(std::uint32_t p) {
  require_odd_prime(p);
  auto a_ = [](std::uint32_t i) { return i; };
  const std::uint32_t a = p;
  auto b_ = [p](std::uint32_t i) { return p + 1 + i; };
  const std::uint32_t b = 2 * p + 1;
  auto c_ = [p](std::uint32_t i) { return 2 * p + 2 + i; };
  const std::uint32_t c = 3 * p + 2;
  auto alpha = [p](std::uint32_t i) { return 3 * p + 3 + i; };
  auto beta = [p](std::uint32_t i) { return 4 * p + 3 + i; };
  auto gamma = [p](std::uint32_t i) { return 5 * p + 3 + i; };
  auto mod = [p](std::int64_t v) { return static_cast<std::uint32_t>(((v % p) + p) % p); };

  std::vector<RawTriple> triples;

  // Black: a special vertex with its class through the next primed class,
  // plus the midpoint triples {x_i, x_{2j-i}, y_j}.
  auto black = [&](auto cls, std::uint32_t special, auto primed) {
    for (std::uint32_t j = 0; j < p; ++j) {
      triples.push_back(raw(special, cls(j), primed(j)));
      for (std::uint32_t i = 0; i < p; ++i) {
        if (i == j) continue;
        std::uint32_t mirror = mod(2 * static_cast<std::int64_t>(j) - i);
        if (i < mirror) triples.push_back(raw(cls(i), cls(mirror), primed(j)));
      }
    }
  };
  black(a_, a, beta);
  black(b_, b, gamma);
  black(c_, c, alpha);

  // Brown: midpoint triples of a primed class through the next plain class.
  auto brown = [&](auto primed, auto cls) {
    for (std::uint32_t j = 0; j < p; ++j) {
      for (std::uint32_t i = 0; i < p; ++i) {
        if (i == j) continue;
        std::uint32_t mirror = mod(2 * static_cast<std::int64_t>(j) - i);
        if (i < mirror) triples.push_back(raw(primed(i), primed(mirror), cls(j)));
      }
    }
  };
  brown(alpha, b_);
  brown(beta, c_);
  brown(gamma, a_);

  // Orange: two additive Latin squares and {a, b, c}.
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t j = 0; j < p; ++j) {
      triples.push_back(raw(a_(i), b_(j), c_(mod(i + j))));
      triples.push_back(raw(alpha(i), beta(j), gamma(mod(i + j + 1))));
    }
  }
  triples.push_back(raw(a, b, c));

  for (std::uint32_t j = 0; j < p; ++j) {
    // Red.
    triples.push_back(raw(a, alpha(j), b_(j)));
    triples.push_back(raw(b, beta(j), c_(j)));
    triples.push_back(raw(c, gamma(j), a_(j)));
    // Blue.
    triples.push_back(raw(a, gamma(j), c_(j)));
    triples.push_back(raw(b, alpha(j), a_(j)));
    triples.push_back(raw(c, beta(j), b_(j)));
  }

  return build_system(6 * static_cast<std::size_t>(p) + 3, triples);
}

TripleSystem crowning(const TripleSystem& sys, std::optional<std::span<const std::size_t>> keep) {
  const auto uncovered = uncovered_edges(sys);
  std::vector<std::size_t> kept;
  if (keep) {
    kept.assign(keep->begin(), keep->end());
    for (auto idx : kept) {
      if (idx >= uncovered.size()) {
        throw Error(ErrorCode::KeepIndexOutOfRange, "keep index " + std::to_string(idx) + " but only " +
                                                        std::to_string(uncovered.size()) + " uncovered pairs");
      }
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  } else {
    kept.resize(uncovered.size());
    for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = i;
  }

  std::vector<RawTriple> triples;
  triples.reserve(sys.size() + kept.size());
  for (const auto& t : sys.triples()) triples.push_back(raw(t.a, t.b, t.c));
  auto fresh = static_cast<std::uint32_t>(sys.n());
  for (auto idx : kept) {
    const auto& [x, y] = uncovered[idx];
    triples.push_back(raw(x, y, fresh++));
  }
  return build_system(sys.n() + kept.size(), triples);
}

TripleSystem cayley_latin(std::uint32_t p) {
  require_odd_prime(p);
  std::vector<RawTriple> triples;
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t j = 0; j < p; ++j) triples.push_back(raw(i, p + j, 2 * p + (i + j) % p));
  }
  return build_system(3 * static_cast<std::size_t>(p), triples);
}

TripleSystem star_expansion(std::uint32_t m) {
  if (m <= 3) throw Error(ErrorCode::OrderTooSmall, "star expansion needs m > 3, got " + std::to_string(m));
  std::vector<RawTriple> triples;
  std::uint32_t edge = m;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i + 1; j < m; ++j) triples.push_back(raw(i, j, edge++));
  }
  return build_system(edge, triples);
}

}  // namespace lts
