#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lts/core.hpp"

namespace lts {

enum class Family { bose_skolem, spreading_6p3, crowning, cayley_latin, star_expansion };

std::optional<Family> family_from_string(std::string_view name);
std::string_view to_string(Family family);

bool is_prime(std::uint64_t v);

// Steiner triple system on 3q vertices, q odd >= 3.
// Layout: a_i -> i, b_i -> q+i, c_i -> 2q+i.
TripleSystem bose_skolem(std::uint32_t q);

// Spreading system on 6p+3 vertices with 5p^2+6p+1 triples, p an odd prime.
// Layout: a_i -> i, a -> p, b_i -> p+1+i, b -> 2p+1, c_i -> 2p+2+i, c -> 3p+2,
// alpha_i -> 3p+3+i, beta_i -> 4p+3+i, gamma_i -> 5p+3+i.
TripleSystem spreading_6p3(std::uint32_t p);

// Attaches a fresh vertex to each kept uncovered pair (indices into
// uncovered_edges(sys); all of them by default). Fresh vertices are numbered
// n, n+1, ... in lexicographic pair order.
TripleSystem crowning(const TripleSystem& sys, std::optional<std::span<const std::size_t>> keep = std::nullopt);

// Tripartite system from the Cayley table of Z_p: rows 0..p-1, columns
// p..2p-1, symbols 2p..3p-1, triples {i, p+j, 2p+(i+j mod p)}.
TripleSystem cayley_latin(std::uint32_t p);

// Complete graph K_m with a pendant vertex on each edge: base vertices
// 0..m-1, edge (i,j) -> m + lexicographic rank of (i,j).
TripleSystem star_expansion(std::uint32_t m);

}  // namespace lts
