#pragma once

#include <string>
#include <string_view>

#include "lts/core.hpp"

namespace lts {

// Plain-text system format:
//
//   lts 1
//   <n> <m>
//   <i> <j> <k>      m lines, 0 <= i < j < k < n, lexicographically sorted
//
// Lines starting with '#' are comments; blank lines are ignored.
//
// Throws SyntaxError for grammar violations and the build_system errors for
// invalid systems; both carry the offending 1-based line number.
TripleSystem parse_system(std::string_view text);

std::string serialize(const TripleSystem& sys);

TripleSystem read_system_file(const std::string& path);
void write_system_file(const std::string& path, const TripleSystem& sys);

}  // namespace lts
