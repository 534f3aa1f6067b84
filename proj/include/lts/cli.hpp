#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lts/closure.hpp"
#include "lts/core.hpp"

namespace lts::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFails = 1,
  kUsageOrIo = 2,
  kInvalidSystem = 3,
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lts::cli
