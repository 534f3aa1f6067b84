#include "lts/parallel.hpp"

#include <cstdlib>
#include <string>

namespace lts {

unsigned worker_count() {
  if (const char* env = std::getenv("LTS_THREADS"); env != nullptr && *env != '\0') {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace lts
