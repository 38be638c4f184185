#include "qkflag/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qkflag {

unsigned default_jobs() {
  const char* env = std::getenv("QKFLAG_JOBS");
  if (env == nullptr) return 1;
  try {
    int v = std::stoi(env);
    return v > 0 ? static_cast<unsigned>(v) : 1;
  } catch (...) {
    return 1;
  }
}

}  // namespace qkflag
