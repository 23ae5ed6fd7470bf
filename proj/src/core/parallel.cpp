#include "degpow/core/parallel.hpp"

#include <cstdlib>
#include <string>

namespace degpow {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(workers_env_var)) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace degpow
