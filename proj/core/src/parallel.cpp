#include "tfg/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tfg {

int worker_count() {
  static int cached = [] {
    if (const char* env = std::getenv("TFG_WORKERS")) {
      int n = std::atoi(env);
      if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }();
  return cached;
}

}  // namespace tfg
