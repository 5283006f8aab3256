#include "depadjust/parallel.hpp"

#include <cstdlib>

namespace depadjust {

unsigned default_thread_count() noexcept {
  if (const char* env = std::getenv("DEPADJUST_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<unsigned>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace depadjust
