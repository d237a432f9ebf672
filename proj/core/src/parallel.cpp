#include "moonlight/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace moonlight {

unsigned default_worker_count() {
  if (const char* env = std::getenv("MOONLIGHT_THREADS")) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc{} && *ptr == '\0' && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace moonlight
