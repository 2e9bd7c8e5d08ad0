#include "opcmlink/config.hpp"

#include <cstdlib>
#include <string>

namespace opcmlink {

std::size_t max_carrier() {
  static const std::size_t cached = [] {
    if (const char* env = std::getenv("OPCMLINK_MAX_CARRIER")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultMaxCarrier;
  }();
  return cached;
}

}  // namespace opcmlink
