#include "bullfree/capacity.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "bullfree/errors.hpp"

namespace bullfree {

std::size_t capacity_limit(std::size_t fallback) {
  const char* env = std::getenv("BULLFREE_MAX_N");
  if (env == nullptr) return fallback;
  std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) return fallback;
  return value;
}

void require_capacity(std::size_t n, std::size_t fallback, std::string_view what) {
  const std::size_t limit = capacity_limit(fallback);
  if (n > limit) {
    throw CapacityError(std::string(what) + ": instance has " + std::to_string(n) +
                        " vertices, limit is " + std::to_string(limit) +
                        " (set BULLFREE_MAX_N to override)");
  }
}

}  // namespace bullfree
