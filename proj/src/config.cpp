#include "orbitpoly/config.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <string_view>

namespace orbitpoly {

namespace {
std::atomic<std::uint64_t> g_enumeration_cap{std::uint64_t{1} << 20};
std::atomic<std::uint64_t> g_group_cap{std::uint64_t{1} << 16};
}  // namespace

Limits limits() { return Limits{g_enumeration_cap.load(), g_group_cap.load()}; }

void set_limits(const Limits& l) {
  g_enumeration_cap.store(l.enumeration_cap);
  g_group_cap.store(l.group_cap);
}

bool load_limits_from_env() {
  const char* raw = std::getenv("ORBITPOLY_SIZE_CAP");
  if (raw == nullptr) return true;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 2) return false;
  Limits l = limits();
  l.enumeration_cap = value;
  set_limits(l);
  return true;
}

}  // namespace orbitpoly
