#pragma once

#include <cstdint>

namespace orbitpoly {

/// Global size limits. The enumeration cap bounds every operation that
/// walks all elements of a field or group; it defaults to 2^20 and can be
/// overridden through the ORBITPOLY_SIZE_CAP environment variable.
struct Limits {
  std::uint64_t enumeration_cap = std::uint64_t{1} << 20;
  /// Largest permitted subgroup order during closure.
  std::uint64_t group_cap = std::uint64_t{1} << 16;
};

/// Largest field cardinality representable by an element code.
inline constexpr std::uint64_t kMaxFieldCard = std::uint64_t{1} << 62;

Limits limits();
void set_limits(const Limits& l);

/// Reads ORBITPOLY_SIZE_CAP (decimal) if present. Returns false on a malformed value.
bool load_limits_from_env();

/// RAII override used by tests and tools.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& l) : saved_(limits()) { set_limits(l); }
  ~ScopedLimits() { set_limits(saved_); }
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace orbitpoly
