#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitpoly/field.hpp"

namespace orbitpoly {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const noexcept;
  std::size_t failures() const noexcept;
};

/// Replays the fixed worked examples (fields are built internally).
VerifyReport verify_worked_examples(std::uint64_t seed = 0);

/// Exhaustive property checks over one field F_q.
VerifyReport verify_lemmas(const FieldPtr& field, std::uint64_t seed = 0);

}  // namespace orbitpoly
