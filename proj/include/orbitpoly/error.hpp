#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitpoly {

enum class ErrorKind {
  NonPrime,
  SizeCapExceeded,
  NotIrreducible,
  DivisionByZero,
  CtxMismatch,
  ConstantInput,
  IdentityInput,
  NotInGroup,
  TrivialGroup,
  PoleAtAlpha,
  WrongOrder,
  NonRegularRoots,
  TowerTooDeep,
  ParseError,
  UsageError,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// Internal consistency check that survives release builds.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) raise(ErrorKind::InvariantViolation, what);
}

}  // namespace orbitpoly
