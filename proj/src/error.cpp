#include "orbitpoly/error.hpp"

namespace orbitpoly {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CtxMismatch: return "CtxMismatch";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::IdentityInput: return "IdentityInput";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::PoleAtAlpha: return "PoleAtAlpha";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::NonRegularRoots: return "NonRegularRoots";
    case ErrorKind::TowerTooDeep: return "TowerTooDeep";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace orbitpoly
