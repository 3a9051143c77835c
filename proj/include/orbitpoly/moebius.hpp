#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbitpoly/field.hpp"
#include "orbitpoly/poly.hpp"

namespace orbitpoly {

/// A point of the projective line: a finite field element or infinity.
struct ProjPoint {
  bool infinite = false;
  Elem value{};

  static ProjPoint finite(Elem v) { return {false, v}; }
  static ProjPoint infinity() { return {true, Elem{}}; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  /// Finite points by code, then infinity.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.infinite != b.infinite) return b.infinite;
    return !a.infinite && a.value < b.value;
  }
};

std::string format_point(const Field& F, const ProjPoint& z);
ProjPoint parse_point(const Field& F, std::string_view text);

class Moebius;

/// A 2x2 matrix [[a, b], [c, d]] exactly as written (not rescaled).
struct Mat2 {
  FieldPtr field;
  Elem a, b, c, d;

  Elem det() const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 pow(std::uint64_t e) const;
  bool is_scalar() const;
  Moebius normalized() const;
};

enum class MoebiusClass { Identity, Split, Unipotent, NonSplit };
std::string_view to_string(MoebiusClass c) noexcept;

/// z -> (a z + b)/(c z + d), normalized so the first nonzero of (a, b, c, d) is 1.
class Moebius {
 public:
  /// Throws InvariantViolation when ad - bc = 0.
  Moebius(FieldPtr field, Elem a, Elem b, Elem c, Elem d);
  static Moebius identity(FieldPtr field);
  /// Integer entries reduced into the prime subfield.
  static Moebius from_ints(FieldPtr field, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  const FieldPtr& field() const noexcept { return field_; }
  Elem a() const noexcept { return a_; }
  Elem b() const noexcept { return b_; }
  Elem c() const noexcept { return c_; }
  Elem d() const noexcept { return d_; }
  Mat2 matrix() const { return {field_, a_, b_, c_, d_}; }

  bool is_identity() const noexcept;
  /// Action on P^1(ext); ext must equal or extend field().
  ProjPoint apply(const Field& ext, const ProjPoint& z) const;
  ProjPoint apply(const ProjPoint& z) const { return apply(*field_, z); }
  /// (*this)(other(z)).
  Moebius compose(const Moebius& other) const;
  Moebius inverse() const;
  Moebius pow(std::int64_t e) const;
  /// Least n >= 1 with s^n = identity.
  std::uint64_t order() const;
  /// Fixed points in P^1(ext), sorted. Throws IdentityInput.
  std::vector<ProjPoint> fixed_points(const FieldPtr& ext) const;
  /// Fixed points over the degree-k extension of field().
  std::vector<ProjPoint> fixed_points(unsigned k) const;
  MoebiusClass classify() const;
  /// Same entries viewed over an extension field.
  Moebius lift(const FieldPtr& ext) const;
  /// Entry-wise x -> x^(q^e) for a transformation over an extension.
  Moebius frobenius(std::uint64_t e = 1) const;

  friend bool operator==(const Moebius& x, const Moebius& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_ && same_field(*x.field_, *y.field_);
  }
  friend bool operator<(const Moebius& x, const Moebius& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    if (x.c_ != y.c_) return x.c_ < y.c_;
    return x.d_ < y.d_;
  }

 private:
  FieldPtr field_;
  Elem a_, b_, c_, d_;
};

struct MoebiusHash {
  std::size_t operator()(const Moebius& m) const noexcept;
};

/// "(a*x+b)/(c*x+d)", simplified where entries vanish or equal one.
std::string to_string(const Moebius& s);
std::string to_string(const Mat2& m);

/// Parses "(a*x+b)/(c*x+d)", "a*x+b" and "x" forms. Entries keep the given
/// scaling; use .normalized() for the group element.
Mat2 parse_mat2(const FieldPtr& field, std::string_view text);
Moebius parse_moebius(const FieldPtr& field, std::string_view text);

}  // namespace orbitpoly
