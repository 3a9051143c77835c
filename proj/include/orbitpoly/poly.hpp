#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitpoly/field.hpp"

namespace orbitpoly {

/// Dense univariate polynomial over a finite field. Coefficients are stored
/// low degree first with trailing zeros stripped; the zero polynomial has no
/// coefficients.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly monomial(FieldPtr field, Elem c, std::size_t n);
  /// The indeterminate T.
  static Poly variable(FieldPtr field);
  /// Integer coefficients, low degree first, reduced into the prime subfield.
  static Poly from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  const Field& F() const noexcept { return *field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == field_->one(); }
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{0}; }
  Elem lc() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }

  Poly monic() const;
  Poly scaled(Elem c) const;
  Poly derivative() const;
  Elem eval(Elem x) const;
  /// Evaluate at x in a field that this polynomial's field embeds into.
  Elem eval_in(const Field& ext, Elem x) const;
  /// Same coefficients viewed over an extension field.
  Poly lift(const FieldPtr& ext) const;
  /// Reinterpret over a subfield; every coefficient must lie in it.
  Poly restrict_to(const FieldPtr& sub) const;
  /// Shift by T^n.
  Poly shifted(std::size_t n) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);

  /// Ordering used for canonical factor lists: degree, then coefficient codes low to high.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws DivisionByZero when b is zero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);
/// Returns (g, u, v) with u*a + v*b = g monic.
struct ExtGcd {
  Poly g, u, v;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
/// f^e mod m by square and multiply.
Poly powmod(const Poly& f, std::uint64_t e, const Poly& m);
Poly pow(const Poly& f, std::uint64_t e);
/// Multiply all given polynomials.
Poly product(const FieldPtr& field, const std::vector<Poly>& factors);

/// Stable hash of field cardinality and coefficient codes.
std::uint64_t hash_value(const Poly& f) noexcept;

/// "c_n*T^n + ... + c_0"; unit coefficients omitted except for the constant term.
std::string to_string(const Poly& f, std::string_view var = "T");
/// Parses sums of terms "c*T^n", "cT^n", "-T", "c" with integer or bracketed coefficients.
Poly parse_poly(const FieldPtr& field, std::string_view text, char var = 'T');

}  // namespace orbitpoly
