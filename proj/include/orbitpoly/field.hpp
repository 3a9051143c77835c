#pragma once

// Finite fields F_p, F_q = F_{p^m} and one-step extensions F_{q^k}.
//
// Elements are stored as integer codes. For a field built over a coefficient
// field K of size Q with coordinates (c_0, ..., c_{k-1}) in the power basis
// of the distinguished root y, the code is sum c_i * Q^i. Consequently the
// codes below Q are exactly the embedded copy of K, and the codes below p are
// the prime subfield at every level of the tower.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitpoly {

struct Elem {
  std::uint64_t code = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct ElemHash {
  std::size_t operator()(Elem e) const noexcept { return std::hash<std::uint64_t>{}(e.code); }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  enum class Kind { Prime, Power, Extension };

  /// F_{p^m} over F_p with the least monic irreducible modulus (smallest code
  /// sum c_i p^i over the non-leading coefficients). Instances are interned, so
  /// equal (p, m) give the same object.
  static FieldPtr create(std::uint32_t p, unsigned m = 1);

  /// base[y]/(h) for a monic h of degree k >= 2 over a prime or power field.
  /// Irreducibility is the caller's responsibility; use orbitpoly::extend().
  static FieldPtr make_extension(const FieldPtr& base, std::vector<Elem> monic_modulus);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::Prime; }
  bool is_extension() const noexcept { return kind_ == Kind::Extension; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint64_t card() const noexcept { return card_; }
  /// Degree over the coefficient field (F_p for prime/power fields, base() for extensions).
  unsigned degree() const noexcept { return degree_; }
  /// card() == p^absolute_degree().
  unsigned absolute_degree() const noexcept { return abs_degree_; }
  const FieldPtr& base() const noexcept { return base_; }
  /// Size of the coefficient field.
  std::uint64_t coeff_card() const noexcept { return coeff_card_; }
  /// Cardinality q of the ground field F_q: base()->card() for extensions, card() otherwise.
  std::uint64_t ground_card() const noexcept { return is_extension() ? base_->card() : card_; }
  /// Monic modulus coefficients, low degree first (empty for prime fields).
  std::span<const Elem> modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return {0}; }
  Elem one() const noexcept { return {1}; }
  /// The residue class of y, a distinguished root of the modulus.
  Elem root() const noexcept { return {is_prime() ? 0 : coeff_card_}; }
  Elem from_int(std::int64_t v) const noexcept;
  bool contains(Elem x) const noexcept { return x.code < card_; }
  bool in_ground(Elem x) const noexcept { return x.code < ground_card(); }

  Elem add(Elem x, Elem y) const noexcept;
  Elem sub(Elem x, Elem y) const noexcept;
  Elem neg(Elem x) const noexcept;
  Elem mul(Elem x, Elem y) const noexcept;
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const noexcept;
  /// x^(q^e) with q = ground_card(); the identity on prime and power fields.
  Elem frobenius(Elem x, std::uint64_t e = 1) const noexcept;
  /// Absolute trace to F_p, returned as an integer 0..p-1.
  std::uint32_t absolute_trace(Elem x) const noexcept;
  /// Quadratic character over the whole field (odd characteristic).
  bool is_square(Elem x) const noexcept;
  /// Generator of the multiplicative group (prime and power fields only).
  Elem primitive_element() const;

  /// Coordinates over the coefficient field, length degree().
  std::vector<Elem> coords(Elem x) const;
  Elem from_coords(std::span<const Elem> c) const;

  /// Integers for prime fields, "[c0,c1,...]" (recursively) otherwise.
  std::string format(Elem x) const;
  Elem parse(std::string_view text) const;
  /// Short human description, e.g. "F_9" or "F_9^3".
  std::string name() const;

  // Construction helpers; not part of the public surface.
  struct Private;
  Field(const Private&, Kind kind, std::uint32_t p, unsigned degree, FieldPtr base,
        std::vector<Elem> modulus);

 private:
  static constexpr unsigned kMaxDigits = 64;
  using Digits = std::array<std::uint64_t, kMaxDigits>;

  void build_tables();
  void build_frobenius_basis();
  unsigned decode(Elem x, Digits& out) const noexcept;
  Elem encode(const Digits& d, unsigned n) const noexcept;

  // Coefficient field arithmetic: F_p for power fields, base_ for extensions.
  std::uint64_t cadd(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t csub(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t cmul(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t cinv(std::uint64_t a) const;

  Elem poly_mul_mod(Elem x, Elem y) const noexcept;
  Elem ext_inv(Elem x) const;

  Kind kind_;
  std::uint32_t p_;
  unsigned degree_;
  unsigned abs_degree_;
  std::uint64_t card_;
  std::uint64_t coeff_card_;
  FieldPtr base_;
  std::vector<Elem> modulus_;

  // Prime and power fields: discrete log tables.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  // Extensions: coordinates of y^(Q*i) for i < degree, row-major, used for
  // the ground Frobenius.
  std::vector<std::uint64_t> frob_digits_;
};

/// Structural equality of fields (same tower, same moduli).
bool same_field(const Field& a, const Field& b) noexcept;

/// True when `ext` equals `f`, is an extension whose base is `f`, or `f` is
/// the prime field of the same characteristic.
bool embeds_into(const Field& f, const Field& ext) noexcept;

/// Throws CtxMismatch unless same_field(a, b).
void require_same_field(const Field& a, const Field& b, std::string_view where);

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Returns p, m with q = p^m, or throws NonPrime if q is not a prime power.
std::pair<std::uint32_t, unsigned> prime_power_decompose(std::uint64_t q);
/// Checked integer power; throws SizeCapExceeded on overflow past `limit`.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit);

}  // namespace orbitpoly
