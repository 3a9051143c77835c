#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitpoly/group.hpp"
#include "orbitpoly/poly.hpp"

namespace orbitpoly {

/// num/den over F_q with gcd 1 and den monic; zero is 0/1.
class RatFunc {
 public:
  explicit RatFunc(const Poly& num);
  /// Reduces; throws DivisionByZero for den = 0.
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  const FieldPtr& field() const noexcept { return num_.field(); }
  /// max(deg num, deg den); 0 for constants.
  int degree() const noexcept;
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value of a constant function.
  Elem constant_value() const;

  RatFunc scaled(Elem c) const;
  /// Evaluation on P^1(ext); ext must equal or extend the coefficient field.
  ProjPoint eval(const Field& ext, const ProjPoint& z) const;
  /// x -> s(x) substitution, reduced.
  RatFunc compose(const Moebius& s) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  Poly num_, den_;
};

std::string to_string(const RatFunc& r, std::string_view var = "x");

/// Solves r = a * t + b for constants a, b, if possible.
std::optional<std::pair<Elem, Elem>> affine_relation(const RatFunc& r, const RatFunc& t);

struct OrbitPolynomial {
  Subgroup group;
  std::vector<RatFunc> coeffs;                 // coefficient of T^i, i = 0..|G|
  std::size_t param_index;                     // designated nonconstant coefficient
  std::vector<std::pair<Elem, Elem>> family;   // coeffs[i] = a_i * t + b_i

  const RatFunc& parameter() const { return coeffs[param_index]; }
};

/// prod over s in G of (T - s(x)) with coefficients in F_q(x), plus its linear family.
OrbitPolynomial orbit_polynomial(const Subgroup& G);

/// "T^n + (a t + b) T^(n-1) + ...".
std::string family_string(const OrbitPolynomial& P);

/// Lowest-index nonconstant coefficient of P_G, normalized so numerator and
/// denominator are monic and deg den < |G|. Throws TrivialGroup.
RatFunc invariant_generator(const Subgroup& G);
RatFunc invariant_generator(const OrbitPolynomial& P);

/// (1 + (x^q - x)^(q-1))^(q+1) / (x^q - x)^(q^2 - q).
RatFunc pgl_generator(const FieldPtr& field);

/// prod_{s in G} (T - s(alpha)) computed from the coefficients at alpha, as a
/// polynomial over ext. Throws PoleAtAlpha.
Poly specialize(const OrbitPolynomial& P, const FieldPtr& ext, Elem alpha);

/// Phi(alpha) == Phi(beta).
bool phi_orbit_test(const RatFunc& phi, const Field& ext, const ProjPoint& alpha, const ProjPoint& beta);

}  // namespace orbitpoly
