#include "orbitpoly/invariants.hpp"

#include <algorithm>

#include "orbitpoly/config.hpp"
#include "orbitpoly/error.hpp"
#include "orbitpoly/linalg.hpp"

namespace orbitpoly {

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::constant(num.field(), num.F().one())) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  require_same_field(num.F(), den.F(), "rational function");
  if (den.is_zero()) raise(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num.field(), num.F().one());
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Elem c = num.F().inv(den_.lc());
  num_ = num_.scaled(c);
  den_ = den_.scaled(c);
}

int RatFunc::degree() const noexcept { return std::max(std::max(num_.degree(), 0), den_.degree()); }

Elem RatFunc::constant_value() const {
  if (!is_constant()) raise(ErrorKind::InvariantViolation, "not a constant function");
  return num_.coeff(0);
}

RatFunc RatFunc::scaled(Elem c) const { return RatFunc(num_.scaled(c), den_); }

ProjPoint RatFunc::eval(const Field& ext, const ProjPoint& z) const {
  if (z.infinite) {
    const int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) return ProjPoint::infinity();
    if (dn < dd) return ProjPoint::finite(ext.zero());
    return ProjPoint::finite(ext.div(num_.lc(), den_.lc()));
  }
  const Elem d = den_.eval_in(ext, z.value);
  if (d.code == 0) return ProjPoint::infinity();
  return ProjPoint::finite(ext.div(num_.eval_in(ext, z.value), d));
}

namespace {

// sum_i p_i L^i M^(n-i) by a Horner scheme in the homogeneous form.
Poly homogeneous_substitute(const Poly& P, int n, const Poly& L, const Poly& M) {
  const FieldPtr& F = P.field();
  // H_k = sum_{i >= n-k} p_i L^(i-(n-k)) M^(n-i)
  Poly H = Poly::constant(F, P.coeff(static_cast<std::size_t>(n)));
  Poly Mk = Poly::constant(F, F->one());
  for (int k = 1; k <= n; ++k) {
    Mk *= M;
    H = H * L + Mk.scaled(P.coeff(static_cast<std::size_t>(n - k)));
  }
  return H;
}

}  // namespace

RatFunc RatFunc::compose(const Moebius& s) const {
  require_same_field(*field(), *s.field(), "compose");
  const FieldPtr& F = field();
  const Poly L(F, {s.b(), s.a()});
  const Poly M(F, {s.d(), s.c()});
  const int n = degree();
  return RatFunc(homogeneous_substitute(num_, n, L, M), homogeneous_substitute(den_, n, L, M));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) raise(ErrorKind::DivisionByZero, "division by the zero function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RatFunc& r, std::string_view var) {
  if (r.den().degree() == 0) return to_string(r.num(), var);
  return "(" + to_string(r.num(), var) + ")/(" + to_string(r.den(), var) + ")";
}

std::optional<std::pair<Elem, Elem>> affine_relation(const RatFunc& r, const RatFunc& t) {
  const Field& F = *r.field();
  if (r.is_constant()) return std::make_pair(F.zero(), r.constant_value());
  // r.num * t.den = a * t.num * r.den + b * t.den * r.den
  const Poly W = r.num() * t.den();
  const Poly U = t.num() * r.den();
  const Poly V = t.den() * r.den();
  const std::size_t len =
      static_cast<std::size_t>(std::max({W.degree(), U.degree(), V.degree()}) + 1);
  Matrix M(len, std::vector<Elem>(2));
  std::vector<Elem> rhs(len);
  for (std::size_t i = 0; i < len; ++i) {
    M[i][0] = U.coeff(i);
    M[i][1] = V.coeff(i);
    rhs[i] = W.coeff(i);
  }
  auto sol = solve_linear(F, std::move(M), std::move(rhs), 2);
  if (!sol) return std::nullopt;
  return std::make_pair((*sol)[0], (*sol)[1]);
}

// ---------------------------------------------------------------------------
// orbit polynomial

OrbitPolynomial orbit_polynomial(const Subgroup& G) {
  const FieldPtr& F = G.field();
  const std::size_t n = G.order();
  // Coefficients of T^i in prod ((c x + d) T - (a x + b)), as polynomials in x.
  std::vector<Poly> cur{Poly::constant(F, F->one())};
  for (const auto& s : G.elements()) {
    const Poly lin_t(F, {s.d(), s.c()});
    const Poly lin_0(F, {F->neg(s.b()), F->neg(s.a())});
    std::vector<Poly> next(cur.size() + 1, Poly(F));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i] * lin_t;
      next[i] += cur[i] * lin_0;
    }
    cur = std::move(next);
  }
  const Poly A = cur[n];
  OrbitPolynomial P{G, {}, 0, {}};
  P.coeffs.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) P.coeffs.emplace_back(cur[i], A);
  ensure(P.coeffs[n].is_constant() && P.coeffs[n].constant_value() == F->one(), "orbit polynomial is not monic");
  std::size_t idx = 0;
  while (idx < n && P.coeffs[idx].is_constant()) ++idx;
  ensure(idx < n, "orbit polynomial has no nonconstant coefficient");
  P.param_index = idx;
  for (std::size_t i = 0; i <= n; ++i) {
    auto rel = affine_relation(P.coeffs[i], P.coeffs[idx]);
    ensure(rel.has_value(), "coefficient " + std::to_string(i) + " is not affine in the family parameter");
    P.family.push_back(*rel);
  }
  return P;
}

std::string family_string(const OrbitPolynomial& P) {
  const Field& F = *P.group.field();
  std::string out;
  for (std::size_t i = P.coeffs.size(); i-- > 0;) {
    const auto [a, b] = P.family[i];
    if (a.code == 0 && b.code == 0) continue;
    std::string c;
    if (a.code == 0) {
      c = F.format(b);
    } else {
      c = (a == F.one() ? std::string() : F.format(a) + "*") + "t";
      if (b.code != 0) c = "(" + c + " + " + F.format(b) + ")";
    }
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c;
    } else {
      if (!(a.code == 0 && b == F.one())) out += c + "*";
      out += i == 1 ? "T" : "T^" + std::to_string(i);
    }
  }
  return out;
}

RatFunc invariant_generator(const OrbitPolynomial& P) {
  const std::size_t n = P.group.order();
  if (n < 2) raise(ErrorKind::TrivialGroup, "the trivial group has no proper invariant generator");
  RatFunc t = P.parameter();
  const Field& F = *t.field();
  if (t.den().degree() >= static_cast<int>(n)) {
    // Infinity is not a pole; move its value there.
    const ProjPoint at_inf = t.eval(F, ProjPoint::infinity());
    const RatFunc shifted = t - RatFunc(Poly::constant(t.field(), at_inf.value));
    t = RatFunc(shifted.den(), shifted.num());
  }
  t = t.scaled(F.inv(t.num().lc()));
  ensure(t.num().degree() == static_cast<int>(n) && t.den().degree() < static_cast<int>(n),
         "invariant generator has the wrong degree");
  return t;
}

RatFunc invariant_generator(const Subgroup& G) {
  if (G.order() < 2) raise(ErrorKind::TrivialGroup, "the trivial group has no proper invariant generator");
  return invariant_generator(orbit_polynomial(G));
}

RatFunc pgl_generator(const FieldPtr& field) {
  const std::uint64_t q = field->card();
  if (q * q * q > limits().enumeration_cap)
    raise(ErrorKind::SizeCapExceeded, "PGL generator degree exceeds the enumeration cap");
  const Poly x = Poly::variable(field);
  const Poly u = pow(x, q) - x;
  const Poly one = Poly::constant(field, field->one());
  const Poly f = pow(one + pow(u, q - 1), q + 1);
  const Poly g = pow(u, q * q - q);
  return RatFunc(f, g);
}

Poly specialize(const OrbitPolynomial& P, const FieldPtr& ext, Elem alpha) {
  std::vector<Elem> c;
  c.reserve(P.coeffs.size());
  for (std::size_t i = 0; i < P.coeffs.size(); ++i) {
    const ProjPoint v = P.coeffs[i].eval(*ext, ProjPoint::finite(alpha));
    if (v.infinite) raise(ErrorKind::PoleAtAlpha, ext->format(alpha) + " is a pole of coefficient " + std::to_string(i));
    c.push_back(v.value);
  }
  return Poly(ext, std::move(c));
}

bool phi_orbit_test(const RatFunc& phi, const Field& ext, const ProjPoint& alpha, const ProjPoint& beta) {
  return phi.eval(ext, alpha) == phi.eval(ext, beta);
}

}  // namespace orbitpoly
