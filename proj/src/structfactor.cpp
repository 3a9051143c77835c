#include "orbitpoly/structfactor.hpp"

#include <algorithm>
#include <set>

#include "orbitpoly/config.hpp"
#include "orbitpoly/error.hpp"
#include "orbitpoly/linalg.hpp"
#include "orbitpoly/tower.hpp"

namespace orbitpoly {

namespace {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

Poly linear(const FieldPtr& F, Elem root) { return Poly(F, {F->neg(root), F->one()}); }

// c T^(Q+1) + d T^Q - a T - b with Q = n.
Poly companion_with(const Mat2& s, std::uint64_t n) {
  const FieldPtr& F = s.field;
  if (n + 2 > limits().enumeration_cap) raise(ErrorKind::SizeCapExceeded, "companion polynomial degree too large");
  std::vector<Elem> c(n + 2, F->zero());
  c[n + 1] = s.c;
  c[n] = F->add(c[n], s.d);
  c[1] = F->sub(c[1], s.a);
  c[0] = F->sub(c[0], s.b);
  return Poly(F, std::move(c));
}

}  // namespace

Poly frobenius_companion(const Mat2& s) { return companion_with(s, s.field->card()); }

Poly frobenius_companion(const Moebius& s) { return frobenius_companion(s.matrix()); }

Moebius find_s_for_alpha(const Subgroup& G, const FieldPtr& ext, Elem alpha, const RatFunc* phi) {
  if (ext->in_ground(alpha)) raise(ErrorKind::InvariantViolation, "alpha must lie outside F_q");
  if (phi) {
    const ProjPoint v = phi->eval(*ext, ProjPoint::finite(alpha));
    if (!v.infinite && !ext->in_ground(v.value))
      raise(ErrorKind::InvariantViolation, "Phi(alpha) is not in F_q");
  }
  const ProjPoint a = ProjPoint::finite(alpha);
  const ProjPoint target = ProjPoint::finite(ext->frobenius(alpha, 1));
  for (const auto& s : G.elements())
    if (s.apply(*ext, a) == target) return s;
  raise(ErrorKind::InvariantViolation, "no element of G maps alpha to alpha^q");
}

// ---------------------------------------------------------------------------

Poly StructuredFactorization::reconstruct() const {
  const FieldPtr& F = input.field();
  Poly r = Poly::constant(F, unit);
  for (const auto& l : removed_linear) r *= l;
  for (const auto& f : factors) r *= f.factor;
  return r;
}

Factorization StructuredFactorization::as_factorization() const {
  Factorization out{unit, {}};
  for (const auto& l : removed_linear) out.factors.emplace_back(l, 1);
  for (const auto& f : factors) out.factors.emplace_back(f.factor, 1);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

StructuredFactorization factor_by_orbit(const Mat2& s, std::uint64_t seed) {
  const FieldPtr& F = s.field;
  if (F->is_extension()) raise(ErrorKind::TowerTooDeep, "structured factorization needs s over a prime or power field");
  const Moebius S = s.normalized();
  if (S.is_identity()) raise(ErrorKind::IdentityInput, "structured factorization of the identity");

  const Poly input = frobenius_companion(s);
  const std::uint64_t r = S.order();
  const Subgroup cyc = generate(F, {S});
  const OrbitPolynomial P = orbit_polynomial(cyc);

  StructuredFactorization out{input, s, S.classify(), r, input.lc(), {}, {}, 0, family_string(P), P.parameter()};

  // (i) strip F_q-rational roots: finite fixed points of s.
  Poly rest = input.monic();
  for (Elem root : roots_in(input, F, seed)) {
    const Poly lin = linear(F, root);
    ensure((rest % lin).is_zero(), "rational root does not divide the companion polynomial");
    rest = rest / lin;
    ensure(!(rest % lin).is_zero(), "repeated F_q-rational root of the companion polynomial");
    out.removed_linear.push_back(lin);
  }
  if (rest.degree() == 0) {
    out.degree_r = static_cast<unsigned>(r);
    return out;
  }
  ensure(rest.degree() % static_cast<int>(r) == 0, "stripped degree is not a multiple of the order");

  // (ii) bootstrap one root from a single oracle factor.
  const Poly h = one_irreducible_factor(rest, seed);
  ensure(h.degree() == static_cast<int>(r), "bootstrap factor degree " + std::to_string(h.degree()) +
                                                " differs from the order " + std::to_string(r));
  const FieldPtr ext = extend(F, h);
  const Elem alpha = ext->root();
  {
    ProjPoint z = ProjPoint::finite(alpha);
    for (std::uint64_t i = 1; i <= r; ++i) {
      z = S.apply(*ext, z);
      ensure(!z.infinite && z.value == ext->frobenius(alpha, i), "s^i(alpha) differs from alpha^(q^i)");
    }
  }

  // (iii) centralizer translates of alpha.
  const Subgroup C = pgl_centralizer(S);
  std::set<Elem> translates;
  for (const auto& u : C.elements()) {
    const ProjPoint z = u.apply(*ext, ProjPoint::finite(alpha));
    ensure(!z.infinite, "a centralizer translate of alpha is infinite");
    translates.insert(z.value);
  }

  // (iv) one factor per <s>-orbit of translates.
  const Field& E = *ext;
  std::set<Elem> used;
  for (Elem beta : translates) {
    if (used.count(beta)) continue;
    Poly prod = Poly::constant(ext, E.one());
    ProjPoint z = ProjPoint::finite(beta);
    for (std::uint64_t i = 0; i < r; ++i) {
      ensure(!z.infinite && translates.count(z.value), "<s>-orbit left the translate set");
      used.insert(z.value);
      prod *= linear(ext, z.value);
      z = S.apply(E, z);
    }
    ensure(z == ProjPoint::finite(beta), "<s>-orbit did not close after r steps");
    const Poly factor = prod.restrict_to(F);
    // (v) lambda from the family parameter.
    const ProjPoint lam = P.parameter().eval(E, ProjPoint::finite(beta));
    ensure(lam.infinite || E.in_ground(lam.value), "family parameter at a root lies outside F_q");
    ensure(specialize(P, ext, beta).restrict_to(F) == factor, "factor differs from the orbit polynomial specialization");
    out.factors.push_back({factor, ext, beta, lam});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const StructuredFactor& x, const StructuredFactor& y) { return x.factor < y.factor; });
  for (std::size_t i = 1; i < out.factors.size(); ++i)
    ensure(!(out.factors[i].factor == out.factors[i - 1].factor), "duplicate structured factor");
  out.degree_r = static_cast<unsigned>(r);

  // (vi) reconstruction.
  ensure(out.reconstruct() == input, "structured factors do not reconstruct the input");
  return out;
}

// ---------------------------------------------------------------------------

LambdaReport lambda_family_report(const Moebius& s, std::uint64_t seed) {
  const FieldPtr& F = s.field();
  if (s.is_identity() || s.order() != F->card() + 1)
    raise(ErrorKind::WrongOrder, "lambda report needs an element of order q+1");
  return lambda_family_report(s, invariant_generator(generate(F, {s})), seed);
}

LambdaReport lambda_family_report(const Moebius& s, const RatFunc& phi, std::uint64_t seed) {
  const FieldPtr& F = s.field();
  const std::uint64_t q = F->card();
  if (s.is_identity() || s.order() != q + 1) raise(ErrorKind::WrongOrder, "lambda report needs an element of order q+1");
  LambdaReport rep{phi, {}, {}, 0, false, true};
  std::map<unsigned, std::size_t> counts;
  for (std::uint64_t code = 0; code < q; ++code) {
    const Poly f = phi.num() - phi.den().scaled(Elem{code});
    const Factorization fac = factorize(f, seed);
    const unsigned d = static_cast<unsigned>(fac.factors.front().first.degree());
    for (const auto& [g, e] : fac.factors) {
      if (e != 1 || g.degree() != static_cast<int>(d)) rep.pass = false;
      if (g.degree() == 1) rep.saw_linear = true;
    }
    rep.degree_of_lambda[code] = d;
    ++counts[d];
    ++rep.total;
  }
  for (auto r : divisors(q + 1)) {
    if (r == 1) continue;
    const std::size_t c = counts.count(static_cast<unsigned>(r)) ? counts[static_cast<unsigned>(r)] : 0;
    rep.rows.push_back({static_cast<unsigned>(r), c, euler_phi(r)});
    if (c != euler_phi(r)) rep.pass = false;
  }
  for (const auto& [d, c] : counts)
    if ((q + 1) % d != 0 || d == 1) rep.pass = false;
  if (rep.total != q || rep.saw_linear) rep.pass = false;
  return rep;
}

NumeratorStructure numerator_structure_check(const Moebius& s) {
  const FieldPtr& F = s.field();
  const std::uint64_t q = F->card();
  if (s.is_identity() || s.order() != q + 1) raise(ErrorKind::WrongOrder, "numerator check needs an element of order q+1");
  const OrbitPolynomial P = orbit_polynomial(generate(F, {s}));
  const Poly ps = frobenius_companion(s);
  const Poly x = Poly::variable(F);
  const Poly u = pow(x, q) - x;
  NumeratorStructure out{{}, true, true};
  for (std::size_t i = 0; i < P.coeffs.size(); ++i) {
    const RatFunc& c = P.coeffs[i];
    if (c.is_constant()) continue;
    if (!(c.den() == u)) out.denominator_ok = false;
    const Poly& f = c.num();
    const std::size_t len = static_cast<std::size_t>(std::max(f.degree(), ps.degree()) + 1);
    Matrix M(len, std::vector<Elem>(2));
    std::vector<Elem> rhs(len);
    for (std::size_t j = 0; j < len; ++j) {
      M[j][0] = ps.coeff(j);
      M[j][1] = u.coeff(j);
      rhs[j] = f.coeff(j);
    }
    auto sol = solve_linear(*F, std::move(M), std::move(rhs), 2);
    if (!sol) {
      out.pass = false;
      continue;
    }
    out.terms.push_back({i, (*sol)[0], (*sol)[1]});
  }
  out.pass = out.pass && out.denominator_ok;
  return out;
}

// ---------------------------------------------------------------------------

FLambdaResult factor_f_lambda(const Subgroup& G, Elem lambda, std::uint64_t seed) {
  return factor_f_lambda(G, invariant_generator(G), lambda, seed);
}

FLambdaResult factor_f_lambda(const Subgroup& G, const RatFunc& phi, Elem lambda, std::uint64_t seed) {
  const FieldPtr& F = G.field();
  const Poly f = phi.num() - phi.den().scaled(lambda);
  FLambdaResult out{factorize(f, seed), true, 0, std::nullopt, false};
  for (const auto& [g, e] : out.factorization.factors)
    if (e != 1) out.regular = false;
  if (!out.regular) return out;
  const Poly& h = out.factorization.factors.front().first;
  out.degree_r = static_cast<unsigned>(h.degree());
  for (const auto& [g, e] : out.factorization.factors)
    ensure(g.degree() == h.degree(), "factors of f - lambda g have different degrees");
  if (h.degree() == 1) return out;
  const FieldPtr ext = extend(F, h);
  const Elem alpha = ext->root();
  const Moebius s = find_s_for_alpha(G, ext, alpha, &phi);
  ensure(s.order() == out.degree_r, "factor degree differs from the order of the witness element");
  out.witness = s;
  const Poly mp = minimal_poly(ext, alpha, F);
  for (const auto& [g, e] : out.factorization.factors)
    if (g == mp) out.minimal_poly_listed = true;
  return out;
}

CubicsProduct all_cubics_product(const FieldPtr& field, std::uint64_t seed) {
  const std::uint64_t q = field->card();
  const RatFunc phi = pgl_generator(field);
  const FieldPtr ext = extension_of_degree(field, 3);
  const Elem alpha = ext->root();
  const ProjPoint lam = phi.eval(*ext, ProjPoint::finite(alpha));
  ensure(!lam.infinite && ext->in_ground(lam.value), "Phi(alpha) is not in F_q for a cubic alpha");
  const Poly f_alpha = phi.num() - phi.den().scaled(lam.value);
  const Poly t = Poly::variable(field);
  const Poly expected = (pow(t, q * q * q) - t) / (pow(t, q) - t);
  CubicsProduct out{f_alpha, expected, 0, false};
  const Factorization fac = factorize(f_alpha, seed);
  bool all_cubic = true;
  for (const auto& [g, e] : fac.factors)
    if (g.degree() != 3 || e != 1) all_cubic = false;
  out.factor_count = fac.count();
  out.pass = all_cubic && f_alpha == expected.scaled(f_alpha.lc()) && out.factor_count == (q * q * q - q) / 3;
  return out;
}

// ---------------------------------------------------------------------------

GeneralKResult factor_general_k(const Mat2& s, unsigned k, std::uint64_t seed) {
  const FieldPtr& F = s.field;
  if (F->is_extension()) raise(ErrorKind::TowerTooDeep, "s must be over a prime or power field");
  if (k == 0) raise(ErrorKind::UsageError, "k must be positive");
  const std::uint64_t q = F->card();
  const std::uint64_t Q = checked_pow(q, k, limits().enumeration_cap);
  GeneralKResult out{companion_with(s, Q), k, true, {}, {}, {}};
  if (k == 1) {
    out.factorization = factor_by_orbit(s, seed).as_factorization();
    return out;
  }
  const FieldPtr FQ = Field::create(F->characteristic(), F->absolute_degree() * k);

  // Embedding F_q -> F_Q through a root of F_q's modulus.
  std::vector<Elem> image(q);
  if (F->is_prime()) {
    for (std::uint64_t c = 0; c < q; ++c) image[c] = Elem{c};
  } else {
    const Poly mod(FQ, std::vector<Elem>(F->modulus().begin(), F->modulus().end()));
    const auto roots = roots_in(mod, FQ, seed);
    ensure(!roots.empty(), "F_q does not embed into F_Q");
    const Elem rho = roots.front();
    for (std::uint64_t c = 0; c < q; ++c) {
      Elem v = FQ->zero(), pw = FQ->one();
      for (Elem coord : F->coords(Elem{c})) {
        v = FQ->add(v, FQ->mul(coord, pw));
        pw = FQ->mul(pw, rho);
      }
      image[c] = v;
    }
  }
  std::map<std::uint64_t, std::uint64_t> preimage;
  for (std::uint64_t c = 0; c < q; ++c) preimage[image[c].code] = c;
  auto pull_back = [&](const Poly& g) {
    std::vector<Elem> c;
    for (Elem e : g.coeffs()) {
      auto it = preimage.find(e.code);
      ensure(it != preimage.end(), "merged factor has a coefficient outside F_q");
      c.push_back(Elem{it->second});
    }
    return Poly(F, std::move(c));
  };

  const Mat2 sQ{FQ, image[s.a.code], image[s.b.code], image[s.c.code], image[s.d.code]};
  const std::uint64_t r = sQ.normalized().is_identity() ? 1 : sQ.normalized().order();
  if (!(r > 2 && (Q + 1) % r == 0)) {
    out.structured = false;
    out.warning = "order " + std::to_string(r) + " does not satisfy r > 2 and r | q^k+1; used the general factorization";
    out.factorization = factorize(out.input, seed);
    return out;
  }
  const StructuredFactorization sf = factor_by_orbit(sQ, seed);
  std::vector<Poly> big;
  for (const auto& l : sf.removed_linear) big.push_back(l);
  for (const auto& f : sf.factors) big.push_back(f.factor);
  out.big_factors = big;

  auto conj = [&](const Poly& g) {
    std::vector<Elem> c;
    for (Elem e : g.coeffs()) c.push_back(FQ->pow(e, q));
    return Poly(FQ, std::move(c));
  };
  std::vector<char> used(big.size(), 0);
  Factorization fac{Elem{preimage.at(sf.unit.code)}, {}};
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (used[i]) continue;
    Poly merged = big[i];
    used[i] = 1;
    for (Poly g = conj(big[i]); !(g == big[i]); g = conj(g)) {
      auto it = std::find(big.begin(), big.end(), g);
      ensure(it != big.end(), "Galois conjugate of a factor is missing");
      used[static_cast<std::size_t>(it - big.begin())] = 1;
      merged *= g;
    }
    fac.factors.emplace_back(pull_back(merged), 1);
  }
  std::sort(fac.factors.begin(), fac.factors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  ensure(fac.expand(F) == out.input, "merged factors do not reconstruct the input");
  out.factorization = std::move(fac);
  return out;
}

}  // namespace orbitpoly
