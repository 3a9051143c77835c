// Acceptance gate: one PASS/FAIL line per criterion, each under its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitpoly/classes.hpp"
#include "orbitpoly/factor.hpp"
#include "orbitpoly/group.hpp"
#include "orbitpoly/invariants.hpp"
#include "orbitpoly/structfactor.hpp"
#include "orbitpoly/tower.hpp"

using namespace orbitpoly;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int n, double limit_s, const std::function<Outcome()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = dt < limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d  (%.2f s, limit %.0f s)  %s%s\n", pass ? "PASS" : "FAIL", n, dt, limit_s,
              o.detail.c_str(), in_time ? "" : "  [time limit exceeded]");
  std::fflush(stdout);
}

FieldPtr field_of(std::uint32_t q) {
  switch (q) {
    case 4: return Field::create(2, 2);
    case 8: return Field::create(2, 3);
    case 9: return Field::create(3, 2);
    default: return Field::create(q);
  }
}

std::map<Poly, unsigned> as_map(const Factorization& f) {
  std::map<Poly, unsigned> m;
  for (const auto& [h, e] : f.factors) m[h] += e;
  return m;
}

std::map<Poly, unsigned> structured_map(const StructuredFactorization& sf) {
  std::map<Poly, unsigned> m;
  for (const auto& l : sf.removed_linear) ++m[l];
  for (const auto& f : sf.factors) ++m[f.factor];
  return m;
}

std::set<Poly> poly_set(const FieldPtr& F, const std::vector<const char*>& text) {
  std::set<Poly> s;
  for (const char* t : text) s.insert(parse_poly(F, t));
  return s;
}

std::vector<std::size_t> census_sizes(const Census& c) {
  std::vector<std::size_t> v;
  for (const auto& o : c.orbits) v.push_back(o.size);
  std::sort(v.begin(), v.end());
  return v;
}

Outcome c1() {
  const FieldPtr F = Field::create(19);
  const auto want = poly_set(F, {"T^4 + 6T^3 - 6T^2 + 13T + 1", "T^4 + 9T^3 - 6T^2 + 10T + 1",
                                 "T^4 + 12T^3 - 6T^2 + 7T + 1", "T^4 + 14T^3 - 6T^2 + 5T + 1",
                                 "T^4 + 15T^3 - 6T^2 + 4T + 1"});
  const auto sf = factor_by_orbit(parse_mat2(F, "(-x-1)/(x-1)"));
  std::set<Poly> got;
  bool family = true;
  for (const auto& f : sf.factors) {
    got.insert(f.factor);
    const Elem lam = f.factor.coeff(1);
    family = family && f.factor == Poly(F, {F->one(), lam, F->from_int(-6), F->neg(lam), F->one()});
  }
  const bool ok = sf.factors.size() == 5 && got == want && family && sf.removed_linear.empty() &&
                  sf.unit == F->one() && sf.reconstruct() == sf.input;
  return {ok, "q=19: " + std::to_string(sf.factors.size()) + " quartics, family T^4 - l T^3 - 6T^2 + l T + 1"};
}

Outcome c2() {
  const FieldPtr F = Field::create(17);
  const Mat2 s = parse_mat2(F, "(14x+13)/(6x+2)");
  const auto P = orbit_polynomial(generate(F, {parse_moebius(F, "(14x+13)/(6x+2)")}));
  const RatFunc t(parse_poly(F, "2x^3 + 15x^2 + 8", 'x'), parse_poly(F, "x^2 + 15x + 3", 'x'));
  auto affine = [&](std::int64_t a, std::int64_t b) { return t.scaled(F->from_int(a)) + RatFunc(Poly::from_ints(F, {b})); };
  // Lemma-level affine change: our parameter is affine in the given t.
  const bool orbit_ok = P.coeffs.size() == 4 && P.coeffs[3] == affine(0, 1) && P.coeffs[2] == affine(8, -1) &&
                        P.coeffs[1] == affine(1, 0) && P.coeffs[0] == affine(7, 4) &&
                        affine_relation(P.parameter(), t).has_value();
  const auto sf = factor_by_orbit(s);
  const bool comp_ok = sf.input == parse_poly(F, "6T^18 + 2T^17 - 14T - 13");
  std::set<Poly> got;
  for (const auto& f : sf.factors) got.insert(f.factor);
  const auto want = poly_set(F, {"T^3 + 15T + 7", "T^3 + 3T^2 + 9T + 16", "T^3 + 4T^2 + 7T + 2", "T^3 + 6T^2 + 3T + 8",
                                 "T^3 + 12T^2 + 8T + 9", "T^3 + 15T^2 + 2T + 1"});
  const bool fac_ok = sf.unit == F->from_int(6) && sf.factors.size() == 6 && got == want && sf.reconstruct() == sf.input;
  return {orbit_ok && comp_ok && fac_ok,
          std::string("q=17: orbit polynomial ") + (orbit_ok ? "matches" : "differs") + ", unit 6 x " +
              std::to_string(got.size()) + " cubics " + (got == want ? "as listed" : "NOT as listed")};
}

Outcome c3() {
  const FieldPtr F = Field::create(7);
  const Moebius s = parse_moebius(F, "(3x-1)/(x+3)");
  const RatFunc phi(parse_poly(F, "x^8 + 1", 'x'), parse_poly(F, "x^7 - x", 'x'));
  const bool gen_ok = invariant_generator(generate(F, {s})) == phi;
  const auto rep = lambda_family_report(s, phi);
  std::map<unsigned, std::size_t> got;
  bool phi_ok = true;
  std::string d;
  for (const auto& r : rep.rows) {
    got[r.degree] = r.count;
    phi_ok = phi_ok && r.count == r.expected;
    d += std::to_string(r.degree) + ":" + std::to_string(r.count) + " ";
  }
  const std::map<unsigned, std::size_t> want{{2, 1}, {4, 2}, {8, 4}};
  return {gen_ok && got == want && phi_ok && rep.total == 7 && !rep.saw_linear, "q=7 degree:count " + d + "sum " + std::to_string(rep.total)};
}

Outcome c4() {
  const FieldPtr F = Field::create(3);
  const Poly f = parse_poly(F, "T^24 + T^22 + T^20 + T^16 + T^14 + T^10 + T^8 + T^4 + T^2 + 1");
  const Poly g = parse_poly(F, "T^18 + T^12 + T^6");
  const RatFunc phi = invariant_generator(full_pgl(F));
  const bool fg_ok = phi.num() == f && phi.den() == g;
  std::set<Poly> cubics;
  for (std::uint64_t c = 0; c < 27; ++c) {
    const Poly h(F, {Elem{c % 3}, Elem{c / 3 % 3}, Elem{c / 9}, F->one()});
    if (is_irreducible(h)) cubics.insert(h);
  }
  auto all_cubics = [&](const Factorization& fa) {
    std::set<Poly> s;
    for (const auto& [h, e] : fa.factors)
      if (e == 1) s.insert(h);
    return fa.factors.size() == 8 && s == cubics;
  };
  auto three_quadratics_x4 = [](const Factorization& fa) {
    bool ok = fa.factors.size() == 3;
    for (const auto& [h, e] : fa.factors) ok = ok && h.degree() == 2 && e == 4;
    return ok;
  };
  const auto minus = factorize(f - g), plus = factorize(f + g), zero = factorize(f);
  bool six_quartics = zero.factors.size() == 6;
  for (const auto& [h, e] : zero.factors) six_quartics = six_quartics && h.degree() == 4 && e == 1;
  const bool literal = all_cubics(minus) && three_quadratics_x4(plus) && six_quartics;
  const bool swapped = all_cubics(plus) && three_quadratics_x4(minus) && six_quartics;
  std::string d = "PGL(2,3): f and g ";
  d += fg_ok ? "match the generator" : "DIFFER from the generator";
  d += "; f: " + std::string(six_quartics ? "six quartics" : "unexpected");
  d += "; f-g: " + std::string(all_cubics(minus) ? "all 8 cubics" : three_quadratics_x4(minus) ? "3 quadratics x4" : "other");
  d += "; f+g: " + std::string(all_cubics(plus) ? "all 8 cubics" : three_quadratics_x4(plus) ? "3 quadratics x4" : "other");
  if (!literal && swapped)
    d += "; NOTE: the stated signs do not hold; they hold with f-g and f+g exchanged (fibre -f/g = 1 is f+g)";
  return {fg_ok && literal, d};
}

Outcome c5() {
  const Subgroup P = full_pgl(Field::create(2, 2));
  const auto rp = riemann_hurwitz_audit(P);
  const auto cp = census_sizes(nonregular_census(P));
  const Subgroup A = find_a5(Field::create(11));
  const auto ra = riemann_hurwitz_audit(A);
  const auto ca = census_sizes(nonregular_census(A));
  const bool ok = P.order() == 60 && cp == std::vector<std::size_t>{5, 12} && rp.different_sum == 118 &&
                  rp.expected == 118 && rp.pass && A.order() == 60 && ca == std::vector<std::size_t>{12, 20, 30} &&
                  ra.tame_sum == 118 && ra.pass;
  return {ok, "PGL(2,4): census {5,12}, sum " + std::to_string(rp.different_sum) + "; A5 in PGL(2,11): census {12,20,30}, sum " +
                  std::to_string(ra.tame_sum)};
}

Outcome c6() {
  bool ok = true;
  std::string d;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const FieldPtr F = field_of(q);
    const auto cl = conjugacy_classes(F);
    const std::size_t want = q % 2 ? q + 2 : q + 1;
    std::size_t split_inv = 0, nonsplit_inv = 0;
    for (const auto& c : cl) {
      split_inv += c.kind == ClassKind::SplitInvolution;
      nonsplit_inv += c.kind == ClassKind::NonSplitInvolution;
    }
    ok = ok && cl.size() == want && (q % 2 ? split_inv == 1 && nonsplit_inv == 1 : split_inv + nonsplit_inv == 0);
    if (q % 2) {
      for_each_pgl(F, [&](const Moebius& s) {
        if (s.order() != 2) return;
        const bool rational = s.fixed_points(1).size() == 2;
        const auto k = cl[class_index(cl, s)].kind;
        ok = ok && k == (rational ? ClassKind::SplitInvolution : ClassKind::NonSplitInvolution);
      });
    }
    d += std::to_string(q) + ":" + std::to_string(cl.size()) + " ";
  }
  return {ok, "classes q:count " + d};
}

Outcome c7() {
  std::size_t checked = 0, bad = 0;
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
    const FieldPtr F = field_of(q);
    for_each_pgl(F, [&](const Moebius& s) {
      const auto r = s.order();
      if (r <= 2 || (q + 1) % r) return;
      const auto sf = factor_by_orbit(s.matrix());
      const auto fa = factorize(sf.input);
      ++checked;
      if (!(sf.unit == fa.unit && structured_map(sf) == as_map(fa))) ++bad;
    });
  }
  std::size_t stripped = 0;
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const FieldPtr F = field_of(q);
    const std::uint64_t p = F->characteristic();
    for_each_pgl(F, [&](const Moebius& s) {
      const auto r = s.order();
      if (s.is_identity() || ((q - 1) % r && r != p)) return;
      const auto sf = factor_by_orbit(s.matrix());
      const auto fa = factorize(sf.input);
      ++stripped;
      if (!(sf.unit == fa.unit && structured_map(sf) == as_map(fa))) ++bad;
    });
  }
  return {bad == 0 && checked > 0 && stripped > 0,
          std::to_string(checked) + " nonsplit + " + std::to_string(stripped) + " split/unipotent elements, " +
              std::to_string(bad) + " mismatches"};
}

Outcome c8() {
  const auto ctx = make_class_context(field_of(4));
  std::vector<ProjPoint> pts = projective_line(*ctx.field);
  std::set<std::size_t> hit;
  bool ok = ctx.classes.size() == 5;
  for (const auto& z : pts) {
    const auto lc = class_of_lambda(ctx, z);
    ok = ok && lc.classes.size() == 1 && !lc.ambiguous;
    if (lc.classes.size() != 1) continue;
    hit.insert(lc.classes[0]);
    const auto& c = ctx.classes[lc.classes[0]];
    if (z.infinite) ok = ok && c.kind == ClassKind::Identity;
    if (!z.infinite && z.value == ctx.mu) ok = ok && c.order == 2;
    if (!z.infinite) {
      const auto pred = factor_pattern_of_class(ctx, z.value);
      const auto obs = observed_pattern(ctx, z.value);
      ok = ok && obs && *obs == pred;
    }
  }
  ok = ok && hit.size() == 5;
  return {ok, "q=4: " + std::to_string(pts.size()) + " points onto " + std::to_string(hit.size()) + " classes, patterns match oracle"};
}

Outcome c9() {
  std::size_t n = 0, bad = 0;
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const FieldPtr F = field_of(q);
    for_each_pgl(F, [&](const Moebius& s) {
      ++n;
      const auto L = lang_solve(s);
      const bool eq = L.t.frobenius(1).inverse().compose(L.t) == s.lift(L.ext);
      // X_s = t^-1(P^1(F_q)), recomputed; F_q codes embed unchanged.
      std::set<ProjPoint> image, xs(L.xs.begin(), L.xs.end());
      const Moebius ti = L.t.inverse();
      for (const auto& z : projective_line(*F)) {
        const ProjPoint lifted = z.infinite ? z : z;
        image.insert(ti.apply(*L.ext, lifted));
      }
      bool sol = true;
      for (const auto& z : L.xs)
        sol = sol && s.apply(*L.ext, z) == (z.infinite ? z : ProjPoint::finite(L.ext->frobenius(z.value, 1)));
      const bool count = L.finite_count == q || L.finite_count == q + 1;
      if (!(eq && L.equation_ok && L.image_ok && image == xs && sol && count)) ++bad;
    });
  }
  return {bad == 0, std::to_string(n) + " elements for q in {2,3,4}, " + std::to_string(bad) + " failures"};
}

Outcome c10() {
  bool ok = true;
  std::string d;
  const std::map<std::uint32_t, std::size_t> want{{2, 2}, {3, 8}, {5, 40}};
  for (const auto& [q, n] : want) {
    const auto c = all_cubics_product(field_of(q));
    ok = ok && c.pass && c.factor_count == n && c.f_alpha.monic() == c.expected;
    d += std::to_string(q) + ":" + std::to_string(c.factor_count) + " ";
  }
  return {ok, "cubic counts " + d};
}

}  // namespace

int main() {
  criterion(1, 1, c1);
  criterion(2, 1, c2);
  criterion(3, 1, c3);
  criterion(4, 5, c4);
  criterion(5, 30, c5);
  criterion(6, 60, c6);
  criterion(7, 300, c7);
  criterion(8, 30, c8);
  criterion(9, 60, c9);
  criterion(10, 10, c10);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
