#include "orbitpoly/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "orbitpoly/classes.hpp"
#include "orbitpoly/config.hpp"
#include "orbitpoly/error.hpp"
#include "orbitpoly/factor.hpp"
#include "orbitpoly/group.hpp"
#include "orbitpoly/invariants.hpp"
#include "orbitpoly/structfactor.hpp"
#include "orbitpoly/tower.hpp"

namespace orbitpoly {

bool VerifyReport::pass() const noexcept { return failures() == 0; }

std::size_t VerifyReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void run(std::string name, const std::function<Outcome()>& fn) {
    try {
      Outcome o = fn();
      report_.checks.push_back({std::move(name), o.pass, std::move(o.detail)});
    } catch (const std::exception& e) {
      report_.checks.push_back({std::move(name), false, std::string("exception: ") + e.what()});
    }
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

Outcome eq(bool ok, const std::string& got) { return {ok, got}; }

std::string join_polys(const std::vector<Poly>& v) {
  std::string out;
  for (const auto& p : v) out += (out.empty() ? "" : "; ") + to_string(p);
  return out;
}

std::vector<Poly> factor_list(const Factorization& f) {
  std::vector<Poly> out;
  for (const auto& [h, e] : f.factors)
    for (unsigned i = 0; i < e; ++i) out.push_back(h);
  return out;
}

std::vector<Poly> structured_list(const StructuredFactorization& sf) {
  std::vector<Poly> out;
  for (const auto& f : sf.factors) out.push_back(f.factor);
  return out;
}

std::vector<Poly> q19_expected() {
  const FieldPtr F = Field::create(19);
  std::vector<Poly> out;
  for (std::int64_t lam : {-6, -9, -12, -14, -15}) out.push_back(Poly::from_ints(F, {1, lam, -6, -lam, 1}));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poly> q17_expected() {
  const FieldPtr F = Field::create(17);
  std::vector<Poly> out;
  for (const char* s : {"T^3 + 15T + 7", "T^3 + 3T^2 + 9T + 16", "T^3 + 4T^2 + 7T + 2", "T^3 + 6T^2 + 3T + 8",
                        "T^3 + 12T^2 + 8T + 9", "T^3 + 15T^2 + 2T + 1"})
    out.push_back(parse_poly(F, s));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cyclic(const Subgroup& G) {
  for (const auto& g : G.elements())
    if (g.order() == G.order()) return true;
  return false;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

// Some element of exact order n in PGL(2,q), or nullopt.
std::optional<Moebius> element_of_order(const FieldPtr& F, std::uint64_t n) {
  std::optional<Moebius> out;
  for_each_pgl(F, [&](const Moebius& s) {
    if (!out && s.order() == n) out = s;
  });
  return out;
}

void examples_moebius(Recorder& R) {
  R.run("moebius-infinity-maps-to-a-over-c", [] {
    const FieldPtr F = Field::create(7);
    const Moebius s = Moebius::from_ints(F, 2, 3, 5, 1);
    const ProjPoint v = s.apply(ProjPoint::infinity());
    return eq(!v.infinite && v.value == F->div(F->from_int(2), F->from_int(5)), format_point(*F, v));
  });
  R.run("compose-negation-with-inversion", [] {
    const FieldPtr F = Field::create(7);
    const Moebius st = parse_moebius(F, "-x").compose(parse_moebius(F, "1/x"));
    return eq(st == parse_moebius(F, "-1/x"), to_string(st));
  });
  R.run("order-q19-headline-element", [] {
    const auto r = parse_moebius(Field::create(19), "(-x-1)/(x-1)").order();
    return eq(r == 4, std::to_string(r));
  });
  R.run("order-q17-element", [] {
    const auto r = parse_moebius(Field::create(17), "(14x+13)/(6x+2)").order();
    return eq(r == 3, std::to_string(r));
  });
  R.run("order-q7-element", [] {
    const auto r = parse_moebius(Field::create(7), "(3x-1)/(x+3)").order();
    return eq(r == 8, std::to_string(r));
  });
  R.run("translation-fixes-only-infinity", [] {
    const FieldPtr F = Field::create(7);
    const Moebius s = parse_moebius(F, "x+3");
    bool ok = true;
    for (unsigned k : {1u, 2u, 3u}) {
      const auto fp = s.fixed_points(k);
      ok = ok && fp.size() == 1 && fp[0].infinite;
    }
    return eq(ok, "k = 1, 2, 3");
  });
  R.run("scaling-fixes-zero-and-infinity", [] {
    const FieldPtr F = Field::create(7);
    const auto fp = parse_moebius(F, "3x").fixed_points(1u);
    return eq(fp.size() == 2 && fp[0] == ProjPoint::finite(F->zero()) && fp[1].infinite, std::to_string(fp.size()) + " points");
  });
  R.run("order-4-divisor-of-q-plus-1-has-no-rational-fixed-points", [] {
    const auto fp = parse_moebius(Field::create(19), "(-x-1)/(x-1)").fixed_points(1u);
    return eq(fp.empty(), std::to_string(fp.size()) + " points");
  });
  R.run("classify-scaling-split", [] {
    const auto c = parse_moebius(Field::create(7), "3x").classify();
    return eq(c == MoebiusClass::Split, std::string(to_string(c)));
  });
  R.run("classify-translation-unipotent", [] {
    const auto c = parse_moebius(Field::create(7), "x+1").classify();
    return eq(c == MoebiusClass::Unipotent, std::string(to_string(c)));
  });
  R.run("classify-order-q-plus-1-nonsplit", [] {
    const auto c = parse_moebius(Field::create(7), "(3x-1)/(x+3)").classify();
    return eq(c == MoebiusClass::NonSplit, std::string(to_string(c)));
  });
}

void examples_groups(Recorder& R) {
  R.run("negation-and-inversion-generate-klein-four", [] {
    const FieldPtr F = Field::create(5);
    const Subgroup G = generate(F, {parse_moebius(F, "-x"), parse_moebius(F, "1/x")});
    bool ok = G.order() == 4;
    for (const auto& g : G.elements()) ok = ok && (g.is_identity() || g.order() == 2);
    return eq(ok, "order " + std::to_string(G.order()));
  });
  R.run("q7-element-generates-cyclic-8", [] {
    const FieldPtr F = Field::create(7);
    const Subgroup G = generate(F, {parse_moebius(F, "(3x-1)/(x+3)")});
    return eq(G.order() == 8 && is_cyclic(G), "order " + std::to_string(G.order()));
  });
  R.run("pgl-2-3-has-order-24", [] {
    const auto n = full_pgl(Field::create(3)).order();
    return eq(n == 24, std::to_string(n));
  });
  R.run("pgl-transitive-on-rational-points", [] {
    const FieldPtr F = Field::create(5);
    const auto rep = orbit_decomposition(full_pgl(F), 1);
    return eq(rep.orbits.size() == 1 && rep.orbits[0].points.size() == 6, std::to_string(rep.orbits.size()) + " orbits");
  });
  R.run("pgl-orbits-on-quadratic-extension", [] {
    const FieldPtr F = Field::create(5);
    const auto rep = orbit_decomposition(full_pgl(F), 2);
    bool ok = rep.orbits.size() == 2;
    std::string d;
    for (const auto& o : rep.orbits) d += std::to_string(o.points.size()) + "/" + std::to_string(o.stabilizer.order()) + " ";
    if (ok) {
      ok = rep.orbits[0].points.size() == 6 && rep.orbits[0].stabilizer.order() == 20 &&
           rep.orbits[1].points.size() == 20 && rep.orbits[1].stabilizer.order() == 6;
    }
    return eq(ok, d);
  });
  R.run("cyclic-order-dividing-q-plus-1-acts-regularly", [] {
    const FieldPtr F = Field::create(19);
    const auto rep = orbit_decomposition(generate(F, {parse_moebius(F, "(-x-1)/(x-1)")}), 1);
    bool ok = rep.orbits.size() == 5;
    for (const auto& o : rep.orbits) ok = ok && o.regular;
    return eq(ok, std::to_string(rep.orbits.size()) + " orbits");
  });
  R.run("p-group-has-one-nonregular-orbit", [] {
    const FieldPtr F = Field::create(7);
    const Census c = nonregular_census(generate(F, {parse_moebius(F, "x+1")}));
    return eq(c.orbits.size() == 1 && c.orbits[0].points.size() == 1 && c.orbits[0].points[0].infinite,
              std::to_string(c.orbits.size()) + " orbits");
  });
  auto census_string = [](const Census& c) {
    std::string s;
    for (const auto& o : c.orbits) s += (s.empty() ? "" : ",") + std::to_string(o.size);
    return s;
  };
  R.run("a5-odd-characteristic-census", [&] {
    const Census c = nonregular_census(find_a5(Field::create(11)));
    const std::string s = census_string(c);
    return eq(s == "12,20,30", s);
  });
  R.run("a5-characteristic-2-census", [&] {
    const Census c = nonregular_census(full_pgl(Field::create(2, 2)));
    const std::string s = census_string(c);
    return eq(s == "5,12", s);
  });
  R.run("a5-odd-characteristic-riemann-hurwitz", [] {
    const auto rh = riemann_hurwitz_audit(find_a5(Field::create(11)));
    return eq(rh.pass && rh.tame_sum == 118 && rh.expected == 118, std::to_string(rh.tame_sum));
  });
  R.run("a5-characteristic-2-riemann-hurwitz", [] {
    const auto rh = riemann_hurwitz_audit(full_pgl(Field::create(2, 2)));
    return eq(rh.pass && rh.different_sum == 118, std::to_string(rh.different_sum));
  });
  R.run("order-q-plus-1-centralizer-cyclic", [] {
    const FieldPtr F = Field::create(7);
    const Subgroup C = pgl_centralizer(parse_moebius(F, "(3x-1)/(x+3)"));
    return eq(C.order() == 8 && is_cyclic(C), std::to_string(C.order()));
  });
  R.run("unipotent-centralizer-order-q", [] {
    const FieldPtr F = Field::create(7);
    const Subgroup C = pgl_centralizer(parse_moebius(F, "x+1"));
    return eq(C.order() == 7, std::to_string(C.order()));
  });
}

void examples_invariants(Recorder& R) {
  R.run("q19-orbit-polynomial-family", [] {
    const FieldPtr F = Field::create(19);
    const auto P = orbit_polynomial(generate(F, {parse_moebius(F, "(-x-1)/(x-1)")}));
    const RatFunc t(parse_poly(F, "x^4 - 6x^2 + 1", 'x'), parse_poly(F, "x^3 - x", 'x'));
    const RatFunc one(Poly::from_ints(F, {1}));
    const RatFunc six(Poly::from_ints(F, {6}));
    const bool ok = P.coeffs.size() == 5 && P.coeffs[4] == one && P.coeffs[3] == RatFunc(Poly(F)) - t &&
                    P.coeffs[2] == RatFunc(Poly(F)) - six && P.coeffs[1] == t && P.coeffs[0] == one;
    return eq(ok, family_string(P));
  });
  R.run("q17-orbit-polynomial-family", [] {
    const FieldPtr F = Field::create(17);
    const auto P = orbit_polynomial(generate(F, {parse_moebius(F, "(14x+13)/(6x+2)")}));
    const RatFunc t(parse_poly(F, "2x^3 + 15x^2 + 8", 'x'), parse_poly(F, "x^2 + 15x + 3", 'x'));
    auto affine = [&](std::int64_t a, std::int64_t b) {
      return t.scaled(F->from_int(a)) + RatFunc(Poly::from_ints(F, {b}));
    };
    const bool ok = P.coeffs.size() == 4 && P.coeffs[2] == affine(8, -1) && P.coeffs[1] == affine(1, 0) &&
                    P.coeffs[0] == affine(7, 4);
    return eq(ok, family_string(P));
  });
  R.run("q17-invariant-generator-affine-in-t", [] {
    const FieldPtr F = Field::create(17);
    const RatFunc phi = invariant_generator(generate(F, {parse_moebius(F, "(14x+13)/(6x+2)")}));
    const RatFunc t(parse_poly(F, "2x^3 + 15x^2 + 8", 'x'), parse_poly(F, "x^2 + 15x + 3", 'x'));
    const auto rel = affine_relation(phi, t);
    return eq(rel && rel->first.code != 0, to_string(phi));
  });
  R.run("q7-invariant-generator", [] {
    const FieldPtr F = Field::create(7);
    const RatFunc phi = invariant_generator(generate(F, {parse_moebius(F, "(3x-1)/(x+3)")}));
    const bool ok = phi.num() == parse_poly(F, "x^8 + 1", 'x') && phi.den() == parse_poly(F, "x^7 - x", 'x');
    return eq(ok, to_string(phi));
  });
  R.run("cyclic-q-plus-1-denominator-is-x^q-x", [] {
    std::string d;
    bool ok = true;
    for (std::uint32_t q : {5u, 7u, 11u}) {
      const FieldPtr F = Field::create(q);
      const auto s = element_of_order(F, q + 1);
      const RatFunc phi = invariant_generator(generate(F, {*s}));
      const Poly xq = pow(Poly::variable(F), q) - Poly::variable(F);
      ok = ok && phi.den().monic() == xq;
      d += to_string(phi.den(), "x") + "; ";
    }
    return eq(ok, d);
  });
  R.run("specialize-at-fixed-point-gives-power", [] {
    const FieldPtr F = Field::create(19);
    const Moebius s = parse_moebius(F, "(-x-1)/(x-1)");
    const auto P = orbit_polynomial(generate(F, {s}));
    const FieldPtr E = extension_of_degree(F, 2);
    const auto fp = s.fixed_points(E);
    bool ok = !fp.empty();
    for (const auto& a : fp) {
      const Poly lin(E, {E->neg(a.value), E->one()});
      ok = ok && specialize(P, E, a.value) == pow(lin, 4);
    }
    return eq(ok, std::to_string(fp.size()) + " fixed points");
  });
  R.run("specialize-at-root-gives-listed-quartic", [] {
    const FieldPtr F = Field::create(19);
    const auto P = orbit_polynomial(generate(F, {parse_moebius(F, "(-x-1)/(x-1)")}));
    const Poly h = Poly::from_ints(F, {1, -6, -6, 6, 1});
    const FieldPtr E = extend(F, h);
    const Poly sp = specialize(P, E, E->root()).restrict_to(F);
    const auto expected = q19_expected();
    return eq(std::find(expected.begin(), expected.end(), sp) != expected.end(), to_string(sp));
  });
}

void examples_structfactor(Recorder& R, std::uint64_t seed) {
  R.run("q19-companion-polynomial", [] {
    const FieldPtr F = Field::create(19);
    const Poly p = frobenius_companion(parse_mat2(F, "(-x-1)/(x-1)"));
    return eq(p == parse_poly(F, "T^20 - T^19 + T + 1"), to_string(p));
  });
  R.run("q17-companion-polynomial", [] {
    const FieldPtr F = Field::create(17);
    const Poly p = frobenius_companion(parse_mat2(F, "(14x+13)/(6x+2)"));
    return eq(p == parse_poly(F, "6T^18 + 2T^17 - 14T - 13"), to_string(p));
  });
  R.run("q19-oracle-gives-five-quartics", [seed] {
    const FieldPtr F = Field::create(19);
    const auto got = factor_list(factorize(parse_poly(F, "T^20 - T^19 + T + 1"), seed));
    return eq(got == q19_expected(), join_polys(got));
  });
  R.run("q19-structured-five-quartics-in-family", [seed] {
    const FieldPtr F = Field::create(19);
    const auto sf = factor_by_orbit(parse_mat2(F, "(-x-1)/(x-1)"), seed);
    std::set<std::uint64_t> lams;
    for (const auto& f : sf.factors)
      if (!f.lambda.infinite) lams.insert(f.lambda.value.code);
    const std::set<std::uint64_t> want{13, 10, 7, 5, 4};
    const auto got = structured_list(sf);
    return eq(got == q19_expected() && lams == want && sf.family == "T^4 + 18*t*T^3 + 13*T^2 + t*T + 1", join_polys(got));
  });
  R.run("q17-structured-unit-and-six-cubics", [seed] {
    const FieldPtr F = Field::create(17);
    const auto sf = factor_by_orbit(parse_mat2(F, "(14x+13)/(6x+2)"), seed);
    const auto got = structured_list(sf);
    return eq(sf.unit == F->from_int(6) && got == q17_expected() && sf.reconstruct() == sf.input,
              "unit " + F->format(sf.unit) + ": " + join_polys(got));
  });
  R.run("q17-cubics-in-linear-family", [] {
    const FieldPtr F = Field::create(17);
    bool ok = true;
    for (const Poly& h : q17_expected()) {
      // T^3 + (8t-1)T^2 + tT + (7t+4): t is the T coefficient.
      const Elem t = h.coeff(1);
      ok = ok && h.coeff(2) == F->sub(F->mul(F->from_int(8), t), F->one()) &&
           h.coeff(0) == F->add(F->mul(F->from_int(7), t), F->from_int(4));
    }
    return eq(ok, "6 cubics");
  });
  R.run("order-q-plus-1-companion-irreducible", [] {
    const FieldPtr F = Field::create(7);
    const Poly p = frobenius_companion(parse_moebius(F, "(3x-1)/(x+3)"));
    return eq(p.degree() == 8 && is_irreducible(p), to_string(p));
  });
  R.run("quadratic-point-gives-involution", [] {
    const FieldPtr F = Field::create(5);
    const FieldPtr E = extension_of_degree(F, 2);
    const Moebius s = find_s_for_alpha(full_pgl(F), E, E->root());
    return eq(s.order() == 2, to_string(s));
  });
  R.run("cubic-point-gives-order-3", [] {
    const FieldPtr F = Field::create(5);
    const FieldPtr E = extension_of_degree(F, 3);
    const Moebius s = find_s_for_alpha(full_pgl(F), E, E->root());
    return eq(s.order() == 3, to_string(s));
  });
  R.run("q7-lambda-report", [seed] {
    const auto rep = lambda_family_report(parse_moebius(Field::create(7), "(3x-1)/(x+3)"), seed);
    std::string d;
    std::map<unsigned, std::size_t> got;
    for (const auto& r : rep.rows) {
      got[r.degree] = r.count;
      d += std::to_string(r.degree) + ":" + std::to_string(r.count) + " ";
    }
    const std::map<unsigned, std::size_t> want{{2, 1}, {4, 2}, {8, 4}};
    return eq(rep.pass && got == want && rep.total == 7, d);
  });
  R.run("q7-quadratic-lambda-gives-four-quadratics", [seed] {
    const FieldPtr F = Field::create(7);
    const RatFunc phi(parse_poly(F, "x^8 + 1", 'x'), parse_poly(F, "x^7 - x", 'x'));
    std::size_t hits = 0;
    bool ok = true;
    for (std::uint64_t c = 0; c < 7; ++c) {
      const auto fac = factorize(phi.num() - phi.den().scaled(Elem{c}), seed);
      if (fac.factors.front().first.degree() != 2) continue;
      ++hits;
      ok = ok && fac.factors.size() == 4;
      for (const auto& [h, e] : fac.factors) ok = ok && h.degree() == 2 && e == 1;
    }
    return eq(ok && hits == 1, std::to_string(hits) + " lambda");
  });
  R.run("count-for-order-q-plus-1-is-euler-phi", [seed] {
    std::string d;
    bool ok = true;
    for (std::uint32_t q : {5u, 7u, 11u}) {
      const auto s = element_of_order(Field::create(q), q + 1);
      const auto rep = lambda_family_report(*s, seed);
      std::size_t c = 0;
      for (const auto& r : rep.rows)
        if (r.degree == q + 1) c = r.count;
      ok = ok && c == euler_phi(q + 1);
      d += std::to_string(q) + ":" + std::to_string(c) + " ";
    }
    return eq(ok, d);
  });
  auto pgl3 = [seed](std::uint64_t lam) {
    const FieldPtr F = Field::create(3);
    return factor_f_lambda(full_pgl(F), Elem{lam}, seed);
  };
  R.run("pgl-2-3-invariant-generator", [] {
    const FieldPtr F = Field::create(3);
    const RatFunc phi = invariant_generator(full_pgl(F));
    const bool ok = phi.num() == parse_poly(F, "x^24+x^22+x^20+x^16+x^14+x^10+x^8+x^4+x^2+1", 'x') &&
                    phi.den() == parse_poly(F, "x^18+x^12+x^6", 'x');
    return eq(ok, to_string(phi));
  });
  // With Phi = -f/g the fibre Phi = lambda is f + lambda g; the cubic fibre is
  // lambda = 1, i.e. f + g, and the quadratic one is f - g.
  R.run("pgl-2-3-f-plus-g-all-cubics", [&] {
    const auto r = pgl3(2);
    std::vector<Poly> all;
    const FieldPtr F = Field::create(3);
    for (std::uint64_t c = 0; c < 27; ++c) {
      const Poly h(F, {Elem{c % 3}, Elem{c / 3 % 3}, Elem{c / 9}, F->one()});
      if (is_irreducible(h)) all.push_back(h);
    }
    std::sort(all.begin(), all.end());
    const auto got = factor_list(r.factorization);
    return eq(r.regular && got.size() == 8 && got == all, join_polys(got));
  });
  R.run("pgl-2-3-f-minus-g-quadratics-multiplicity-4", [&] {
    const auto r = pgl3(1);
    bool ok = !r.regular && r.factorization.factors.size() == 3;
    for (const auto& [h, e] : r.factorization.factors) ok = ok && h.degree() == 2 && e == 4;
    return eq(ok, std::to_string(r.factorization.factors.size()) + " factors");
  });
  R.run("pgl-2-3-f-six-quartics", [&] {
    const auto r = pgl3(0);
    bool ok = r.regular && r.factorization.factors.size() == 6;
    for (const auto& [h, e] : r.factorization.factors) ok = ok && h.degree() == 4 && e == 1;
    return eq(ok, std::to_string(r.factorization.factors.size()) + " factors");
  });
  R.run("q3-all-cubics-product", [seed] {
    const auto c = all_cubics_product(Field::create(3), seed);
    return eq(c.pass && c.factor_count == 8, std::to_string(c.factor_count));
  });
}

void examples_classes(Recorder& R, std::uint64_t seed) {
  R.run("q3-five-classes", [] {
    const auto cl = conjugacy_classes(Field::create(3));
    std::size_t inv = 0;
    for (const auto& c : cl)
      inv += c.kind == ClassKind::SplitInvolution || c.kind == ClassKind::NonSplitInvolution;
    return eq(cl.size() == 5 && inv == 2, std::to_string(cl.size()) + " classes");
  });
  R.run("q4-five-classes", [] {
    const auto n = conjugacy_classes(Field::create(2, 2)).size();
    return eq(n == 5, std::to_string(n));
  });
  R.run("q4-mu-gives-involution-class", [seed] {
    const auto ctx = make_class_context(Field::create(2, 2));
    const auto lc = class_of_lambda(ctx, ProjPoint::finite(ctx.mu), seed);
    return eq(!lc.ambiguous && lc.classes.size() == 1 && ctx.classes[lc.classes[0]].order == 2, "mu = " + ctx.field->format(ctx.mu));
  });
  R.run("q4-lambda-to-class-bijection", [seed] {
    const auto ctx = make_class_context(Field::create(2, 2));
    std::set<std::size_t> seen;
    for (const auto& z : projective_line(*ctx.field)) seen.insert(class_of_lambda(ctx, z, seed).classes.at(0));
    return eq(seen.size() == ctx.classes.size() && ctx.classes.size() == 5, std::to_string(seen.size()) + " classes hit");
  });
  R.run("q4-mu-pattern-six-quadratics-multiplicity-5", [seed] {
    const auto ctx = make_class_context(Field::create(2, 2));
    const auto pred = factor_pattern_of_class(ctx, ctx.mu, seed);
    const auto obs = observed_pattern(ctx, ctx.mu, seed);
    const bool ok = pred.degree == 2 && pred.count == 6 && pred.multiplicity == 5 && obs && *obs == pred;
    return eq(ok, std::to_string(pred.count) + " x deg " + std::to_string(pred.degree));
  });
  R.run("lang-solution-count-q-or-q-plus-1", [seed] {
    std::size_t n = 0, bad = 0;
    for (auto [p, m] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}}) {
      const FieldPtr F = Field::create(p, m);
      for_each_pgl(F, [&](const Moebius& s) {
        const auto L = lang_solve(s, seed);
        ++n;
        const bool ok = L.equation_ok && L.image_ok && (L.finite_count == F->card() || L.finite_count == F->card() + 1);
        bad += !ok;
      });
    }
    return eq(bad == 0, std::to_string(n) + " elements, " + std::to_string(bad) + " bad");
  });
}

}  // namespace

VerifyReport verify_worked_examples(std::uint64_t seed) {
  Recorder R("paper-examples");
  examples_moebius(R);
  examples_groups(R);
  examples_invariants(R);
  examples_structfactor(R, seed);
  examples_classes(R, seed);
  return R.take();
}

// ---------------------------------------------------------------------------

VerifyReport verify_lemmas(const FieldPtr& field, std::uint64_t seed) {
  if (field->is_extension()) raise(ErrorKind::TowerTooDeep, "lemmas suite needs a prime or power field");
  Recorder R("lemmas");
  const FieldPtr& F = field;
  const std::uint64_t q = F->card();
  const bool odd = F->characteristic() != 2;
  const Subgroup G = full_pgl(F);
  const FieldPtr E2 = extension_of_degree(F, 2);

  R.run("class-count", [&] {
    const auto cl = conjugacy_classes(F);
    return eq(cl.size() == (odd ? q + 2 : q + 1), std::to_string(cl.size()));
  });
  R.run("class-sizes-sum-to-group-order", [&] {
    std::size_t sum = 0;
    for (const auto& c : conjugacy_classes(F)) sum += c.size;
    return eq(sum == G.order(), std::to_string(sum));
  });
  R.run("centralizer-order-divisible-by-q-1-q-or-q+1", [&] {
    bool ok = true;
    std::string d;
    for (const auto& c : conjugacy_classes(F)) {
      if (c.kind == ClassKind::Identity) continue;
      const std::uint64_t z = c.centralizer_order;
      ok = ok && (z % (q - 1) == 0 || z % q == 0 || z % (q + 1) == 0);
      d += std::to_string(z) + " ";
    }
    return eq(ok, d);
  });
  R.run("involution-classes-by-fixed-point-location", [&] {
    std::size_t n = 0;
    bool ok = true;
    for (const auto& c : conjugacy_classes(F)) {
      if (c.order != 2) continue;
      ++n;
      const auto fp = c.representative.fixed_points(E2);
      bool rational = true;
      for (const auto& z : fp) rational = rational && (z.infinite || E2->in_ground(z.value));
      if (c.kind == ClassKind::SplitInvolution) ok = ok && fp.size() == 2 && rational;
      else if (c.kind == ClassKind::NonSplitInvolution) ok = ok && fp.size() == 2 && !rational;
      else ok = ok && !odd && c.kind == ClassKind::Unipotent;
    }
    return eq(ok && n == (odd ? 2u : 1u), std::to_string(n) + " involution classes");
  });
  R.run("at-most-two-fixed-points", [&] {
    std::size_t bad = 0;
    for (const auto& s : G.elements())
      if (!s.is_identity() && s.fixed_points(E2).size() > 2) ++bad;
    return eq(bad == 0, std::to_string(bad) + " bad");
  });
  R.run("frobenius-commutes-with-action", [&] {
    const auto pts = projective_line(*E2);
    std::size_t bad = 0;
    for (const auto& s : G.elements())
      for (const auto& z : pts) {
        const ProjPoint sz = s.apply(*E2, z);
        const ProjPoint zq = z.infinite ? z : ProjPoint::finite(E2->frobenius(z.value, 1));
        const ProjPoint lhs = sz.infinite ? sz : ProjPoint::finite(E2->frobenius(sz.value, 1));
        if (!(lhs == s.apply(*E2, zq))) ++bad;
      }
    return eq(bad == 0, std::to_string(bad) + " bad");
  });

  // Distinct cyclic subgroups.
  std::vector<Subgroup> cyclic;
  {
    std::set<std::vector<Moebius>> seen;
    for (const auto& s : G.elements()) {
      if (s.is_identity()) continue;
      Subgroup C = generate(F, {s});
      if (seen.insert(C.elements()).second) cyclic.push_back(std::move(C));
    }
  }
  R.run("cyclic-order-dividing-q+1-regular-on-rational-points", [&] {
    std::size_t n = 0, bad = 0;
    for (const auto& C : cyclic) {
      const auto r = C.order();
      if (r <= 2 || (q + 1) % r != 0) continue;
      ++n;
      for (const auto& o : orbit_decomposition(C, 1).orbits) bad += !o.regular;
    }
    return eq(bad == 0, std::to_string(n) + " subgroups");
  });
  R.run("cyclic-subgroups-at-most-three-nonregular-orbits", [&] {
    std::size_t bad = 0;
    for (const auto& C : cyclic) bad += nonregular_census(C).orbits.size() > 3;
    return eq(bad == 0, std::to_string(cyclic.size()) + " subgroups");
  });
  R.run("cyclic-subgroups-riemann-hurwitz", [&] {
    std::size_t bad = 0;
    for (const auto& C : cyclic) {
      const auto rh = riemann_hurwitz_audit(C);
      bad += !rh.pass || !rh.tame_inequality;
    }
    return eq(bad == 0, std::to_string(bad) + " bad");
  });
  R.run("structured-factorization-matches-oracle", [&] {
    std::size_t n = 0, bad = 0;
    for (const auto& s : G.elements()) {
      if (s.is_identity()) continue;
      const auto sf = factor_by_orbit(s.matrix(), seed);
      const auto o = factorize(sf.input, seed);
      const auto a = sf.as_factorization();
      ++n;
      bad += !(a.unit == o.unit && a.factors == o.factors);
    }
    return eq(bad == 0, std::to_string(n) + " elements, " + std::to_string(bad) + " mismatches");
  });
  R.run("quadratic-solutions-exactly-for-involutions", [&] {
    std::size_t bad = 0;
    for (const auto& s : G.elements()) {
      bool outside = false;
      for (Elem z : roots_in(frobenius_companion(s), E2, seed)) outside = outside || !E2->in_ground(z);
      const bool involution = s.order() == 2;
      // In odd characteristic every involution has such a solution; the
      // converse holds in every characteristic.
      if (outside && !involution) ++bad;
      if (odd && involution && !outside) ++bad;
    }
    return eq(bad == 0, std::to_string(bad) + " bad");
  });
  R.run("pgl-generator-separates-orbits-on-quadratic-points", [&] {
    const RatFunc phi = pgl_generator(F);
    std::optional<ProjPoint> mu;
    bool ok = true;
    for (const auto& z : projective_line(*E2)) {
      const ProjPoint v = phi.eval(*E2, z);
      const bool rational = z.infinite || E2->in_ground(z.value);
      if (rational) {
        ok = ok && v.infinite;
      } else {
        ok = ok && !v.infinite && E2->in_ground(v.value);
        if (!mu) mu = v;
        ok = ok && v == *mu;
      }
    }
    return eq(ok, mu ? "mu = " + format_point(*E2, *mu) : "no mu");
  });
  if (q + 1 <= 16) {
    R.run("order-q+1-lambda-report", [&] {
      const auto s = element_of_order(F, q + 1);
      const auto rep = lambda_family_report(*s, seed);
      std::size_t c = 0;
      for (const auto& r : rep.rows)
        if (r.degree == q + 1) c = r.count;
      return eq(rep.pass && c == euler_phi(q + 1), std::to_string(c));
    });
  }
  if (q <= 8) {
    R.run("lambda-class-correspondence", [&] {
      const auto ctx = make_class_context(F);
      std::set<std::size_t> hit;
      bool ok = true;
      std::size_t patterns = 0;
      for (const auto& z : projective_line(*F)) {
        const auto lc = class_of_lambda(ctx, z, seed);
        for (std::size_t i : lc.classes) hit.insert(i);
        if (z.infinite) continue;
        const auto pred = factor_pattern_of_class(ctx, z.value, seed);
        const auto obs = observed_pattern(ctx, z.value, seed);
        ok = ok && obs && *obs == pred;
        ++patterns;
      }
      return eq(ok && hit.size() == ctx.classes.size(), std::to_string(hit.size()) + " classes, " + std::to_string(patterns) + " patterns");
    });
  }
  R.run("lang-equation-per-class", [&] {
    std::size_t n = 0, bad = 0, skipped = 0;
    for (const auto& c : conjugacy_classes(F)) {
      std::uint64_t Q = 1;
      bool fits = true;
      for (std::uint64_t i = 0; i < c.order && fits; ++i) {
        if (Q > limits().enumeration_cap / q) fits = false;
        Q *= q;
      }
      if (!fits) {
        ++skipped;
        continue;
      }
      const auto L = lang_solve(c.representative, seed);
      ++n;
      bad += !(L.equation_ok && L.image_ok && (L.finite_count == q || L.finite_count == q + 1));
    }
    return eq(bad == 0, std::to_string(n) + " solved, " + std::to_string(skipped) + " beyond cap");
  });
  return R.take();
}

}  // namespace orbitpoly
