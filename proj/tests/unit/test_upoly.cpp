#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbitpoly/error.hpp"
#include "orbitpoly/factor.hpp"
#include "orbitpoly/tower.hpp"

using namespace orbitpoly;

namespace {

std::map<Poly, unsigned> as_map(const Factorization& f) {
  std::map<Poly, unsigned> m;
  for (const auto& [h, e] : f.factors) m[h] += e;
  return m;
}

Poly random_poly(const FieldPtr& F, int deg, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
  for (auto& e : c) e = Elem{rng() % F->card()};
  if (c.back().code == 0) c.back() = F->one();
  return Poly(F, std::move(c));
}

}  // namespace

TEST_SUITE("upoly") {
  TEST_CASE("basic arithmetic") {
    const FieldPtr F = Field::create(5);
    const Poly t = Poly::variable(F);
    const auto [q, r] = divrem(pow(t, 3), t);
    CHECK(q == pow(t, 2));
    CHECK(r.is_zero());
    const Poly f = parse_poly(F, "3T^2 + 1");
    CHECK(gcd(f, Poly(F)) == f.monic());
    CHECK(Poly(F).degree() < 0);
    CHECK(f.derivative() == parse_poly(F, "T"));
    CHECK(to_string(parse_poly(F, "T^4 - T + 2")) == "T^4 + 4*T + 2");
    CHECK(parse_poly(F, "-T^2 - 1") == parse_poly(F, "4T^2 + 4"));
    CHECK_THROWS_AS(parse_poly(F, "T^^2"), Error);
    CHECK_THROWS_AS(divrem(f, Poly(F)), Error);
  }

  TEST_CASE("evaluation in an extension") {
    const FieldPtr F3 = Field::create(3);
    const FieldPtr F9 = extend(F3, parse_poly(F3, "T^2 + 1"));
    CHECK(parse_poly(F3, "T^2 + 1").eval_in(*F9, F9->root()).code == 0);
  }

  TEST_CASE("division identity and gcd on random inputs") {
    std::mt19937_64 rng(7);
    for (const FieldPtr& F : {Field::create(2), Field::create(7), Field::create(3, 2)}) {
      for (int i = 0; i < 40; ++i) {
        const Poly a = random_poly(F, 1 + static_cast<int>(rng() % 12), rng);
        const Poly b = random_poly(F, 1 + static_cast<int>(rng() % 6), rng);
        const auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        const auto eg = ext_gcd(a, b);
        CHECK(eg.u * a + eg.v * b == eg.g);
        CHECK(eg.g == gcd(a, b));
        CHECK((a % gcd(a, b)).is_zero());
      }
    }
  }

  TEST_CASE("irreducibility matches trial division") {
    CHECK(is_irreducible(parse_poly(Field::create(3), "T^2 + 1")));
    CHECK_FALSE(is_irreducible(parse_poly(Field::create(5), "T^2 + 1")));
    CHECK(is_irreducible(parse_poly(Field::create(5), "T + 3")));
    for (const FieldPtr& F : {Field::create(2), Field::create(3), Field::create(2, 2)}) {
      for (unsigned n = 1; n <= (F->card() == 2 ? 6u : 4u); ++n) {
        std::uint64_t count = 0;
        for (const Poly& f : oracle::monic_of_degree(F, n)) {
          const bool irr = is_irreducible(f);
          CHECK(irr == oracle::trial_irreducible(f));
          count += irr;
        }
        CHECK(count == oracle::irreducible_count(F->card(), n));
      }
    }
  }

  TEST_CASE("factorization matches trial division") {
    std::mt19937_64 rng(11);
    for (const FieldPtr& F : {Field::create(2), Field::create(3), Field::create(5), Field::create(2, 2), Field::create(3, 2)}) {
      for (int i = 0; i < 30; ++i) {
        // Trial division is exponential in the largest factor degree; keep inputs near degree 10.
        Poly f = random_poly(F, 1 + static_cast<int>(rng() % (F->card() > 5 ? 6 : 9)), rng);
        if (i % 3 == 0) f = random_poly(F, 1 + static_cast<int>(rng() % 4), rng);
        if (i % 3 == 0) f = f * f * random_poly(F, 2, rng);
        const Factorization fac = factorize(f, static_cast<std::uint64_t>(i));
        CHECK(fac.expand(F) == f);
        CHECK(as_map(fac) == oracle::trial_factor(f));
        for (std::size_t k = 1; k < fac.factors.size(); ++k) CHECK(fac.factors[k - 1].first < fac.factors[k].first);
      }
    }
  }

  TEST_CASE("T^q - T splits into all linears") {
    for (const FieldPtr& F : {Field::create(7), Field::create(2, 3)}) {
      const Poly t = Poly::variable(F);
      const Factorization fac = factorize(pow(t, F->card()) - t);
      CHECK(fac.unit == F->one());
      CHECK(fac.factors.size() == F->card());
      for (const auto& [h, e] : fac.factors) CHECK((h.degree() == 1 && e == 1));
    }
  }

  TEST_CASE("factorization is seed independent") {
    const FieldPtr F = Field::create(19);
    const Poly f = parse_poly(F, "T^20 - T^19 + T + 1");
    const auto a = factorize(f, 0), b = factorize(f, 12345);
    CHECK(a.factors == b.factors);
  }

  TEST_CASE("squarefree decomposition and distinct degree") {
    const FieldPtr F = Field::create(3);
    const Poly a = parse_poly(F, "T^2 + 1"), b = parse_poly(F, "T + 1");
    const Poly f = pow(a, 3) * pow(b, 2) * parse_poly(F, "T^3 + 2T + 1");
    const auto sq = squarefree_decomposition(f);
    Poly back = Poly::constant(F, F->one());
    for (const auto& [g, e] : sq) back *= pow(g, e);
    CHECK(back == f.monic());
    const auto dd = distinct_degree(parse_poly(F, "T^2 + 1") * parse_poly(F, "T^3 + 2T + 1") * parse_poly(F, "T"));
    std::map<unsigned, int> degs;
    for (const auto& [g, d] : dd) degs[d] = g.degree();
    CHECK(degs == std::map<unsigned, int>{{1, 1}, {2, 2}, {3, 3}});
  }

  TEST_CASE("roots") {
    const FieldPtr F3 = Field::create(3);
    const FieldPtr F9 = Field::create(3, 2);
    const Poly f = parse_poly(F3, "T^2 + 1");
    const auto r = roots_in(f, F9);
    CHECK(r == oracle::brute_roots(f, *F9));
    CHECK(r.size() == 2);
    CHECK(roots_in(least_irreducible(F3, 3), F9).empty());
    const FieldPtr F7 = Field::create(7);
    CHECK(roots_in(parse_poly(F7, "T - 4"), F7) == std::vector<Elem>{Elem{4}});
    std::mt19937_64 rng(3);
    const FieldPtr E = extension_of_degree(Field::create(2, 2), 3);
    for (int i = 0; i < 20; ++i) {
      const Poly g = random_poly(Field::create(2, 2), 2 + static_cast<int>(rng() % 8), rng);
      CHECK(roots_in(g, E, static_cast<std::uint64_t>(i)) == oracle::brute_roots(g, *E));
    }
  }

  TEST_CASE("one irreducible factor divides") {
    const FieldPtr F = Field::create(17);
    const Poly f = parse_poly(F, "6T^18 + 2T^17 - 14T - 13");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Poly h = one_irreducible_factor(f, seed);
      CHECK(h.degree() == 3);
      CHECK((f % h).is_zero());
      CHECK(is_irreducible(h));
    }
  }

  TEST_CASE("mixed fields are rejected") {
    CHECK_THROWS_AS(parse_poly(Field::create(3), "T") + parse_poly(Field::create(5), "T"), Error);
  }
}
