#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "orbitpoly/config.hpp"
#include "orbitpoly/error.hpp"
#include "orbitpoly/factor.hpp"
#include "orbitpoly/field.hpp"
#include "orbitpoly/tower.hpp"

using namespace orbitpoly;

namespace {

std::vector<FieldPtr> small_fields() {
  return {Field::create(2), Field::create(3), Field::create(5), Field::create(7), Field::create(2, 2),
          Field::create(2, 3), Field::create(3, 2), Field::create(2, 4), Field::create(5, 2), Field::create(3, 4)};
}

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("prime field construction") {
    const FieldPtr F2 = Field::create(2);
    CHECK(F2->card() == 2);
    CHECK(F2->is_prime());
    CHECK(F2->modulus().empty());
    CHECK_THROWS_AS(Field::create(4), Error);
    try {
      Field::create(4);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonPrime);
    }
  }

  TEST_CASE("F_9 modulus is the least irreducible quadratic") {
    // Oracle: scan monic quadratics over F_3 with c0 as the least significant
    // digit and keep the first one without roots.
    std::vector<std::int64_t> want;
    for (int code = 0; code < 9 && want.empty(); ++code) {
      const int c0 = code % 3, c1 = code / 3;
      bool root = false;
      for (int x = 0; x < 3; ++x) root = root || (x * x + c1 * x + c0) % 3 == 0;
      if (!root) want = {c0, c1, 1};
    }
    const FieldPtr F9 = Field::create(3, 2);
    REQUIRE(F9->modulus().size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(static_cast<std::int64_t>(F9->modulus()[i].code) == want[i]);
    // Frozen: T^2 + 1.
    CHECK(want == std::vector<std::int64_t>{1, 0, 1});
  }

  TEST_CASE("F_8 and F_16 moduli are frozen") {
    const auto m8 = Field::create(2, 3)->modulus();
    CHECK(std::vector<std::uint64_t>{m8[0].code, m8[1].code, m8[2].code, m8[3].code} == std::vector<std::uint64_t>{1, 1, 0, 1});
    const auto m16 = Field::create(2, 4)->modulus();
    CHECK(std::vector<std::uint64_t>{m16[0].code, m16[1].code, m16[2].code, m16[3].code, m16[4].code} ==
          std::vector<std::uint64_t>{1, 1, 0, 0, 1});
  }

  TEST_CASE("creation is deterministic and interned") {
    CHECK(Field::create(5, 2) == Field::create(5, 2));
    CHECK(same_field(*Field::create(3, 3), *Field::create(3, 3)));
  }

  TEST_CASE("size cap") {
    ScopedLimits lim({1 << 10, 1 << 16});
    CHECK_THROWS_AS(Field::create(2, 11), Error);
    CHECK_NOTHROW(Field::create(2, 10));
  }

  TEST_CASE("prime field arithmetic matches integer arithmetic") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      const FieldPtr F = Field::create(static_cast<std::uint32_t>(p));
      for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b) {
          const Elem x{static_cast<std::uint64_t>(a)}, y{static_cast<std::uint64_t>(b)};
          CHECK(F->add(x, y).code == static_cast<std::uint64_t>((a + b) % p));
          CHECK(F->sub(x, y).code == static_cast<std::uint64_t>(oracle::mod(a - b, p)));
          CHECK(F->mul(x, y).code == static_cast<std::uint64_t>(a * b % p));
          if (b) CHECK(F->div(x, y).code == static_cast<std::uint64_t>(a * oracle::inv_mod(b, p) % p));
        }
    }
    const FieldPtr F7 = Field::create(7);
    CHECK(F7->mul(Elem{3}, Elem{5}) == F7->one());
    CHECK(F7->from_int(-1).code == 6);
  }

  TEST_CASE("F_9 arithmetic matches Gaussian integers mod 3") {
    // Oracle: (a + b i)(c + d i) with i^2 = -1.
    const FieldPtr F9 = Field::create(3, 2);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) {
            const Elem x{static_cast<std::uint64_t>(a + 3 * b)}, y{static_cast<std::uint64_t>(c + 3 * d)};
            const int re = static_cast<int>(oracle::mod(a * c - b * d, 3));
            const int im = static_cast<int>(oracle::mod(a * d + b * c, 3));
            CHECK(F9->mul(x, y).code == static_cast<std::uint64_t>(re + 3 * im));
            CHECK(F9->add(x, y).code == static_cast<std::uint64_t>((a + c) % 3 + 3 * ((b + d) % 3)));
          }
    const Elem i = F9->root();
    CHECK(F9->mul(i, i) == F9->from_int(-1));
  }

  TEST_CASE("field axioms on small fields") {
    for (const FieldPtr& F : small_fields()) {
      CAPTURE(F->name());
      const std::uint64_t q = F->card();
      CHECK(F->inv(F->one()) == F->one());
      for (std::uint64_t a = 0; a < q; ++a) {
        const Elem x{a};
        CHECK(F->add(x, F->neg(x)).code == 0);
        if (a) {
          CHECK(F->mul(x, F->inv(x)) == F->one());
          CHECK(F->pow(x, q - 1) == F->one());
        }
        for (std::uint64_t b = 0; b < q; b += 3) {
          const Elem y{b};
          CHECK(F->mul(x, y) == F->mul(y, x));
          const Elem z{(a * 7 + b) % q};
          CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
        }
      }
      CHECK_THROWS_AS(F->inv(F->zero()), Error);
    }
  }

  TEST_CASE("primitive element generates the multiplicative group") {
    for (const FieldPtr& F : small_fields()) {
      const Elem g = F->primitive_element();
      std::set<std::uint64_t> seen;
      Elem x = F->one();
      for (std::uint64_t i = 0; i + 1 < F->card(); ++i) {
        seen.insert(x.code);
        x = F->mul(x, g);
      }
      CHECK(seen.size() == F->card() - 1);
    }
  }

  TEST_CASE("element text round trip") {
    const FieldPtr F9 = Field::create(3, 2);
    CHECK(F9->format(Elem{5}) == "[2,1]");
    CHECK(F9->parse("[2,1]") == Elem{5});
    const FieldPtr E = extension_of_degree(F9, 2);
    for (std::uint64_t c = 0; c < E->card(); c += 7) CHECK(E->parse(E->format(Elem{c})) == Elem{c});
    CHECK_THROWS_AS(Field::create(5)->parse("[1,2]"), Error);
  }

  TEST_CASE("extend") {
    const FieldPtr F3 = Field::create(3);
    const FieldPtr F9 = extend(F3, parse_poly(F3, "T^2 + 1"));
    CHECK(F9->card() == 9);
    CHECK(F9->mul(F9->root(), F9->root()) == F9->from_int(-1));
    const FieldPtr F2 = Field::create(2);
    CHECK(extend(F2, parse_poly(F2, "T^2 + T + 1"))->card() == 4);
    // Degree one returns the base.
    CHECK(extend(F3, parse_poly(F3, "T + 2")) == F3);
    CHECK_THROWS_AS(extend(Field::create(5), parse_poly(Field::create(5), "T^2 + 1")), Error);
    const FieldPtr P9 = Field::create(3, 2);
    const FieldPtr E = extend(P9, least_irreducible(P9, 2));
    CHECK(E->card() == 81);
    CHECK_THROWS_AS(extend(E, least_irreducible(E, 2)), Error);
  }

  TEST_CASE("frobenius") {
    for (const FieldPtr& F : {Field::create(3), Field::create(2, 2), Field::create(5)}) {
      for (unsigned k : {2u, 3u}) {
        const FieldPtr E = extension_of_degree(F, k);
        const std::uint64_t q = F->card();
        for (std::uint64_t c = 0; c < E->card(); ++c) {
          const Elem x{c};
          CHECK(E->frobenius(x, 1) == E->pow(x, q));
          CHECK(E->frobenius(x, k) == x);
          if (c < q) CHECK(E->frobenius(x, 1) == x);
        }
      }
    }
    // The image of a root of a cubic is again a root.
    const FieldPtr F5 = Field::create(5);
    const Poly h = least_irreducible(F5, 3);
    const FieldPtr E = extend(F5, h);
    const Elem a1 = E->frobenius(E->root(), 1);
    CHECK(h.eval_in(*E, a1).code == 0);
    CHECK(a1 != E->root());
  }

  TEST_CASE("absolute trace and squares") {
    const FieldPtr F4 = Field::create(2, 2);
    std::size_t zero_trace = 0;
    for (std::uint64_t c = 0; c < 4; ++c) zero_trace += F4->absolute_trace(Elem{c}) == 0;
    CHECK(zero_trace == 2);
    const FieldPtr F9 = Field::create(3, 2);
    std::size_t squares = 0;
    for (std::uint64_t c = 1; c < 9; ++c) squares += F9->is_square(Elem{c});
    CHECK(squares == 4);
  }

  TEST_CASE("minimal polynomial") {
    const FieldPtr F3 = Field::create(3);
    const FieldPtr F9 = extend(F3, parse_poly(F3, "T^2 + 1"));
    // Oracle: (T - i)(T - i^3) expanded by hand is T^2 + 1.
    CHECK(minimal_poly(F9, F9->root(), F3) == parse_poly(F3, "T^2 + 1"));
    CHECK(minimal_poly(F9, F9->from_int(2), F3) == parse_poly(F3, "T + 1"));
    for (const FieldPtr& F : {Field::create(2), Field::create(3), Field::create(2, 2)}) {
      const FieldPtr E = extension_of_degree(F, 3);
      for (std::uint64_t c = 0; c < E->card(); ++c) {
        const Poly mp = minimal_poly(E, Elem{c}, F);
        CHECK(mp.is_monic());
        CHECK(oracle::trial_irreducible(mp));
        CHECK(mp.eval_in(*E, Elem{c}).code == 0);
        CHECK(static_cast<unsigned>(mp.degree()) == frobenius_degree(*E, Elem{c}));
        const Poly t = Poly::variable(F);
        CHECK((pow(t, oracle::ipow(F->card(), static_cast<unsigned>(mp.degree()))) - t) % mp == Poly(F));
      }
    }
  }

  TEST_CASE("arithmetic extension used only for arithmetic can exceed the enumeration cap") {
    const FieldPtr F13 = Field::create(13);
    const FieldPtr E = extension_of_degree(F13, 14);
    const Elem y = E->root();
    CHECK(E->frobenius(y, 14) == y);
    CHECK(E->frobenius(y, 1) == E->pow(y, 13));
  }

  TEST_CASE("helpers") {
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(prime_power_decompose(81) == std::pair<std::uint32_t, unsigned>{3, 4});
    CHECK_THROWS_AS(checked_pow(2, 70, kMaxFieldCard), Error);
  }
}
