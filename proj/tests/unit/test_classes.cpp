#include <doctest.h>

#include <map>
#include <set>

#include "orbitpoly/classes.hpp"
#include "orbitpoly/error.hpp"
#include "orbitpoly/group.hpp"
#include "orbitpoly/tower.hpp"

using namespace orbitpoly;

namespace {

FieldPtr field_of(std::uint32_t q) {
  switch (q) {
    case 4: return Field::create(2, 2);
    case 8: return Field::create(2, 3);
    case 9: return Field::create(3, 2);
    default: return Field::create(q);
  }
}

bool is_involution_class(ClassKind k) {
  return k == ClassKind::SplitInvolution || k == ClassKind::NonSplitInvolution;
}

}  // namespace

TEST_SUITE("classes") {
  TEST_CASE("class counts and sizes") {
    const std::map<std::uint32_t, std::size_t> want{{2, 3}, {3, 5}, {4, 5}, {5, 7}, {7, 9}, {8, 9}, {9, 11}};
    for (const auto& [q, n] : want) {
      CAPTURE(q);
      const auto cl = conjugacy_classes(field_of(q));
      CHECK(cl.size() == n);
      std::size_t total = 0, identity = 0, inv = 0;
      for (const auto& c : cl) {
        total += c.size;
        CHECK(c.size * c.centralizer_order == q * q * q - q);
        CHECK(c.representative.order() == c.order);
        identity += c.kind == ClassKind::Identity;
        inv += is_involution_class(c.kind);
        if (c.kind != ClassKind::Identity) {
          const auto z = c.centralizer_order;
          CHECK((z % (q - 1) == 0 || z % q == 0 || z % (q + 1) == 0));
        }
      }
      CHECK(total == q * q * q - q);
      CHECK(identity == 1);
      CHECK(inv == (q % 2 ? 2u : 0u));
      for (std::size_t i = 1; i < cl.size(); ++i)
        CHECK(std::make_pair(cl[i - 1].order, cl[i - 1].representative) < std::make_pair(cl[i].order, cl[i].representative));
    }
  }

  TEST_CASE("involution classes by fixed-point location") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
      const FieldPtr F = field_of(q);
      const auto cl = conjugacy_classes(F);
      for_each_pgl(F, [&](const Moebius& s) {
        if (s.order() != 2) return;
        const auto& c = cl[class_index(cl, s)];
        const bool rational = s.fixed_points(1).size() == 2;
        CHECK(c.kind == (rational ? ClassKind::SplitInvolution : ClassKind::NonSplitInvolution));
        CHECK(s.fixed_points(2).size() == 2);
      });
    }
    for (std::uint32_t q : {2u, 4u, 8u}) {
      const FieldPtr F = field_of(q);
      const auto cl = conjugacy_classes(F);
      for_each_pgl(F, [&](const Moebius& s) {
        if (s.order() == 2) CHECK(cl[class_index(cl, s)].kind == ClassKind::Unipotent);
      });
    }
  }

  TEST_CASE("class index is a conjugation invariant") {
    const FieldPtr F = field_of(5);
    const auto cl = conjugacy_classes(F);
    const Subgroup G = full_pgl(F);
    for (std::size_t i = 0; i < G.order(); i += 11)
      for (std::size_t j = 0; j < G.order(); j += 17) {
        const Moebius& s = G.elements()[i];
        const Moebius& u = G.elements()[j];
        CHECK(class_index(cl, s) == class_index(cl, u.inverse().compose(s).compose(u)));
      }
  }

  TEST_CASE("lambda infinity is the identity class") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
      const auto ctx = make_class_context(field_of(q));
      const auto lc = class_of_lambda(ctx, ProjPoint::infinity());
      REQUIRE(lc.classes.size() == 1);
      CHECK(ctx.classes[lc.classes[0]].kind == ClassKind::Identity);
      CHECK(!lc.ambiguous);
    }
  }

  TEST_CASE("mu gives the involution classes") {
    const auto c4 = make_class_context(field_of(4));
    CHECK(c4.mu == Elem{0});
    const auto l4 = class_of_lambda(c4, ProjPoint::finite(c4.mu));
    REQUIRE(l4.classes.size() == 1);
    CHECK(!l4.ambiguous);
    CHECK(c4.classes[l4.classes[0]].order == 2);
    for (std::uint32_t q : {3u, 5u, 7u}) {
      const auto ctx = make_class_context(field_of(q));
      const auto lc = class_of_lambda(ctx, ProjPoint::finite(ctx.mu));
      CHECK(lc.ambiguous);
      REQUIRE(lc.classes.size() == 2);
      for (auto i : lc.classes) CHECK(is_involution_class(ctx.classes[i].kind));
    }
  }

  TEST_CASE("points correspond to classes") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
      CAPTURE(q);
      const auto ctx = make_class_context(field_of(q));
      std::multiset<std::size_t> hit;
      for (std::uint64_t c = 0; c < q; ++c) {
        if (Elem{c} == ctx.mu) continue;
        const auto lc = class_of_lambda(ctx, ProjPoint::finite(Elem{c}));
        REQUIRE(lc.classes.size() == 1);
        CHECK(!lc.ambiguous);
        hit.insert(lc.classes[0]);
      }
      std::multiset<std::size_t> want;
      for (std::size_t i = 0; i < ctx.classes.size(); ++i)
        if (ctx.classes[i].order > 2 || (ctx.classes[i].kind == ClassKind::Unipotent && q % 2))
          want.insert(i);
      CHECK(hit == want);
    }
  }

  TEST_CASE("predicted factor patterns") {
    const auto c4 = make_class_context(field_of(4));
    std::size_t quintic = 0;
    for (std::uint64_t c = 0; c < 4; ++c) {
      const auto p = factor_pattern_of_class(c4, Elem{c});
      const auto o = observed_pattern(c4, Elem{c});
      REQUIRE(o.has_value());
      CHECK(p == *o);
      if (Elem{c} == c4.mu) CHECK(p == FactorPattern{2, 6, 5, false});
      if (p.degree == 5) {
        ++quintic;
        CHECK(p == FactorPattern{5, 12, 1, false});
      }
    }
    CHECK(quintic == 2);
    const auto c2 = make_class_context(field_of(2));
    bool cubic = false;
    for (std::uint64_t c = 0; c < 2; ++c) {
      const auto p = factor_pattern_of_class(c2, Elem{c});
      if (p.degree == 3) {
        cubic = true;
        CHECK(p == FactorPattern{3, 2, 1, false});
      }
    }
    CHECK(cubic);
    for (std::uint32_t q : {3u, 5u}) {
      const auto ctx = make_class_context(field_of(q));
      for (std::uint64_t c = 0; c < q; ++c) {
        const auto p = factor_pattern_of_class(ctx, Elem{c});
        const auto o = observed_pattern(ctx, Elem{c});
        REQUIRE(o.has_value());
        CHECK(p.degree == o->degree);
        CHECK(p.count == o->count);
        CHECK(p.multiplicity == o->multiplicity);
        CHECK(p.ambiguous == (Elem{c} == ctx.mu && q % 2 == 1));
      }
    }
  }

  TEST_CASE("Lang solutions") {
    const FieldPtr F3 = field_of(3);
    const auto id = lang_solve(Moebius::identity(F3));
    CHECK(id.r == 1);
    CHECK(id.equation_ok);
    CHECK(id.image_ok);
    CHECK(id.xs.size() == 4);
    for (std::uint32_t q : {2u, 3u, 4u}) {
      const FieldPtr F = field_of(q);
      for_each_pgl(F, [&](const Moebius& s) {
        CAPTURE(to_string(s));
        const auto L = lang_solve(s);
        CHECK(L.r == s.order());
        CHECK(L.equation_ok);
        CHECK(L.image_ok);
        CHECK(L.xs.size() == q + 1);
        CHECK((L.finite_count == q || L.finite_count == q + 1));
        // s = sigma(t)^-1 t, recomputed here.
        const Moebius lhs = L.t.frobenius(1).inverse().compose(L.t);
        CHECK(lhs == s.lift(L.ext));
        for (const auto& z : L.xs) {
          const ProjPoint img = s.apply(*L.ext, z);
          const ProjPoint frob = z.infinite ? z : ProjPoint::finite(L.ext->frobenius(z.value, 1));
          CHECK(img == frob);
        }
      });
    }
  }

  TEST_CASE("Lang at a larger order") {
    const FieldPtr F = field_of(5);
    std::size_t n = 0;
    for_each_pgl(F, [&](const Moebius& s) {
      if (s.order() != 6 || n++ > 3) return;
      const auto L = lang_solve(s, 5);
      CHECK(L.r == 6);
      CHECK(L.equation_ok);
      CHECK(L.image_ok);
      CHECK(!L.used_exhaustive);
    });
    CHECK(n > 0);
    CHECK_THROWS_AS(lang_solve(parse_moebius(field_of(7), "(3x-1)/(x+3)")), Error);
  }
}
