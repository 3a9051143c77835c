#include "orbitpoly/group.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_set>

#include "orbitpoly/config.hpp"
#include "orbitpoly/error.hpp"
#include "orbitpoly/tower.hpp"

namespace orbitpoly {

namespace {

std::uint64_t pgl_order(std::uint64_t q) { return q * (q - 1) * (q + 1); }

void require_pgl_within_cap(const Field& F) {
  const std::uint64_t q = F.card();
  if (q > (1u << 21) || pgl_order(q) > limits().enumeration_cap)
    raise(ErrorKind::SizeCapExceeded, "|PGL(2," + std::to_string(q) + ")| exceeds the enumeration cap");
}

std::size_t point_index(const Field& F, const ProjPoint& z) {
  return z.infinite ? static_cast<std::size_t>(F.card()) : static_cast<std::size_t>(z.value.code);
}

}  // namespace

Subgroup::Subgroup(FieldPtr field, std::vector<Moebius> sorted_elements)
    : field_(std::move(field)), elems_(std::move(sorted_elements)) {}

bool Subgroup::contains(const Moebius& s) const { return std::binary_search(elems_.begin(), elems_.end(), s); }

void Subgroup::validate() const {
  ensure(std::is_sorted(elems_.begin(), elems_.end()), "subgroup elements not sorted");
  ensure(contains(Moebius::identity(field_)), "subgroup lacks the identity");
  const std::uint64_t q = field_->card();
  ensure(pgl_order(q) % elems_.size() == 0, "subgroup order does not divide q^3 - q");
  for (const auto& x : elems_) {
    ensure(contains(x.inverse()), "subgroup not closed under inverse");
    for (const auto& y : elems_) ensure(contains(x.compose(y)), "subgroup not closed under composition");
  }
}

Subgroup generate(const FieldPtr& field, const std::vector<Moebius>& gens) {
  for (const auto& g : gens) require_same_field(*field, *g.field(), "generate");
  const std::uint64_t bound = std::min<std::uint64_t>(pgl_order(field->card()), limits().group_cap);
  std::unordered_set<Moebius, MoebiusHash> seen;
  std::deque<Moebius> queue;
  const Moebius id = Moebius::identity(field);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Moebius x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Moebius y = x.compose(g);
      if (seen.insert(y).second) {
        if (seen.size() > bound)
          raise(seen.size() > pgl_order(field->card()) ? ErrorKind::InvariantViolation : ErrorKind::SizeCapExceeded,
                "subgroup closure exceeded " + std::to_string(bound) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Moebius> elems(seen.begin(), seen.end());
  std::sort(elems.begin(), elems.end());
  return Subgroup(field, std::move(elems));
}

void for_each_pgl(const FieldPtr& field, const std::function<void(const Moebius&)>& fn) {
  require_pgl_within_cap(*field);
  const Field& F = *field;
  const std::uint64_t q = F.card();
  // Normalized forms: (0, 1, c, d) with c != 0, and (1, b, c, d) with d != bc.
  for (std::uint64_t b = 0; b < q; ++b)
    for (std::uint64_t c = 0; c < q; ++c) {
      const Elem bc = F.mul(Elem{b}, Elem{c});
      for (std::uint64_t d = 0; d < q; ++d)
        if (Elem{d} != bc) fn(Moebius(field, F.one(), Elem{b}, Elem{c}, Elem{d}));
    }
  for (std::uint64_t c = 1; c < q; ++c)
    for (std::uint64_t d = 0; d < q; ++d) fn(Moebius(field, F.zero(), F.one(), Elem{c}, Elem{d}));
}

Subgroup full_pgl(const FieldPtr& field) {
  std::vector<Moebius> elems;
  elems.reserve(pgl_order(field->card()));
  for_each_pgl(field, [&](const Moebius& m) { elems.push_back(m); });
  std::sort(elems.begin(), elems.end());
  ensure(elems.size() == pgl_order(field->card()), "PGL enumeration has the wrong size");
  return Subgroup(field, std::move(elems));
}

std::vector<ProjPoint> projective_line(const Field& ext) {
  if (ext.card() + 1 > limits().enumeration_cap)
    raise(ErrorKind::SizeCapExceeded, "P^1 over " + ext.name() + " exceeds the enumeration cap");
  std::vector<ProjPoint> pts;
  pts.reserve(ext.card() + 1);
  for (std::uint64_t c = 0; c < ext.card(); ++c) pts.push_back(ProjPoint::finite(Elem{c}));
  pts.push_back(ProjPoint::infinity());
  return pts;
}

std::vector<ProjPoint> orbit_of(const Subgroup& G, const Field& ext, const ProjPoint& z) {
  std::vector<ProjPoint> pts;
  pts.reserve(G.order());
  for (const auto& g : G.elements()) pts.push_back(g.apply(ext, z));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Subgroup stabilizer_of(const Subgroup& G, const Field& ext, const ProjPoint& z) {
  std::vector<Moebius> st;
  for (const auto& g : G.elements())
    if (g.apply(ext, z) == z) st.push_back(g);
  return Subgroup(G.field(), std::move(st));
}

OrbitReport orbit_decomposition(const Subgroup& G, unsigned k) {
  FieldPtr ext = extension_of_degree(G.field(), k);
  const auto points = projective_line(*ext);
  std::vector<char> seen(points.size(), 0);
  OrbitReport report{ext, k, {}};
  for (const auto& z : points) {
    if (seen[point_index(*ext, z)]) continue;
    auto orb = orbit_of(G, *ext, z);
    for (const auto& w : orb) seen[point_index(*ext, w)] = 1;
    Subgroup stab = stabilizer_of(G, *ext, orb.front());
    ensure(orb.size() * stab.order() == G.order(), "orbit-stabilizer identity failed");
    const bool regular = orb.size() == G.order();
    report.orbits.push_back({std::move(orb), std::move(stab), regular});
  }
  std::sort(report.orbits.begin(), report.orbits.end(), [](const Orbit& x, const Orbit& y) {
    if (x.points.size() != y.points.size()) return x.points.size() < y.points.size();
    return x.points.front() < y.points.front();
  });
  return report;
}

Census nonregular_census(const Subgroup& G) {
  FieldPtr ext = extension_of_degree(G.field(), 2);
  std::vector<ProjPoint> fixed;
  for (const auto& g : G.elements()) {
    if (g.is_identity()) continue;
    for (const auto& z : g.fixed_points(ext)) fixed.push_back(z);
  }
  std::sort(fixed.begin(), fixed.end());
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
  Census census{ext, {}};
  std::vector<char> used(fixed.size(), 0);
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (used[i]) continue;
    auto orb = orbit_of(G, *ext, fixed[i]);
    for (const auto& w : orb) {
      auto it = std::lower_bound(fixed.begin(), fixed.end(), w);
      ensure(it != fixed.end() && *it == w, "orbit of a fixed point left the fixed-point set");
      used[static_cast<std::size_t>(it - fixed.begin())] = 1;
    }
    const std::size_t size = orb.size();
    ensure(G.order() % size == 0, "orbit size does not divide |G|");
    census.orbits.push_back({std::move(orb), size, G.order() / size});
  }
  std::sort(census.orbits.begin(), census.orbits.end(), [](const NonRegularOrbit& x, const NonRegularOrbit& y) {
    if (x.size != y.size) return x.size < y.size;
    return x.points.front() < y.points.front();
  });
  return census;
}

RiemannHurwitz riemann_hurwitz_audit(const Subgroup& G) {
  const std::uint64_t p = G.field()->characteristic();
  RiemannHurwitz rh{0, 0, 2 * G.order() - 2, false, false};
  for (const auto& orb : nonregular_census(G).orbits) {
    const std::uint64_t e = orb.stabilizer_order;
    std::uint64_t delta = e - 1;
    if (e % p == 0) {
      std::uint64_t qp = 1;
      for (std::uint64_t r = e; r % p == 0; r /= p) qp *= p;
      delta = e + qp - 2;
    }
    rh.different_sum += orb.size * delta;
    rh.tame_sum += orb.size * (e - 1);
  }
  rh.pass = rh.different_sum == rh.expected;
  rh.tame_inequality = rh.expected >= rh.tame_sum;
  return rh;
}

Subgroup centralizer(const Subgroup& G, const Moebius& s) {
  if (!G.contains(s)) raise(ErrorKind::NotInGroup, to_string(s) + " is not in the group");
  std::vector<Moebius> c;
  for (const auto& g : G.elements())
    if (g.compose(s) == s.compose(g)) c.push_back(g);
  return Subgroup(G.field(), std::move(c));
}

namespace {

// {x I + y A} together with, for trace-zero A in odd characteristic, the coset
// of elements g with g A = -A g.
Subgroup algebraic_centralizer(const Moebius& s) {
  const FieldPtr& field = s.field();
  const Field& F = *field;
  const std::uint64_t q = F.card();
  const Mat2 A = s.matrix();
  std::vector<Moebius> elems;
  auto push = [&](Elem a, Elem b, Elem c, Elem d) {
    if (F.sub(F.mul(a, d), F.mul(b, c)).code != 0) elems.emplace_back(field, a, b, c, d);
  };
  // Up to scalars, x I + y A is either A itself (x = 0) or I + y A.
  push(A.a, A.b, A.c, A.d);
  for (std::uint64_t y = 0; y < q; ++y) {
    const Elem ye{y};
    push(F.add(F.one(), F.mul(ye, A.a)), F.mul(ye, A.b), F.mul(ye, A.c), F.add(F.one(), F.mul(ye, A.d)));
  }
  if (F.characteristic() != 2 && F.add(A.a, A.d).code == 0) {
    // g = [[x, y], [z, -x]] with 2 a x + c y + b z = 0.
    std::optional<Mat2> g;
    const Elem two = F.from_int(2);
    for (std::uint64_t x = 0; x < q && !g; ++x)
      for (std::uint64_t t = 0; t < q && !g; ++t) {
        Elem xe{x}, y{}, z{};
        const Elem lhs = F.mul(two, F.mul(A.a, xe));
        if (A.b.code != 0) {
          y = Elem{t};
          z = F.neg(F.div(F.add(lhs, F.mul(A.c, y)), A.b));
        } else if (A.c.code != 0) {
          z = Elem{t};
          y = F.neg(F.div(F.add(lhs, F.mul(A.b, z)), A.c));
        } else {
          if (x != 0) break;
          y = F.one();
          z = Elem{t};
        }
        Mat2 cand{field, xe, y, z, F.neg(xe)};
        if (cand.det().code != 0) g = cand;
      }
    ensure(g.has_value(), "no anti-commuting element for an involution");
    const std::size_t n = elems.size();
    for (std::size_t i = 0; i < n; ++i) elems.push_back(g->normalized().compose(elems[i]));
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subgroup(field, std::move(elems));
}

}  // namespace

Subgroup pgl_centralizer(const Moebius& s) {
  if (s.field()->card() <= 31) {
    std::vector<Moebius> c;
    for_each_pgl(s.field(), [&](const Moebius& g) {
      if (g.compose(s) == s.compose(g)) c.push_back(g);
    });
    std::sort(c.begin(), c.end());
    return Subgroup(s.field(), std::move(c));
  }
  if (s.is_identity()) return full_pgl(s.field());
  return algebraic_centralizer(s);
}

std::vector<Moebius> conjugates(const Subgroup& G, const Moebius& s) {
  if (!G.contains(s)) raise(ErrorKind::NotInGroup, to_string(s) + " is not in the group");
  std::vector<Moebius> out;
  for (const auto& g : G.elements()) out.push_back(g.compose(s).compose(g.inverse()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subgroup find_a5(const FieldPtr& field) {
  std::vector<Moebius> threes, twos;
  for_each_pgl(field, [&](const Moebius& g) {
    if (g.is_identity()) return;
    const auto o = g.order();
    if (o == 3) threes.push_back(g);
    if (o == 2) twos.push_back(g);
  });
  std::sort(threes.begin(), threes.end());
  std::sort(twos.begin(), twos.end());
  // All elements of order 3 in PGL(2,q) are conjugate, so one choice of b suffices.
  for (const auto& b : threes) {
    for (const auto& a : twos) {
      if (a.compose(b).order() != 5) continue;
      Subgroup G = generate(field, {a, b});
      if (G.order() == 60) return G;
    }
    break;
  }
  raise(ErrorKind::InvariantViolation, "no A5 subgroup found in PGL(2," + std::to_string(field->card()) + ")");
}

}  // namespace orbitpoly
