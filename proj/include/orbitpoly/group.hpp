#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "orbitpoly/moebius.hpp"

namespace orbitpoly {

/// A finite subgroup of PGL(2,q); elements sorted by normalized entries.
class Subgroup {
 public:
  Subgroup(FieldPtr field, std::vector<Moebius> sorted_elements);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Moebius>& elements() const noexcept { return elems_; }
  std::size_t order() const noexcept { return elems_.size(); }
  bool contains(const Moebius& s) const;
  /// Closure and divisibility checks; throws InvariantViolation.
  void validate() const;

 private:
  FieldPtr field_;
  std::vector<Moebius> elems_;
};

/// Subgroup generated by gens (breadth-first closure).
Subgroup generate(const FieldPtr& field, const std::vector<Moebius>& gens);
/// All q^3 - q elements of PGL(2,q).
Subgroup full_pgl(const FieldPtr& field);
/// Calls fn on every element of PGL(2,q) without storing them.
void for_each_pgl(const FieldPtr& field, const std::function<void(const Moebius&)>& fn);

/// All points of P^1(ext), finite ones by code then infinity. Respects the enumeration cap.
std::vector<ProjPoint> projective_line(const Field& ext);

struct Orbit {
  std::vector<ProjPoint> points;  // sorted
  Subgroup stabilizer;            // of points.front()
  bool regular;
};

struct OrbitReport {
  FieldPtr ext;
  unsigned k;
  std::vector<Orbit> orbits;  // sorted by (size, least point)
};

std::vector<ProjPoint> orbit_of(const Subgroup& G, const Field& ext, const ProjPoint& z);
Subgroup stabilizer_of(const Subgroup& G, const Field& ext, const ProjPoint& z);

/// Orbits of G on P^1(F_{q^k}).
OrbitReport orbit_decomposition(const Subgroup& G, unsigned k);

struct NonRegularOrbit {
  std::vector<ProjPoint> points;  // over F_{q^2}
  std::size_t size;
  std::size_t stabilizer_order;
};

struct Census {
  FieldPtr ext;  // F_{q^2}, where all fixed points live
  std::vector<NonRegularOrbit> orbits;  // sorted by (size, least point)
};

/// Non-regular orbits over the algebraic closure, found from fixed points.
Census nonregular_census(const Subgroup& G);

struct RiemannHurwitz {
  std::uint64_t different_sum;  // sum of delta_P over non-regular points
  std::uint64_t tame_sum;       // sum of (e_P - 1)
  std::uint64_t expected;       // 2|G| - 2
  bool pass;                    // different_sum == expected
  bool tame_inequality;         // expected >= tame_sum
};

RiemannHurwitz riemann_hurwitz_audit(const Subgroup& G);

/// Elements of G commuting with s. Throws NotInGroup.
Subgroup centralizer(const Subgroup& G, const Moebius& s);
/// Centralizer of s inside all of PGL(2,q).
Subgroup pgl_centralizer(const Moebius& s);
/// {g s g^-1 : g in G}, sorted.
std::vector<Moebius> conjugates(const Subgroup& G, const Moebius& s);

/// A subgroup isomorphic to A_5 in PGL(2,q), generated by an element of order
/// 3 and an involution with product of order 5. Throws InvariantViolation if
/// none exists.
Subgroup find_a5(const FieldPtr& field);

}  // namespace orbitpoly
