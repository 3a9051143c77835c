#pragma once

#include "orbitpoly/field.hpp"
#include "orbitpoly/poly.hpp"

namespace orbitpoly {

/// base[y]/(h). A degree-1 h returns base unchanged. Throws NotIrreducible.
FieldPtr extend(const FieldPtr& base, const Poly& h);

/// base extended by its least monic irreducible of degree k (by code), cached.
/// k == 1 returns base.
FieldPtr extension_of_degree(const FieldPtr& base, unsigned k);

/// Least monic irreducible of degree k over field (smallest code, high
/// coefficients most significant).
Poly least_irreducible(const FieldPtr& field, unsigned k);

/// Minimal polynomial of x (an element of ext) over `over`, which must be
/// ext itself or its base.
Poly minimal_poly(const FieldPtr& ext, Elem x, const FieldPtr& over);

/// Least e >= 1 with x^(q^e) == x, q the ground cardinality of ext.
unsigned frobenius_degree(const Field& ext, Elem x);

}  // namespace orbitpoly
