#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbitpoly/poly.hpp"

namespace orbitpoly {

/// unit * prod factor^multiplicity; factors monic irreducible, sorted canonically.
struct Factorization {
  Elem unit;
  std::vector<std::pair<Poly, unsigned>> factors;

  std::size_t count() const noexcept;
  Poly expand(const FieldPtr& field) const;
};

/// Rabin's test. Throws ConstantInput for constants.
bool is_irreducible(const Poly& f);

/// Squarefree part decomposition: monic (g_i, i) with f = lc * prod g_i^i.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

/// Distinct degree factorization of a monic squarefree f: (product of all
/// irreducible factors of degree d, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f);

/// Splits a monic squarefree product of irreducibles of common degree d.
std::vector<Poly> equal_degree(const Poly& f, unsigned d, std::uint64_t seed);

/// One irreducible factor of least degree of a squarefree f, found by
/// following a single branch of the equal degree splitting.
Poly one_irreducible_factor(const Poly& f, std::uint64_t seed = 0);

/// Complete factorization. The random choices depend only on (f, seed); the
/// result as a multiset does not depend on seed.
Factorization factorize(const Poly& f, std::uint64_t seed = 0);

/// Distinct roots of f lying in ext (ext must equal or extend f's field),
/// sorted by code.
std::vector<Elem> roots_in(const Poly& f, const FieldPtr& ext, std::uint64_t seed = 0);

/// T^(Q^e) mod f where Q is the cardinality of f's field.
Poly frobenius_power_of_t(const Poly& f, unsigned e);

}  // namespace orbitpoly
