#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitpoly/factor.hpp"
#include "orbitpoly/invariants.hpp"

namespace orbitpoly {

/// c T^(q+1) + d T^q - a T - b for the matrix as written.
Poly frobenius_companion(const Mat2& s);
Poly frobenius_companion(const Moebius& s);

/// Some s in G with s(alpha) = alpha^q, alpha in ext \ F_q. If phi is given,
/// first checks phi(alpha) is in F_q or infinite. Throws InvariantViolation.
Moebius find_s_for_alpha(const Subgroup& G, const FieldPtr& ext, Elem alpha, const RatFunc* phi = nullptr);

struct StructuredFactor {
  Poly factor;         // monic irreducible over F_q
  FieldPtr source_field;
  Elem source;         // a root of factor in source_field
  ProjPoint lambda;    // family parameter at the source root
};

struct StructuredFactorization {
  Poly input;
  Mat2 s;
  MoebiusClass kind;
  std::uint64_t order;
  Elem unit;
  std::vector<Poly> removed_linear;
  std::vector<StructuredFactor> factors;  // sorted canonically
  unsigned degree_r;
  std::string family;  // display of the orbit polynomial of <s>
  RatFunc parameter;   // the family parameter t

  /// unit * prod removed_linear * prod factors.
  Poly reconstruct() const;
  /// All factors with multiplicity one, as a Factorization.
  Factorization as_factorization() const;
};

/// Factors the companion polynomial of s through the orbit polynomial of <s>.
StructuredFactorization factor_by_orbit(const Mat2& s, std::uint64_t seed = 0);

struct LambdaReportRow {
  unsigned degree;
  std::size_t count;
  std::uint64_t expected;  // Euler phi of degree
};

struct LambdaReport {
  RatFunc phi;
  std::vector<LambdaReportRow> rows;         // by degree
  std::map<std::uint64_t, unsigned> degree_of_lambda;  // lambda code -> common degree
  std::size_t total;
  bool saw_linear;
  bool pass;
};

/// For s of order q+1: the common factor degree of f - lambda g over all lambda in F_q.
LambdaReport lambda_family_report(const Moebius& s, std::uint64_t seed = 0);
LambdaReport lambda_family_report(const Moebius& s, const RatFunc& phi, std::uint64_t seed = 0);

struct NumeratorTerm {
  std::size_t index;
  Elem mu, lambda;
};

struct NumeratorStructure {
  std::vector<NumeratorTerm> terms;
  bool denominator_ok;
  bool pass;
};

/// f_i = mu_i p_s + lambda_i (x^q - x) for every nonconstant coefficient.
NumeratorStructure numerator_structure_check(const Moebius& s);

struct FLambdaResult {
  Factorization factorization;
  bool regular;
  unsigned degree_r;                 // common degree when regular
  std::optional<Moebius> witness;    // find_s_for_alpha on a root
  bool minimal_poly_listed;
};

/// f - lambda g for Phi = f/g the invariant generator (or the supplied phi).
FLambdaResult factor_f_lambda(const Subgroup& G, Elem lambda, std::uint64_t seed = 0);
FLambdaResult factor_f_lambda(const Subgroup& G, const RatFunc& phi, Elem lambda, std::uint64_t seed = 0);

struct CubicsProduct {
  Poly f_alpha;
  Poly expected;  // (T^(q^3) - T)/(T^q - T)
  std::size_t factor_count;
  bool pass;
};

CubicsProduct all_cubics_product(const FieldPtr& field, std::uint64_t seed = 0);

struct GeneralKResult {
  Poly input;  // over F_q
  unsigned k;
  bool structured;   // false when the oracle fallback was used
  std::string warning;
  Factorization factorization;  // over F_q
  std::vector<Poly> big_factors; // over F_{q^k} when structured
};

/// c T^(q^k+1) + d T^(q^k) - a T - b factored over F_q via F_{q^k}.
GeneralKResult factor_general_k(const Mat2& s, unsigned k, std::uint64_t seed = 0);

}  // namespace orbitpoly
