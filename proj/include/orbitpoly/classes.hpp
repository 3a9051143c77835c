#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitpoly/group.hpp"
#include "orbitpoly/invariants.hpp"

namespace orbitpoly {

enum class ClassKind { Identity, Split, Unipotent, NonSplit, SplitInvolution, NonSplitInvolution };
std::string_view to_string(ClassKind k) noexcept;

struct ClassLabel {
  ClassKind kind;
  std::uint64_t order;     // element order r
  Moebius representative;  // least element of the class
  std::size_t size;
  std::size_t centralizer_order;
};

/// Conjugacy classes of PGL(2,q), sorted by (order, representative).
std::vector<ClassLabel> conjugacy_classes(const FieldPtr& field);

/// Index into `classes` of the class containing s.
std::size_t class_index(const std::vector<ClassLabel>& classes, const Moebius& s);

struct LambdaClass {
  bool ambiguous;                   // lambda = mu with q odd
  std::vector<std::size_t> classes; // one entry, or both involution classes
};

/// Context reused across lambda queries for one q.
struct ClassContext {
  FieldPtr field;
  Subgroup group;
  RatFunc phi;
  Elem mu;
  std::vector<ClassLabel> classes;
};

ClassContext make_class_context(const FieldPtr& field);

/// lambda in P^1(F_q) -> class(es) of PGL(2,q).
LambdaClass class_of_lambda(const ClassContext& ctx, const ProjPoint& lambda, std::uint64_t seed = 0);

struct FactorPattern {
  unsigned degree;        // degree of each irreducible factor
  std::size_t count;      // number of distinct factors
  unsigned multiplicity;  // of each factor
  bool ambiguous;

  friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

/// Predicted shape of the factorization of f - lambda g (lambda finite).
FactorPattern factor_pattern_of_class(const ClassContext& ctx, Elem lambda, std::uint64_t seed = 0);

/// Actual shape of the oracle factorization of f - lambda g; nullopt when the
/// factors do not share one degree and multiplicity.
std::optional<FactorPattern> observed_pattern(const ClassContext& ctx, Elem lambda, std::uint64_t seed = 0);

struct LangSolution {
  FieldPtr ext;                // F_{q^r}
  std::uint64_t r;
  Moebius t;                   // over ext, s = sigma(t)^-1 t
  std::vector<ProjPoint> xs;   // solutions of s(z) = z^q in P^1(ext)
  std::size_t finite_count;    // |X_s| without infinity
  bool equation_ok;
  bool image_ok;               // X_s = t^-1(P^1(F_q))
  bool used_exhaustive;
};

LangSolution lang_solve(const Moebius& s, std::uint64_t seed = 0);

}  // namespace orbitpoly
