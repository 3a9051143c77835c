#include "orbitpoly/tower.hpp"

#include <map>
#include <mutex>

#include "orbitpoly/config.hpp"
#include "orbitpoly/error.hpp"
#include "orbitpoly/factor.hpp"

namespace orbitpoly {

FieldPtr extend(const FieldPtr& base, const Poly& h) {
  if (!same_field(*base, h.F())) raise(ErrorKind::CtxMismatch, "extension polynomial over a different field");
  if (h.degree() < 1) raise(ErrorKind::ConstantInput, "extension by a constant");
  if (base->is_extension()) raise(ErrorKind::TowerTooDeep, "extensions of extensions are not supported");
  if (h.degree() == 1) return base;
  checked_pow(base->card(), static_cast<unsigned>(h.degree()), kMaxFieldCard);
  if (!is_irreducible(h)) raise(ErrorKind::NotIrreducible, to_string(h, "y") + " over " + base->name());
  return Field::make_extension(base, h.monic().coeffs());
}

Poly least_irreducible(const FieldPtr& field, unsigned k) {
  if (k == 0) raise(ErrorKind::UsageError, "degree must be positive");
  const std::uint64_t q = field->card();
  const std::uint64_t count = checked_pow(q, k, kMaxFieldCard);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Elem> c(k + 1);
    std::uint64_t v = code;
    for (unsigned i = 0; i < k; ++i) {
      c[i] = Elem{v % q};
      v /= q;
    }
    c[k] = field->one();
    if (k > 1 && c[0].code == 0) continue;
    Poly f(field, std::move(c));
    if (is_irreducible(f)) return f;
  }
  raise(ErrorKind::InvariantViolation, "no irreducible polynomial found");
}

FieldPtr extension_of_degree(const FieldPtr& base, unsigned k) {
  if (k == 1) return base;
  static std::mutex mutex;
  static std::map<std::pair<const Field*, unsigned>, std::pair<FieldPtr, FieldPtr>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(base.get(), k);
  if (auto it = cache.find(key); it != cache.end()) return it->second.second;
  FieldPtr ext = Field::make_extension(base, least_irreducible(base, k).coeffs());
  // The base pointer is kept alive alongside the extension so the key stays valid.
  cache.emplace(key, std::make_pair(base, ext));
  return ext;
}

unsigned frobenius_degree(const Field& ext, Elem x) {
  Elem y = ext.frobenius(x, 1);
  unsigned e = 1;
  while (y != x) {
    y = ext.frobenius(y, 1);
    ++e;
    ensure(e <= ext.degree(), "Frobenius orbit longer than the extension degree");
  }
  return e;
}

Poly minimal_poly(const FieldPtr& ext, Elem x, const FieldPtr& over) {
  if (!ext->contains(x)) raise(ErrorKind::CtxMismatch, "element outside " + ext->name());
  if (same_field(*over, *ext)) return Poly(ext, {ext->neg(x), ext->one()});
  if (!ext->is_extension() || !same_field(*over, *ext->base()))
    raise(ErrorKind::CtxMismatch, over->name() + " is not the base of " + ext->name());
  Poly m = Poly::constant(ext, ext->one());
  Elem y = x;
  do {
    m *= Poly(ext, {ext->neg(y), ext->one()});
    y = ext->frobenius(y, 1);
  } while (y != x);
  return m.restrict_to(over);
}

}  // namespace orbitpoly
