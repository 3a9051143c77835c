#pragma once

// Test-side oracles. These avoid the library's factoring and group code so
// results can be compared against something computed a different way.

#include <cstdint>
#include <map>
#include <vector>

#include "orbitpoly/field.hpp"
#include "orbitpoly/poly.hpp"

namespace oracle {

using orbitpoly::Elem;
using orbitpoly::FieldPtr;
using orbitpoly::Poly;

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod(a, p), e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// z -> (a z + b)/(c z + d) over F_p with z = -1 for infinity.
inline std::int64_t mobius_prime(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t z,
                                 std::int64_t p) {
  if (z < 0) return c == 0 ? -1 : mod(a * inv_mod(c, p), p);
  const std::int64_t den = mod(c * z + d, p);
  if (den == 0) return -1;
  return mod((a * z + b) % p * inv_mod(den, p), p);
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Number of monic irreducibles of degree n over F_q (necklace count).
inline std::uint64_t irreducible_count(std::uint64_t q, unsigned n) {
  auto mu = [](unsigned d) {
    int r = 1;
    for (unsigned p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      d /= p;
      if (d % p == 0) return 0;
      r = -r;
    }
    return d > 1 ? -r : r;
  };
  std::int64_t s = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) s += mu(n / d) * static_cast<std::int64_t>(ipow(q, d));
  return static_cast<std::uint64_t>(s) / n;
}

// Every monic polynomial of degree n over F, in code order.
inline std::vector<Poly> monic_of_degree(const FieldPtr& F, unsigned n) {
  const std::uint64_t q = F->card();
  std::vector<Poly> out;
  for (std::uint64_t code = 0; code < ipow(q, n); ++code) {
    std::vector<Elem> c(n + 1);
    std::uint64_t v = code;
    for (unsigned i = 0; i < n; ++i) {
      c[i] = Elem{v % q};
      v /= q;
    }
    c[n] = F->one();
    out.emplace_back(F, std::move(c));
  }
  return out;
}

// Irreducibility by trial division by every monic polynomial of degree <= n/2.
inline bool trial_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d)
    for (const Poly& g : monic_of_degree(f.field(), static_cast<unsigned>(d)))
      if ((f % g).is_zero()) return false;
  return true;
}

// Factorization by trial division; map factor -> multiplicity.
inline std::map<Poly, unsigned> trial_factor(Poly f) {
  std::map<Poly, unsigned> out;
  f = f.monic();
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    for (const Poly& g : monic_of_degree(f.field(), static_cast<unsigned>(d))) {
      while (f.degree() >= d && (f % g).is_zero()) {
        ++out[g];
        f = f / g;
      }
    }
  }
  if (f.degree() > 0) ++out[f];
  return out;
}

// Roots of f in ext by evaluating at every element.
inline std::vector<Elem> brute_roots(const Poly& f, const orbitpoly::Field& ext) {
  std::vector<Elem> out;
  for (std::uint64_t c = 0; c < ext.card(); ++c)
    if (f.eval_in(ext, Elem{c}).code == 0) out.push_back(Elem{c});
  return out;
}

}  // namespace oracle
