#include "orbitpoly/factor.hpp"

#include <algorithm>
#include <random>

#include "orbitpoly/error.hpp"

namespace orbitpoly {

std::size_t Factorization::count() const noexcept {
  std::size_t n = 0;
  for (const auto& [f, e] : factors) n += e;
  return n;
}

Poly Factorization::expand(const FieldPtr& field) const {
  Poly r = Poly::constant(field, unit);
  for (const auto& [f, e] : factors) r *= pow(f, e);
  return r;
}

Poly frobenius_power_of_t(const Poly& f, unsigned e) {
  const FieldPtr& F = f.field();
  Poly h = Poly::variable(F) % f;
  for (unsigned i = 0; i < e; ++i) h = powmod(h, F->card(), f);
  return h;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) raise(ErrorKind::ConstantInput, "irreducibility test of a constant");
  const unsigned n = static_cast<unsigned>(f.degree());
  if (n == 1) return true;
  const Poly g = f.monic();
  const FieldPtr& F = g.field();
  const Poly t = Poly::variable(F);
  // powers[i] = T^(Q^i) mod g
  std::vector<Poly> powers{t % g};
  for (unsigned i = 1; i <= n; ++i) powers.push_back(powmod(powers.back(), F->card(), g));
  if (!(powers[n] - t).is_zero()) return false;
  for (auto l : prime_divisors(n)) {
    const Poly d = gcd(g, powers[n / l] - t);
    if (d.degree() > 0) return false;
  }
  return true;
}

namespace {

// f(T) = h(T)^p; returns h. Every exponent of f is a multiple of p.
Poly pth_root(const Poly& f) {
  const Field& F = f.F();
  const std::uint32_t p = F.characteristic();
  const std::uint64_t e = F.card() / p;  // x -> x^(Q/p) inverts x -> x^p
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(F.pow(f.coeffs()[i], e));
  return Poly(f.field(), std::move(c));
}

void sqf_rec(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.degree() < 1) return;
  const FieldPtr& F = f.field();
  const Poly df = f.derivative();
  if (df.is_zero()) {
    sqf_rec(pth_root(f), mult * F->characteristic(), out);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) sqf_rec(pth_root(c.monic()), mult * F->characteristic(), out);
}

Poly random_poly(const FieldPtr& F, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F->card() - 1);
  std::vector<Elem> c(static_cast<std::size_t>(below_degree));
  for (auto& e : c) e = Elem{dist(rng)};
  return Poly(F, std::move(c));
}

// One attempt at a proper split of g (degree multiple of d, > d).
Poly try_split(const Poly& g, unsigned d, std::mt19937_64& rng) {
  const FieldPtr& F = g.field();
  const Poly a = random_poly(F, g.degree(), rng);
  if (a.degree() < 1) return Poly(F);
  Poly b(F);
  if (F->characteristic() == 2) {
    // Absolute trace map: sum of a^(2^i) for i < d * abs_degree.
    const unsigned n = d * F->absolute_degree();
    Poly cur = a;
    b = cur;
    for (unsigned i = 1; i < n; ++i) {
      cur = mulmod(cur, cur, g);
      b += cur;
    }
  } else {
    // a^((Q^d - 1)/2) = (a * a^Q * ... * a^(Q^(d-1)))^((Q-1)/2)
    Poly norm = a % g;
    Poly cur = a % g;
    for (unsigned i = 1; i < d; ++i) {
      cur = powmod(cur, F->card(), g);
      norm = mulmod(norm, cur, g);
    }
    b = powmod(norm, (F->card() - 1) / 2, g) - Poly::constant(F, F->one());
  }
  Poly h = gcd(g, b);
  if (h.degree() > 0 && h.degree() < g.degree()) return h;
  return Poly(F);
}

void edf_rec(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g.monic());
    return;
  }
  Poly h(g.field());
  for (int attempt = 0; attempt < 10000 && h.is_zero(); ++attempt) h = try_split(g, d, rng);
  ensure(!h.is_zero(), "equal degree splitting did not converge");
  edf_rec(h, d, rng, out);
  edf_rec(g / h, d, rng, out);
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  if (f.degree() < 1) raise(ErrorKind::ConstantInput, "squarefree decomposition of a constant");
  std::vector<std::pair<Poly, unsigned>> out;
  sqf_rec(f.monic(), 1, out);
  return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const FieldPtr& F = f.field();
  const Poly t = Poly::variable(F);
  Poly rest = f.monic();
  Poly h = t % rest;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
    h = powmod(h, F->card(), rest);
    Poly g = gcd(rest, h - t);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, unsigned d, std::uint64_t seed) {
  std::mt19937_64 rng(hash_value(f) ^ (seed * 0x9e3779b97f4a7c15ull));
  std::vector<Poly> out;
  edf_rec(f.monic(), d, rng, out);
  return out;
}

Poly one_irreducible_factor(const Poly& f, std::uint64_t seed) {
  if (f.degree() < 1) raise(ErrorKind::ConstantInput, "factor of a constant");
  auto blocks = distinct_degree(f);
  auto [g, d] = blocks.front();
  std::mt19937_64 rng(hash_value(g) ^ (seed * 0x9e3779b97f4a7c15ull));
  while (g.degree() > static_cast<int>(d)) {
    Poly h(g.field());
    for (int attempt = 0; attempt < 10000 && h.is_zero(); ++attempt) h = try_split(g, d, rng);
    ensure(!h.is_zero(), "equal degree splitting did not converge");
    Poly other = g / h;
    g = h.degree() <= other.degree() ? h : other;
  }
  return g.monic();
}

Factorization factorize(const Poly& f, std::uint64_t seed) {
  if (f.degree() < 1) raise(ErrorKind::ConstantInput, "factorization of a constant");
  Factorization result{f.lc(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree(part)) {
      for (auto& g : equal_degree(block, d, seed)) result.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& x, const auto& y) {
    if (x.first == y.first) return x.second < y.second;
    return x.first < y.first;
  });
  // Merge equal factors that arose from different squarefree layers.
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& fe : result.factors) {
    if (!merged.empty() && merged.back().first == fe.first)
      merged.back().second += fe.second;
    else
      merged.push_back(std::move(fe));
  }
  result.factors = std::move(merged);
  return result;
}

std::vector<Elem> roots_in(const Poly& f, const FieldPtr& ext, std::uint64_t seed) {
  if (f.is_zero()) raise(ErrorKind::ConstantInput, "roots of the zero polynomial");
  const Poly g = f.lift(ext);
  if (g.degree() < 1) return {};
  const Poly t = Poly::variable(ext);
  const Poly split = gcd(g, powmod(t, ext->card(), g.monic()) - t);
  std::vector<Elem> roots;
  if (split.degree() < 1) return roots;
  for (const auto& lin : equal_degree(split, 1, seed)) roots.push_back(ext->neg(lin.coeff(0)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace orbitpoly
