#include "orbitpoly/classes.hpp"

#include <algorithm>
#include <random>

#include "orbitpoly/config.hpp"
#include "orbitpoly/error.hpp"
#include "orbitpoly/factor.hpp"
#include "orbitpoly/linalg.hpp"
#include "orbitpoly/structfactor.hpp"
#include "orbitpoly/tower.hpp"

namespace orbitpoly {

std::string_view to_string(ClassKind k) noexcept {
  switch (k) {
    case ClassKind::Identity: return "identity";
    case ClassKind::Split: return "split";
    case ClassKind::Unipotent: return "unipotent";
    case ClassKind::NonSplit: return "nonsplit";
    case ClassKind::SplitInvolution: return "split-involution";
    case ClassKind::NonSplitInvolution: return "nonsplit-involution";
  }
  return "?";
}

std::vector<ClassLabel> conjugacy_classes(const FieldPtr& field) {
  const Subgroup G = full_pgl(field);
  const auto& el = G.elements();
  const bool odd = field->characteristic() != 2;
  std::vector<char> assigned(el.size(), 0);
  std::vector<Moebius> inverses;
  inverses.reserve(el.size());
  for (const auto& g : el) inverses.push_back(g.inverse());
  std::vector<ClassLabel> out;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (assigned[i]) continue;
    const Moebius& s = el[i];
    std::size_t size = 0;
    for (std::size_t j = 0; j < el.size(); ++j) {
      const Moebius c = el[j].compose(s).compose(inverses[j]);
      const auto it = std::lower_bound(el.begin(), el.end(), c);
      const std::size_t idx = static_cast<std::size_t>(it - el.begin());
      if (!assigned[idx]) {
        assigned[idx] = 1;
        ++size;
      }
    }
    const std::uint64_t order = s.order();
    ClassKind kind = ClassKind::Identity;
    switch (s.classify()) {
      case MoebiusClass::Identity: kind = ClassKind::Identity; break;
      case MoebiusClass::Split: kind = odd && order == 2 ? ClassKind::SplitInvolution : ClassKind::Split; break;
      case MoebiusClass::Unipotent: kind = ClassKind::Unipotent; break;
      case MoebiusClass::NonSplit: kind = odd && order == 2 ? ClassKind::NonSplitInvolution : ClassKind::NonSplit; break;
    }
    out.push_back({kind, order, s, size, el.size() / size});
  }
  std::sort(out.begin(), out.end(), [](const ClassLabel& x, const ClassLabel& y) {
    if (x.order != y.order) return x.order < y.order;
    return x.representative < y.representative;
  });
  return out;
}

std::size_t class_index(const std::vector<ClassLabel>& classes, const Moebius& s) {
  // Classes are determined by conjugating the representative; compare via
  // an invariant-free search over the (small) class list.
  const FieldPtr& F = s.field();
  std::size_t found = classes.size();
  for_each_pgl(F, [&](const Moebius& g) {
    if (found != classes.size()) return;
    const Moebius c = g.compose(s).compose(g.inverse());
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i].representative == c) found = i;
  });
  ensure(found != classes.size(), "element not found in any conjugacy class");
  return found;
}

ClassContext make_class_context(const FieldPtr& field) {
  RatFunc phi = pgl_generator(field);
  const FieldPtr ext2 = extension_of_degree(field, 2);
  const ProjPoint mu = phi.eval(*ext2, ProjPoint::finite(ext2->root()));
  ensure(!mu.infinite && ext2->in_ground(mu.value), "Phi on F_{q^2} \\ F_q is not in F_q");
  return {field, full_pgl(field), std::move(phi), mu.value, conjugacy_classes(field)};
}

namespace {

std::vector<std::size_t> involution_classes(const ClassContext& ctx) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ctx.classes.size(); ++i)
    if (ctx.classes[i].order == 2) out.push_back(i);
  return out;
}

std::size_t identity_class(const ClassContext& ctx) {
  for (std::size_t i = 0; i < ctx.classes.size(); ++i)
    if (ctx.classes[i].kind == ClassKind::Identity) return i;
  raise(ErrorKind::InvariantViolation, "no identity class");
}

}  // namespace

LambdaClass class_of_lambda(const ClassContext& ctx, const ProjPoint& lambda, std::uint64_t seed) {
  if (lambda.infinite) return {false, {identity_class(ctx)}};
  const FieldPtr& F = ctx.field;
  if (!F->contains(lambda.value)) raise(ErrorKind::CtxMismatch, "lambda outside F_q");
  if (lambda.value == ctx.mu) {
    auto inv = involution_classes(ctx);
    if (F->characteristic() == 2) {
      ensure(inv.size() == 1, "expected a single involution class in even characteristic");
      return {false, inv};
    }
    ensure(inv.size() == 2, "expected two involution classes in odd characteristic");
    return {true, inv};
  }
  const Poly f = ctx.phi.num() - ctx.phi.den().scaled(lambda.value);
  const Poly h = one_irreducible_factor(f, seed);
  ensure(h.degree() >= 2, "f - lambda g has a rational root");
  const FieldPtr ext = extend(F, h);
  const Moebius s = find_s_for_alpha(ctx.group, ext, ext->root(), &ctx.phi);
  return {false, {class_index(ctx.classes, s)}};
}

FactorPattern factor_pattern_of_class(const ClassContext& ctx, Elem lambda, std::uint64_t seed) {
  const std::uint64_t q = ctx.field->card();
  if (lambda == ctx.mu)
    return {2, static_cast<std::size_t>((q * q - q) / 2), static_cast<unsigned>(q + 1), ctx.field->characteristic() != 2};
  const LambdaClass lc = class_of_lambda(ctx, ProjPoint::finite(lambda), seed);
  const std::uint64_t r = ctx.classes[lc.classes.front()].order;
  return {static_cast<unsigned>(r), static_cast<std::size_t>(ctx.group.order() / r), 1, false};
}

std::optional<FactorPattern> observed_pattern(const ClassContext& ctx, Elem lambda, std::uint64_t seed) {
  const Poly f = ctx.phi.num() - ctx.phi.den().scaled(lambda);
  const Factorization fac = factorize(f, seed);
  const auto& [h0, e0] = fac.factors.front();
  for (const auto& [h, e] : fac.factors)
    if (h.degree() != h0.degree() || e != e0) return std::nullopt;
  return FactorPattern{static_cast<unsigned>(h0.degree()), fac.factors.size(), e0,
                       lambda == ctx.mu && ctx.field->characteristic() != 2};
}

// ---------------------------------------------------------------------------
// Lang

namespace {

Moebius sigma_inv_t(const Moebius& t) { return t.frobenius(1).inverse().compose(t); }

std::optional<Moebius> lang_linear(const Moebius& s, const FieldPtr& ext, std::uint64_t r, std::uint64_t seed) {
  const FieldPtr& F = s.field();
  const Field& E = *ext;
  const std::uint64_t q = F->card();
  const Mat2 S = s.matrix();
  const Mat2 Sr = S.pow(r);
  ensure(Sr.is_scalar(), "s^r is not scalar");
  const Elem nu = Sr.a;

  // kappa with norm nu; only its norm matters up to rescaling T.
  const std::uint64_t norm_exp = (E.card() - 1) / (q - 1);
  Elem kappa{0};
  for (std::uint64_t c = 1; c < E.card(); ++c)
    if (E.pow(Elem{c}, norm_exp) == nu) {
      kappa = Elem{c};
      break;
    }
  ensure(kappa.code != 0, "no element of the required norm");

  // F_q-linear map T -> sigma(T) S - kappa T on 2x2 matrices over ext.
  const unsigned k = E.degree();
  const std::size_t n = 4 * k;
  Matrix M(n, std::vector<Elem>(n, F->zero()));
  for (std::size_t col = 0; col < n; ++col) {
    std::array<Elem, 4> T{};
    std::vector<Elem> unit(k, F->zero());
    unit[col % k] = F->one();
    T[col / k] = E.from_coords(unit);
    std::array<Elem, 4> sT{};
    for (int i = 0; i < 4; ++i) sT[i] = E.frobenius(T[i], 1);
    // sigma(T) * S with S over F_q embedded in ext.
    const std::array<Elem, 4> prod{E.add(E.mul(sT[0], S.a), E.mul(sT[1], S.c)), E.add(E.mul(sT[0], S.b), E.mul(sT[1], S.d)),
                                   E.add(E.mul(sT[2], S.a), E.mul(sT[3], S.c)), E.add(E.mul(sT[2], S.b), E.mul(sT[3], S.d))};
    for (int i = 0; i < 4; ++i) {
      const Elem v = E.sub(prod[i], E.mul(kappa, T[i]));
      const auto c = E.coords(v);
      for (unsigned j = 0; j < k; ++j) M[static_cast<std::size_t>(i) * k + j][col] = c[j];
    }
  }
  const auto basis = nullspace(*F, std::move(M), n);
  if (basis.empty()) return std::nullopt;

  auto build = [&](const std::vector<Elem>& coeffs) -> std::optional<Moebius> {
    std::vector<Elem> v(n, F->zero());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeffs[b].code == 0) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] = F->add(v[i], F->mul(coeffs[b], basis[b][i]));
    }
    std::array<Elem, 4> T{};
    for (int i = 0; i < 4; ++i)
      T[i] = E.from_coords(std::span<const Elem>(v.data() + static_cast<std::size_t>(i) * k, k));
    const Elem det = E.sub(E.mul(T[0], T[3]), E.mul(T[1], T[2]));
    if (det.code == 0) return std::nullopt;
    return Moebius(ext, T[0], T[1], T[2], T[3]);
  };

  const std::size_t dim = basis.size();
  std::uint64_t combos = 1;
  bool small = true;
  for (std::size_t i = 0; i < dim && small; ++i) {
    if (combos > 4096 / q) small = false;
    combos *= q;
  }
  if (small) {
    for (std::uint64_t code = 1; code < combos; ++code) {
      std::vector<Elem> c(dim);
      std::uint64_t x = code;
      for (auto& e : c) {
        e = Elem{x % q};
        x /= q;
      }
      if (auto t = build(c)) return t;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dull);
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Elem> c(dim);
    for (auto& e : c) e = Elem{dist(rng)};
    if (auto t = build(c)) return t;
  }
  return std::nullopt;
}

}  // namespace

LangSolution lang_solve(const Moebius& s, std::uint64_t seed) {
  const FieldPtr& F = s.field();
  if (F->is_extension()) raise(ErrorKind::TowerTooDeep, "s must be over a prime or power field");
  const std::uint64_t q = F->card();
  const std::uint64_t r = s.order();
  const std::uint64_t Q = checked_pow(q, static_cast<unsigned>(r), limits().enumeration_cap);
  const FieldPtr ext = extension_of_degree(F, static_cast<unsigned>(r));
  const Moebius s_ext = s.lift(ext);

  LangSolution out{ext, r, Moebius::identity(ext), {}, 0, false, false, false};
  std::optional<Moebius> t;
  if (s.is_identity()) t = Moebius::identity(ext);
  else t = lang_linear(s, ext, r, seed);
  if (!t) {
    if (Q * Q * Q > limits().enumeration_cap)
      raise(ErrorKind::InvariantViolation, "linear Lang solver failed and exhaustive search is beyond the cap");
    for_each_pgl(ext, [&](const Moebius& cand) {
      if (!t && sigma_inv_t(cand) == s_ext) t = cand;
    });
    out.used_exhaustive = true;
    ensure(t.has_value(), "no solution of the Lang equation");
  }
  out.t = *t;
  out.equation_ok = sigma_inv_t(out.t) == s_ext;

  for (Elem z : roots_in(frobenius_companion(s), ext, seed)) out.xs.push_back(ProjPoint::finite(z));
  out.finite_count = out.xs.size();
  if (s.c().code == 0) out.xs.push_back(ProjPoint::infinity());
  std::sort(out.xs.begin(), out.xs.end());

  const Moebius tinv = out.t.inverse();
  std::vector<ProjPoint> image;
  for (std::uint64_t c = 0; c < q; ++c) image.push_back(tinv.apply(*ext, ProjPoint::finite(Elem{c})));
  image.push_back(tinv.apply(*ext, ProjPoint::infinity()));
  std::sort(image.begin(), image.end());
  out.image_ok = image == out.xs;
  return out;
}

}  // namespace orbitpoly
