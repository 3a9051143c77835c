#include "orbitpoly/moebius.hpp"

#include <algorithm>
#include <tuple>

#include "orbitpoly/error.hpp"
#include "orbitpoly/factor.hpp"
#include "orbitpoly/tower.hpp"

namespace orbitpoly {

std::string format_point(const Field& F, const ProjPoint& z) { return z.infinite ? "inf" : F.format(z.value); }

ProjPoint parse_point(const Field& F, std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return ProjPoint::infinity();
  return ProjPoint::finite(F.parse(text));
}

std::string_view to_string(MoebiusClass c) noexcept {
  switch (c) {
    case MoebiusClass::Identity: return "identity";
    case MoebiusClass::Split: return "split";
    case MoebiusClass::Unipotent: return "unipotent";
    case MoebiusClass::NonSplit: return "nonsplit";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Mat2

Elem Mat2::det() const {
  const Field& F = *field;
  return F.sub(F.mul(a, d), F.mul(b, c));
}

Mat2 Mat2::operator*(const Mat2& o) const {
  require_same_field(*field, *o.field, "matrix product");
  const Field& F = *field;
  return {field, F.add(F.mul(a, o.a), F.mul(b, o.c)), F.add(F.mul(a, o.b), F.mul(b, o.d)),
          F.add(F.mul(c, o.a), F.mul(d, o.c)), F.add(F.mul(c, o.b), F.mul(d, o.d))};
}

Mat2 Mat2::pow(std::uint64_t e) const {
  Mat2 r{field, field->one(), field->zero(), field->zero(), field->one()};
  Mat2 base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool Mat2::is_scalar() const { return b.code == 0 && c.code == 0 && a == d; }

Moebius Mat2::normalized() const { return Moebius(field, a, b, c, d); }

// ---------------------------------------------------------------------------
// Moebius

Moebius::Moebius(FieldPtr field, Elem a, Elem b, Elem c, Elem d) : field_(std::move(field)) {
  const Field& F = *field_;
  if (F.sub(F.mul(a, d), F.mul(b, c)).code == 0)
    raise(ErrorKind::InvariantViolation, "singular matrix in a linear fractional transformation");
  Elem lead = a.code ? a : b.code ? b : c;
  const Elem s = F.inv(lead);
  a_ = F.mul(a, s);
  b_ = F.mul(b, s);
  c_ = F.mul(c, s);
  d_ = F.mul(d, s);
}

Moebius Moebius::identity(FieldPtr field) {
  const Elem one = field->one(), zero = field->zero();
  return Moebius(std::move(field), one, zero, zero, one);
}

Moebius Moebius::from_ints(FieldPtr field, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const Field& F = *field;
  return Moebius(field, F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(d));
}

bool Moebius::is_identity() const noexcept { return a_.code == 1 && b_.code == 0 && c_.code == 0 && d_.code == 1; }

ProjPoint Moebius::apply(const Field& ext, const ProjPoint& z) const {
  if (z.infinite) return c_.code == 0 ? ProjPoint::infinity() : ProjPoint::finite(ext.div(a_, c_));
  const Elem den = ext.add(ext.mul(c_, z.value), d_);
  if (den.code == 0) return ProjPoint::infinity();
  return ProjPoint::finite(ext.div(ext.add(ext.mul(a_, z.value), b_), den));
}

Moebius Moebius::compose(const Moebius& other) const { return (matrix() * other.matrix()).normalized(); }

Moebius Moebius::inverse() const {
  const Field& F = *field_;
  return Moebius(field_, d_, F.neg(b_), F.neg(c_), a_);
}

Moebius Moebius::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  return matrix().pow(static_cast<std::uint64_t>(e)).normalized();
}

std::uint64_t Moebius::order() const {
  const std::uint64_t cap = field_->card() + 1;
  Moebius cur = *this;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (cur.is_identity()) return n;
    cur = cur.compose(*this);
  }
  raise(ErrorKind::InvariantViolation, "element order exceeds q+1");
}

std::vector<ProjPoint> Moebius::fixed_points(const FieldPtr& ext) const {
  if (is_identity()) raise(ErrorKind::IdentityInput, "fixed points of the identity");
  if (!embeds_into(*field_, *ext)) raise(ErrorKind::CtxMismatch, field_->name() + " does not embed into " + ext->name());
  const Field& F = *field_;
  std::vector<ProjPoint> out;
  // c z^2 + (d - a) z - b = 0
  const Poly quad(field_, {F.neg(b_), F.sub(d_, a_), c_});
  if (!quad.is_zero())
    for (auto r : roots_in(quad, ext)) out.push_back(ProjPoint::finite(r));
  if (c_.code == 0) out.push_back(ProjPoint::infinity());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjPoint> Moebius::fixed_points(unsigned k) const { return fixed_points(extension_of_degree(field_, k)); }

MoebiusClass Moebius::classify() const {
  if (is_identity()) return MoebiusClass::Identity;
  const Field& F = *field_;
  if (F.characteristic() == 2) {
    if (a_ == d_) return MoebiusClass::Unipotent;
    // x^2 + (a+d) x + det splits iff Tr(det/(a+d)^2) = 0.
    const Elem tr = F.add(a_, d_);
    const Elem u = F.div(matrix().det(), F.mul(tr, tr));
    return F.absolute_trace(u) == 0 ? MoebiusClass::Split : MoebiusClass::NonSplit;
  }
  const Elem dma = F.sub(d_, a_);
  const Elem four = F.from_int(4);
  const Elem disc = F.add(F.mul(dma, dma), F.mul(four, F.mul(b_, c_)));
  if (disc.code == 0) return MoebiusClass::Unipotent;
  return F.is_square(disc) ? MoebiusClass::Split : MoebiusClass::NonSplit;
}

Moebius Moebius::lift(const FieldPtr& ext) const {
  if (!embeds_into(*field_, *ext)) raise(ErrorKind::CtxMismatch, field_->name() + " does not embed into " + ext->name());
  return Moebius(ext, a_, b_, c_, d_);
}

Moebius Moebius::frobenius(std::uint64_t e) const {
  const Field& F = *field_;
  return Moebius(field_, F.frobenius(a_, e), F.frobenius(b_, e), F.frobenius(c_, e), F.frobenius(d_, e));
}

std::size_t MoebiusHash::operator()(const Moebius& m) const noexcept {
  std::uint64_t h = m.a().code;
  h = h * 0x100000001b3ull ^ m.b().code;
  h = h * 0x100000001b3ull ^ m.c().code;
  h = h * 0x100000001b3ull ^ m.d().code;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------------------
// text

namespace {

std::string compact(std::string s) {
  std::erase(s, ' ');
  return s;
}

std::string linear_text(const FieldPtr& F, Elem u, Elem v) { return compact(to_string(Poly(F, {v, u}), "x")); }

std::string_view strip_parens(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) return s;
    }
    return s.substr(1, s.size() - 2);
  }
  return s;
}

std::pair<Elem, Elem> parse_linear(const FieldPtr& F, std::string_view text) {
  const Poly p = parse_poly(F, strip_parens(text), 'x');
  if (p.degree() > 1) raise(ErrorKind::ParseError, "expected a linear expression in x: '" + std::string(text) + "'");
  return {p.coeff(1), p.coeff(0)};
}

}  // namespace

std::string to_string(const Mat2& m) {
  const std::string num = linear_text(m.field, m.a, m.b);
  if (m.c.code == 0 && m.d == m.field->one()) return num;
  return "(" + num + ")/(" + linear_text(m.field, m.c, m.d) + ")";
}

std::string to_string(const Moebius& s) { return to_string(s.matrix()); }

Mat2 parse_mat2(const FieldPtr& field, std::string_view text) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == '/' && depth == 0) {
      if (slash != std::string_view::npos) raise(ErrorKind::ParseError, "more than one '/' in '" + std::string(text) + "'");
      slash = i;
    }
  }
  Mat2 m{field, {}, {}, field->zero(), field->one()};
  if (slash == std::string_view::npos) {
    std::tie(m.a, m.b) = parse_linear(field, text);
  } else {
    std::tie(m.a, m.b) = parse_linear(field, text.substr(0, slash));
    std::tie(m.c, m.d) = parse_linear(field, text.substr(slash + 1));
  }
  if (m.det().code == 0) raise(ErrorKind::ParseError, "singular transformation '" + std::string(text) + "'");
  return m;
}

Moebius parse_moebius(const FieldPtr& field, std::string_view text) { return parse_mat2(field, text).normalized(); }

}  // namespace orbitpoly
