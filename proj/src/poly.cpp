#include "orbitpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "orbitpoly/error.hpp"

namespace orbitpoly {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t n) {
  std::vector<Elem> v(n + 1, Elem{0});
  v[n] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::variable(FieldPtr field) {
  Elem one = field->one();
  return monomial(std::move(field), one, 1);
}

Poly Poly::from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field->from_int(c));
  return Poly(std::move(field), std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lc()));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())));
  return Poly(field_, std::move(v));
}

Elem Poly::eval(Elem x) const {
  Elem r{0};
  for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
  return r;
}

Elem Poly::eval_in(const Field& ext, Elem x) const {
  if (!embeds_into(*field_, ext))
    raise(ErrorKind::CtxMismatch, "evaluation point lives in " + ext.name() + ", not over " + field_->name());
  Elem r{0};
  for (std::size_t i = c_.size(); i-- > 0;) r = ext.add(ext.mul(r, x), c_[i]);
  return r;
}

Poly Poly::lift(const FieldPtr& ext) const {
  if (!embeds_into(*field_, *ext))
    raise(ErrorKind::CtxMismatch, field_->name() + " does not embed into " + ext->name());
  return Poly(ext, c_);
}

Poly Poly::restrict_to(const FieldPtr& sub) const {
  if (!embeds_into(*sub, *field_))
    raise(ErrorKind::CtxMismatch, sub->name() + " is not a subfield of " + field_->name());
  for (auto c : c_)
    if (!sub->contains(c)) raise(ErrorKind::InvariantViolation, "coefficient outside " + sub->name());
  return Poly(sub, c_);
}

Poly Poly::shifted(std::size_t n) const {
  if (is_zero()) return *this;
  std::vector<Elem> v(n, Elem{0});
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(field_, std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(*field_, *o.field_, "poly add");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Elem{0});
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(*field_, *o.field_, "poly sub");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Elem{0});
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(*a.field_, *b.field_, "poly mul");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const Field& F = *a.field_;
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, Elem{0});
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].code == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].code == 0) continue;
      v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
    }
  }
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a) {
  std::vector<Elem> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_->neg(a.c_[i]);
  return Poly(a.field_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
  return same_field(*a.field_, *b.field_) && a.c_ == b.c_;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  require_same_field(a.F(), b.F(), "divrem");
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& F = a.F();
  if (a.degree() < b.degree()) return {Poly(a.field()), a};
  std::vector<Elem> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Elem> q(r.size() - db, Elem{0});
  const Elem inv_lc = F.inv(b.lc());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].code == 0) continue;
    const Elem t = F.mul(r[i], inv_lc);
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) {
      if (d[j].code == 0) continue;
      r[i - db + j] = F.sub(r[i - db + j], F.mul(t, d[j]));
    }
  }
  r.resize(db);
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const FieldPtr& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, f->one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f, f->one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s = s0 - q * s1;
    Poly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem c = f->inv(r0.lc());
  return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& f, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(f.field(), f.F().one()) % m;
  Poly base = f % m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return result;
}

Poly pow(const Poly& f, std::uint64_t e) {
  Poly result = Poly::constant(f.field(), f.F().one());
  Poly base = f;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly product(const FieldPtr& field, const std::vector<Poly>& factors) {
  Poly r = Poly::constant(field, field->one());
  for (const auto& f : factors) r *= f;
  return r;
}

std::uint64_t hash_value(const Poly& f) noexcept {
  // FNV-1a over the field size and coefficient codes.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(f.F().card());
  for (auto c : f.coeffs()) mix(c.code);
  return h;
}

std::string to_string(const Poly& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::string out;
  const Field& F = f.F();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Elem c = f.coeffs()[i];
    if (c.code == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c == F.one();
    if (i == 0) {
      out += F.format(c);
      continue;
    }
    if (!unit) out += F.format(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const FieldPtr& field, std::string_view text, char var) : field_(field), s_(text), var_(var) {}

  Poly run() {
    Poly acc(field_);
    skip_ws();
    if (at_end()) raise(ErrorKind::ParseError, "empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip_ws();
      Elem coeff = field_->one();
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '[') {
        coeff = parse_coeff();
        have_coeff = true;
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
        }
      }
      std::size_t exponent = 0;
      if (peek() == var_) {
        ++pos_;
        exponent = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          exponent = parse_uint();
        }
      } else if (!have_coeff) {
        fail("expected a coefficient or the variable");
      }
      if (negative) coeff = field_->neg(coeff);
      acc += Poly::monomial(field_, coeff, exponent);
      skip_ws();
    }
    return acc;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    raise(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  std::size_t parse_uint() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    std::size_t v = 0;
    std::from_chars(s_.data() + start, s_.data() + pos_, v);
    return v;
  }
  Elem parse_coeff() {
    if (peek() == '[') {
      std::size_t start = pos_;
      int depth = 0;
      do {
        if (peek() == '[') ++depth;
        if (peek() == ']') --depth;
        ++pos_;
      } while (!at_end() && depth > 0);
      if (depth != 0) fail("unbalanced brackets");
      return field_->parse(s_.substr(start, pos_ - start));
    }
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return field_->parse(s_.substr(start, pos_ - start));
  }

  const FieldPtr& field_;
  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text, char var) {
  return PolyParser(field, text, var).run();
}

}  // namespace orbitpoly
