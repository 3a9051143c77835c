#include "orbitpoly/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <utility>

#include "orbitpoly/config.hpp"
#include "orbitpoly/error.hpp"

namespace orbitpoly {

struct Field::Private {};

// ---------------------------------------------------------------------------
// integer helpers

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::uint32_t, unsigned> prime_power_decompose(std::uint64_t q) {
  auto primes = prime_divisors(q);
  if (q < 2 || primes.size() != 1) raise(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
  unsigned m = 0;
  while (q > 1) {
    q /= primes[0];
    ++m;
  }
  return {static_cast<std::uint32_t>(primes[0]), m};
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base)
      raise(ErrorKind::SizeCapExceeded,
            std::to_string(base) + "^" + std::to_string(exp) + " exceeds " + std::to_string(limit));
    r *= base;
  }
  if (r > limit) raise(ErrorKind::SizeCapExceeded, std::to_string(r) + " exceeds " + std::to_string(limit));
  return r;
}

namespace {

// Dense polynomials over F_p used only while choosing a modulus.
using Vec = std::vector<std::uint32_t>;

Vec poly_mod_p(Vec a, const Vec& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv_lc = [&] {
    std::uint64_t r = 1, b = m.back(), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }();
  while (a.size() > dm) {
    std::uint64_t t = a.back() * inv_lc % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - t * m[j] % p) % p);
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Trial division by every monic polynomial of degree <= m/2.
bool irreducible_mod_p(const Vec& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return true;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, unsigned>, FieldPtr>& registry() {
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> r;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

Field::Field(const Private&, Kind kind, std::uint32_t p, unsigned degree, FieldPtr base,
             std::vector<Elem> modulus)
    : kind_(kind), p_(p), degree_(degree), base_(std::move(base)), modulus_(std::move(modulus)) {
  coeff_card_ = kind_ == Kind::Extension ? base_->card() : p_;
  abs_degree_ = kind_ == Kind::Extension ? base_->absolute_degree() * degree_ : degree_;
  card_ = checked_pow(coeff_card_, degree_, kMaxFieldCard);
}

FieldPtr Field::create(std::uint32_t p, unsigned m) {
  if (!orbitpoly::is_prime(p)) raise(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (m == 0) raise(ErrorKind::UsageError, "extension degree must be at least 1");
  const std::uint64_t card = checked_pow(p, m, limits().enumeration_cap);

  std::lock_guard lock(registry_mutex());
  auto key = std::make_pair(p, m);
  if (auto it = registry().find(key); it != registry().end()) return it->second;

  std::vector<Elem> modulus;
  if (m > 1) {
    // Smallest code sum c_i p^i over the non-leading coefficients.
    for (std::uint64_t code = 0; code < card; ++code) {
      Vec f(m + 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[m] = 1;
      if (f[0] == 0) continue;
      if (irreducible_mod_p(f, p)) {
        for (auto v : f) modulus.push_back(Elem{v});
        break;
      }
    }
    ensure(!modulus.empty(), "no irreducible modulus found");
  }
  auto field = std::make_shared<Field>(Private{}, m == 1 ? Kind::Prime : Kind::Power, p, m, nullptr,
                                       std::move(modulus));
  field->build_tables();
  ensure(field->card() == card, "field cardinality mismatch");
  registry().emplace(key, field);
  return field;
}

FieldPtr Field::make_extension(const FieldPtr& base, std::vector<Elem> monic_modulus) {
  if (!base) raise(ErrorKind::UsageError, "extension of a null field");
  if (base->is_extension()) raise(ErrorKind::TowerTooDeep, "extensions of extensions are not supported");
  if (monic_modulus.size() < 3) raise(ErrorKind::UsageError, "extension modulus must have degree >= 2");
  if (monic_modulus.back() != base->one()) raise(ErrorKind::UsageError, "extension modulus must be monic");
  const unsigned k = static_cast<unsigned>(monic_modulus.size() - 1);
  checked_pow(base->card(), k, kMaxFieldCard);
  if (k > kMaxDigits) raise(ErrorKind::SizeCapExceeded, "extension degree too large");
  auto field = std::make_shared<Field>(Private{}, Kind::Extension, base->characteristic(), k, base,
                                       std::move(monic_modulus));
  field->build_frobenius_basis();
  return field;
}

void Field::build_tables() {
  const std::uint64_t q = card_;
  exp_.assign(q, 0);
  log_.assign(q, 0);
  const std::uint64_t order = q - 1;
  auto slow_pow = [&](Elem x, std::uint64_t e) {
    Elem r{1};
    while (e) {
      if (e & 1) r = poly_mul_mod(r, x);
      x = poly_mul_mod(x, x);
      e >>= 1;
    }
    return r;
  };
  const auto primes = prime_divisors(order);
  Elem g{0};
  for (std::uint64_t c = 1; c < q; ++c) {
    bool ok = true;
    for (auto l : primes) {
      if (slow_pow(Elem{c}, order / l) == Elem{1}) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = Elem{c};
      break;
    }
  }
  ensure(g.code != 0 || q == 2, "no primitive element");
  if (q == 2) g = Elem{1};
  Elem x{1};
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x.code);
    log_[x.code] = static_cast<std::uint32_t>(i);
    x = poly_mul_mod(x, g);
  }
}

void Field::build_frobenius_basis() {
  // Row i holds the coordinates of y^(Q*i).
  const unsigned k = degree_;
  frob_digits_.assign(static_cast<std::size_t>(k) * k, 0);
  Elem yq = pow(root(), coeff_card_);
  Elem cur = one();
  for (unsigned i = 0; i < k; ++i) {
    Digits d{};
    decode(cur, d);
    for (unsigned j = 0; j < k; ++j) frob_digits_[i * k + j] = d[j];
    cur = mul(cur, yq);
  }
}

// ---------------------------------------------------------------------------
// coefficient-level arithmetic

std::uint64_t Field::cadd(std::uint64_t a, std::uint64_t b) const noexcept {
  if (kind_ == Kind::Extension) return base_->add(Elem{a}, Elem{b}).code;
  std::uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

std::uint64_t Field::csub(std::uint64_t a, std::uint64_t b) const noexcept {
  if (kind_ == Kind::Extension) return base_->sub(Elem{a}, Elem{b}).code;
  return a >= b ? a - b : a + p_ - b;
}

std::uint64_t Field::cmul(std::uint64_t a, std::uint64_t b) const noexcept {
  if (kind_ == Kind::Extension) return base_->mul(Elem{a}, Elem{b}).code;
  return a * b % p_;
}

unsigned Field::decode(Elem x, Digits& out) const noexcept {
  std::uint64_t c = x.code;
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = c % coeff_card_;
    c /= coeff_card_;
  }
  return degree_;
}

Elem Field::encode(const Digits& d, unsigned n) const noexcept {
  std::uint64_t c = 0;
  for (unsigned i = n; i-- > 0;) c = c * coeff_card_ + d[i];
  return Elem{c};
}

Elem Field::poly_mul_mod(Elem x, Elem y) const noexcept {
  const unsigned k = degree_;
  Digits a{}, b{};
  decode(x, a);
  decode(y, b);
  std::array<std::uint64_t, 2 * kMaxDigits> r{};
  for (unsigned i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      r[i + j] = cadd(r[i + j], cmul(a[i], b[j]));
    }
  }
  for (unsigned i = 2 * k - 1; i-- > k;) {
    const std::uint64_t t = r[i];
    if (t == 0) continue;
    r[i] = 0;
    for (unsigned j = 0; j < k; ++j) {
      if (modulus_[j].code == 0) continue;
      r[i - k + j] = csub(r[i - k + j], cmul(t, modulus_[j].code));
    }
  }
  Digits out{};
  std::copy_n(r.begin(), k, out.begin());
  return encode(out, k);
}

// ---------------------------------------------------------------------------
// field operations

Elem Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint64_t>(r)};
}

Elem Field::add(Elem x, Elem y) const noexcept {
  if (kind_ == Kind::Prime) {
    std::uint64_t s = x.code + y.code;
    return Elem{s >= p_ ? s - p_ : s};
  }
  if (x.code == 0) return y;
  if (y.code == 0) return x;
  Digits a{}, b{};
  decode(x, a);
  decode(y, b);
  for (unsigned i = 0; i < degree_; ++i) a[i] = cadd(a[i], b[i]);
  return encode(a, degree_);
}

Elem Field::sub(Elem x, Elem y) const noexcept {
  if (kind_ == Kind::Prime) return Elem{x.code >= y.code ? x.code - y.code : x.code + p_ - y.code};
  if (y.code == 0) return x;
  Digits a{}, b{};
  decode(x, a);
  decode(y, b);
  for (unsigned i = 0; i < degree_; ++i) a[i] = csub(a[i], b[i]);
  return encode(a, degree_);
}

Elem Field::neg(Elem x) const noexcept { return sub(zero(), x); }

Elem Field::mul(Elem x, Elem y) const noexcept {
  if (x.code == 0 || y.code == 0) return zero();
  if (kind_ == Kind::Prime) return Elem{x.code * y.code % p_};
  if (kind_ == Kind::Power) {
    const std::uint64_t order = card_ - 1;
    std::uint64_t e = static_cast<std::uint64_t>(log_[x.code]) + log_[y.code];
    if (e >= order) e -= order;
    return Elem{exp_[e]};
  }
  // Scalar fast path: base elements embed as codes below Q.
  if (x.code < coeff_card_ || y.code < coeff_card_) {
    if (y.code < coeff_card_) std::swap(x, y);
    Digits b{};
    decode(y, b);
    for (unsigned i = 0; i < degree_; ++i) b[i] = cmul(x.code, b[i]);
    return encode(b, degree_);
  }
  return poly_mul_mod(x, y);
}

Elem Field::inv(Elem x) const {
  if (x.code == 0) raise(ErrorKind::DivisionByZero, "inverse of zero in " + name());
  if (kind_ != Kind::Extension) {
    const std::uint64_t order = card_ - 1;
    return Elem{exp_[(order - log_[x.code]) % order]};
  }
  return ext_inv(x);
}

Elem Field::ext_inv(Elem x) const {
  if (x.code < coeff_card_) return Elem{base_->inv(x).code};
  // Extended Euclid over the base: find u with u*x == 1 mod modulus.
  const Field& K = *base_;
  using Poly = std::vector<std::uint64_t>;
  auto trim = [](Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  };
  Digits d{};
  decode(x, d);
  Poly r0(modulus_.size()), r1(d.begin(), d.begin() + degree_);
  for (std::size_t i = 0; i < modulus_.size(); ++i) r0[i] = modulus_[i].code;
  trim(r1);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    // r0 = q*r1 + r
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    Poly r = r0;
    const std::uint64_t inv_lc = K.inv(Elem{r1.back()}).code;
    while (r.size() >= r1.size() && !r.empty()) {
      std::uint64_t t = K.mul(Elem{r.back()}, Elem{inv_lc}).code;
      std::size_t shift = r.size() - r1.size();
      q[shift] = t;
      for (std::size_t j = 0; j < r1.size(); ++j)
        r[shift + j] = K.sub(Elem{r[shift + j]}, K.mul(Elem{t}, Elem{r1[j]})).code;
      trim(r);
    }
    // s = s0 - q*s1
    Poly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        qs[i + j] = K.add(Elem{qs[i + j]}, K.mul(Elem{q[i]}, Elem{s1[j]})).code;
    Poly s(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::uint64_t a = i < s0.size() ? s0[i] : 0;
      std::uint64_t b = i < qs.size() ? qs[i] : 0;
      s[i] = K.sub(Elem{a}, Elem{b}).code;
    }
    trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant; x * s0 == r0.
  ensure(r0.size() == 1, "extension modulus is not irreducible");
  const std::uint64_t c = K.inv(Elem{r0[0]}).code;
  Digits out{};
  for (std::size_t i = 0; i < s0.size() && i < degree_; ++i) out[i] = K.mul(Elem{s0[i]}, Elem{c}).code;
  return encode(out, degree_);
}

Elem Field::pow(Elem x, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (x.code == 0) return zero();
  const std::uint64_t order = card_ - 1;
  e %= order;
  if (kind_ != Kind::Extension) {
    __extension__ using u128 = unsigned __int128;
    const u128 t = static_cast<u128>(log_[x.code]) * e;
    return Elem{exp_[static_cast<std::uint64_t>(t % order)]};
  }
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Elem Field::frobenius(Elem x, std::uint64_t e) const noexcept {
  if (kind_ != Kind::Extension) return x;
  const unsigned k = degree_;
  e %= k;
  for (std::uint64_t step = 0; step < e; ++step) {
    Digits c{};
    decode(x, c);
    Digits r{};
    for (unsigned i = 0; i < k; ++i) {
      if (c[i] == 0) continue;
      for (unsigned j = 0; j < k; ++j) {
        const std::uint64_t v = frob_digits_[i * k + j];
        if (v != 0) r[j] = cadd(r[j], cmul(c[i], v));
      }
    }
    x = encode(r, k);
  }
  return x;
}

std::uint32_t Field::absolute_trace(Elem x) const noexcept {
  Elem t = zero();
  Elem cur = x;
  for (unsigned j = 0; j < abs_degree_; ++j) {
    t = add(t, cur);
    cur = pow(cur, p_);
  }
  return static_cast<std::uint32_t>(t.code);
}

bool Field::is_square(Elem x) const noexcept {
  if (x.code == 0 || p_ == 2) return true;
  return pow(x, (card_ - 1) / 2) == one();
}

Elem Field::primitive_element() const {
  if (kind_ == Kind::Extension) raise(ErrorKind::UsageError, "primitive element requested for an extension");
  return Elem{card_ == 2 ? 1 : exp_[1]};
}

std::vector<Elem> Field::coords(Elem x) const {
  Digits d{};
  decode(x, d);
  std::vector<Elem> out(degree_);
  for (unsigned i = 0; i < degree_; ++i) out[i] = Elem{d[i]};
  return out;
}

Elem Field::from_coords(std::span<const Elem> c) const {
  if (c.size() > degree_) raise(ErrorKind::ParseError, "too many coordinates for " + name());
  Digits d{};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].code >= coeff_card_) raise(ErrorKind::ParseError, "coordinate out of range for " + name());
    d[i] = c[i].code;
  }
  return encode(d, degree_);
}

std::string Field::format(Elem x) const {
  if (kind_ == Kind::Prime) return std::to_string(x.code);
  std::string s = "[";
  auto c = coords(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += kind_ == Kind::Extension ? base_->format(c[i]) : std::to_string(c[i].code);
  }
  return s + "]";
}

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Elem Field::parse(std::string_view text) const {
  text = trim_view(text);
  if (text.empty()) raise(ErrorKind::ParseError, "empty field element");
  if (text.front() == '[') {
    if (kind_ == Kind::Prime || text.back() != ']')
      raise(ErrorKind::ParseError, "unexpected coordinate vector '" + std::string(text) + "' for " + name());
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<Elem> c;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        auto part = body.substr(start, i - start);
        if (kind_ == Kind::Extension)
          c.push_back(base_->parse(part));
        else
          c.push_back(Field::create(p_)->parse(part));
        start = i + 1;
      } else if (body[i] == '[') {
        ++depth;
      } else if (body[i] == ']') {
        --depth;
      }
    }
    return from_coords(c);
  }
  std::int64_t v = 0;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    raise(ErrorKind::ParseError, "cannot parse field element '" + std::string(text) + "'");
  return from_int(negative ? -v : v);
}

std::string Field::name() const {
  if (kind_ == Kind::Extension) return "F_" + std::to_string(base_->card()) + "^" + std::to_string(degree_);
  return "F_" + std::to_string(card_);
}

// ---------------------------------------------------------------------------

bool same_field(const Field& a, const Field& b) noexcept {
  if (&a == &b) return true;
  if (a.kind() != b.kind() || a.characteristic() != b.characteristic() || a.card() != b.card()) return false;
  auto ma = a.modulus(), mb = b.modulus();
  if (!std::equal(ma.begin(), ma.end(), mb.begin(), mb.end())) return false;
  if (a.is_extension()) return same_field(*a.base(), *b.base());
  return true;
}

bool embeds_into(const Field& f, const Field& ext) noexcept {
  if (same_field(f, ext)) return true;
  // Codes below p are the prime subfield in every representation.
  if (f.is_prime() && f.characteristic() == ext.characteristic()) return true;
  return ext.is_extension() && same_field(f, *ext.base());
}

void require_same_field(const Field& a, const Field& b, std::string_view where) {
  if (!same_field(a, b))
    raise(ErrorKind::CtxMismatch, std::string(where) + ": " + a.name() + " vs " + b.name());
}

}  // namespace orbitpoly
