// Exact arithmetic in the supported base fields: Q, F_p (p an odd prime) and
// simple algebraic extensions K[z]/(m). Towers of extensions are allowed and
// always terminate at Q or F_p. Characteristic 2 is rejected throughout.
//
// Also provides: univariate polynomials over any of these fields (UPoly),
// trace and minimal polynomial of extension elements, separability testing,
// and square classes with canonical representatives.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gwdeg/errors.hpp"
#include "gwdeg/numeric.hpp"

namespace gwdeg {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Element {
public:
  Element() = default;
  Element(FieldPtr field, Rat value);
  Element(FieldPtr field, long long residue);
  Element(FieldPtr field, std::vector<Element> coords);

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element operator-() const;
  Element inverse() const;
  Element pow(long e) const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
  /// Total order on elements of one field; used for canonical storage only.
  int cmp(const Element& o) const;

  const Rat& rat() const { return std::get<Rat>(rep_); }
  long long residue() const { return std::get<long long>(rep_); }
  const std::vector<Element>& coords() const { return std::get<std::vector<Element>>(rep_); }

  /// Sign of a rational element (fails on other fields).
  int sign() const;

  std::string str() const;

private:
  FieldPtr field_;
  std::variant<Rat, long long, std::vector<Element>> rep_;

  friend class Field;
};

class Field : public std::enable_shared_from_this<Field> {
public:
  enum class Kind { rationals, prime_field, extension };

  static FieldPtr rationals();
  static FieldPtr prime_field(long long p);
  /// K[gen]/(minpoly), minpoly monic of degree >= 2 with coefficients in base,
  /// listed low to high. Irreducibility is the caller's contract; the cheap
  /// degree-2 discriminant check is performed where the base supports it.
  static FieldPtr extension(FieldPtr base, std::vector<Element> minpoly, std::string gen);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }
  bool is_extension() const { return kind_ == Kind::extension; }

  long long prime() const { return p_; }
  const FieldPtr& base() const { return base_; }
  const std::vector<Element>& minpoly() const { return minpoly_; }
  const std::string& generator_name() const { return gen_; }
  int ext_degree() const { return static_cast<int>(minpoly_.size()) - 1; }

  /// 0 for characteristic zero, else the prime at the bottom of the tower.
  Int characteristic() const;
  long absolute_degree() const;

  bool equals(const Field& o) const;
  std::string name() const;

  Element zero() const;
  Element one() const;
  Element from_int(long long n) const;
  Element from_int(const Int& n) const;
  Element from_rat(const Rat& q) const;
  Element generator() const;
  Element make(std::vector<Element> coords) const;
  /// Embed an element of the immediate base field.
  Element embed(const Element& base_elt) const;

private:
  Kind kind_ = Kind::rationals;
  long long p_ = 0;
  FieldPtr base_;
  std::vector<Element> minpoly_;
  std::string gen_;

  Field() = default;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && a->equals(*b));
}

inline void require_same_field(const Element& a, const Element& b) {
  if (!same_field(a.field(), b.field()))
    fail(Errc::descriptor_mismatch, "elements of different fields");
}

/// Embed an element of a field somewhere down the tower of `target` into `target`.
inline Element embed_into(const Element& e, const FieldPtr& target) {
  if (same_field(e.field(), target)) return e;
  if (!target->is_extension())
    fail(Errc::descriptor_mismatch, "element does not belong to the target tower");
  return target->embed(embed_into(e, target->base()));
}

// ---------------------------------------------------------------------------
// Univariate polynomials over a field (dense, coeff[i] of x^i, trimmed).

struct UPoly {
  FieldPtr k;
  std::vector<Element> c;

  UPoly() = default;
  UPoly(FieldPtr field, std::vector<Element> coeffs) : k(std::move(field)), c(std::move(coeffs)) { trim(); }

  static UPoly zero(const FieldPtr& k) { return UPoly(k, {}); }
  static UPoly constant(const Element& a) { return UPoly(a.field(), {a}); }
  static UPoly x(const FieldPtr& k) { return UPoly(k, {k->zero(), k->one()}); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const Element& lead() const { return c.back(); }
  Element coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : k->zero();
  }
  bool is_monic() const { return !c.empty() && c.back().is_one(); }

  UPoly operator+(const UPoly& o) const {
    std::vector<Element> r(std::max(c.size(), o.c.size()), k->zero());
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return UPoly(k, std::move(r));
  }
  UPoly operator-(const UPoly& o) const {
    std::vector<Element> r(std::max(c.size(), o.c.size()), k->zero());
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return UPoly(k, std::move(r));
  }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(k);
    std::vector<Element> r(c.size() + o.c.size() - 1, k->zero());
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r[i + j] = r[i + j] + c[i] * o.c[j];
    return UPoly(k, std::move(r));
  }
  UPoly scaled(const Element& a) const {
    std::vector<Element> r = c;
    for (auto& x : r) x = x * a;
    return UPoly(k, std::move(r));
  }
  UPoly shifted(int n) const {  // * x^n
    if (is_zero()) return *this;
    std::vector<Element> r(c.size() + n, k->zero());
    for (size_t i = 0; i < c.size(); ++i) r[i + n] = c[i];
    return UPoly(k, std::move(r));
  }

  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
    UPoly q = zero(k), r = *this;
    Element dl_inv = d.lead().inverse();
    while (!r.is_zero() && r.deg() >= d.deg()) {
      Element f = r.lead() * dl_inv;
      int s = r.deg() - d.deg();
      q = q + UPoly(k, {f}).shifted(s);
      r = r - d.scaled(f).shifted(s);
    }
    return {q, r};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
  }

  UPoly derivative() const {
    if (c.size() <= 1) return zero(k);
    std::vector<Element> r(c.size() - 1, k->zero());
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * k->from_int(static_cast<long long>(i));
    return UPoly(k, std::move(r));
  }

  Element eval(const Element& x) const {
    Element acc = k->zero();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  bool operator==(const UPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }

  std::string str(const std::string& var = "x") const;
};

inline UPoly poly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// g = gcd(a,b) monic together with s,t such that s*a + t*b = g.
inline std::tuple<UPoly, UPoly, UPoly> poly_xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(a.k->one()), s1 = UPoly::zero(a.k);
  UPoly t0 = UPoly::zero(a.k), t1 = UPoly::constant(a.k->one());
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Element li = r0.lead().inverse();
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

UPoly poly_powmod(const UPoly& base, const Int& e, const UPoly& mod);

// ---------------------------------------------------------------------------
// Field definitions.

namespace detail {
inline __int128 i128(long long x) { return static_cast<__int128>(x); }
inline long long mulmod_ll(long long a, long long b, long long p) {
  return static_cast<long long>((i128(a) * i128(b)) % i128(p));
}
inline long long addmod_ll(long long a, long long b, long long p) { return (a + b) % p; }
inline long long powmod_ll(long long a, long long e, long long p) {
  long long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod_ll(r, a, p);
    a = mulmod_ll(a, a, p);
    e >>= 1;
  }
  return r;
}
inline long long invmod_ll(long long a, long long p) {
  if (a % p == 0) fail(Errc::division_by_zero, "division by zero in F_p");
  return powmod_ll(a, p - 2, p);
}
}  // namespace detail

inline FieldPtr Field::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::rationals;
    return FieldPtr(f);
  }();
  return q;
}

inline FieldPtr Field::prime_field(long long p) {
  if (p == 2) fail(Errc::parse_error, "characteristic 2 is not supported");
  if (p < 3 || p > (1LL << 61) || !is_probable_prime(Int(p)))
    fail(Errc::parse_error, "field characteristic must be an odd prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::prime_field;
  f->p_ = p;
  return FieldPtr(f);
}

inline Int Field::characteristic() const {
  switch (kind_) {
    case Kind::rationals: return 0;
    case Kind::prime_field: return Int(p_);
    case Kind::extension: return base_->characteristic();
  }
  return 0;
}

inline long Field::absolute_degree() const {
  return kind_ == Kind::extension ? ext_degree() * base_->absolute_degree() : 1;
}

inline bool Field::equals(const Field& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::rationals: return true;
    case Kind::prime_field: return p_ == o.p_;
    case Kind::extension: {
      if (!base_->equals(*o.base_)) return false;
      if (minpoly_.size() != o.minpoly_.size()) return false;
      for (size_t i = 0; i < minpoly_.size(); ++i)
        if (!(minpoly_[i] == o.minpoly_[i])) return false;
      return true;
    }
  }
  return false;
}

inline Element Field::zero() const { return from_int(0LL); }
inline Element Field::one() const { return from_int(1LL); }

inline Element Field::from_int(long long n) const {
  auto self = shared_from_this();
  switch (kind_) {
    case Kind::rationals: return Element(self, Rat(n));
    case Kind::prime_field: {
      long long r = n % p_;
      if (r < 0) r += p_;
      return Element(self, r);
    }
    case Kind::extension: {
      std::vector<Element> cs(static_cast<size_t>(ext_degree()), base_->zero());
      cs[0] = base_->from_int(n);
      return Element(self, std::move(cs));
    }
  }
  fail(Errc::unsupported_field, "bad field kind");
}

inline Element Field::from_int(const Int& n) const {
  auto self = shared_from_this();
  switch (kind_) {
    case Kind::rationals: return Element(self, Rat(n));
    case Kind::prime_field: {
      Int r = mod_pos(n, Int(p_));
      return Element(self, r.convert_to<long long>());
    }
    case Kind::extension: {
      std::vector<Element> cs(static_cast<size_t>(ext_degree()), base_->zero());
      cs[0] = base_->from_int(n);
      return Element(self, std::move(cs));
    }
  }
  fail(Errc::unsupported_field, "bad field kind");
}

inline Element Field::from_rat(const Rat& q) const {
  auto self = shared_from_this();
  switch (kind_) {
    case Kind::rationals: return Element(self, q);
    case Kind::prime_field: {
      Int d = mod_pos(rat_den(q), Int(p_));
      if (d == 0) fail(Errc::division_by_zero, "denominator divisible by p");
      Int r = rat_mod(q, Int(p_));
      return Element(self, r.convert_to<long long>());
    }
    case Kind::extension: return embed(base_->from_rat(q));
  }
  fail(Errc::unsupported_field, "bad field kind");
}

inline Element Field::generator() const {
  if (kind_ != Kind::extension) fail(Errc::not_an_extension, "field has no generator");
  std::vector<Element> cs(static_cast<size_t>(ext_degree()), base_->zero());
  cs[1] = base_->one();
  return Element(shared_from_this(), std::move(cs));
}

inline Element Field::make(std::vector<Element> coords) const {
  if (kind_ != Kind::extension) fail(Errc::not_an_extension, "coordinate vectors need an extension field");
  if (coords.size() != static_cast<size_t>(ext_degree()))
    fail(Errc::descriptor_mismatch, "coordinate vector of wrong length");
  for (const auto& x : coords)
    if (!same_field(x.field(), base_)) fail(Errc::descriptor_mismatch, "coordinates must lie in the base field");
  return Element(shared_from_this(), std::move(coords));
}

inline Element Field::embed(const Element& base_elt) const {
  if (kind_ != Kind::extension) fail(Errc::not_an_extension, "embed needs an extension field");
  if (!same_field(base_elt.field(), base_)) fail(Errc::descriptor_mismatch, "embed: element not in base field");
  std::vector<Element> cs(static_cast<size_t>(ext_degree()), base_->zero());
  cs[0] = base_elt;
  return Element(shared_from_this(), std::move(cs));
}

// Element essentials -------------------------------------------------------

inline Element::Element(FieldPtr field, Rat value) : field_(std::move(field)), rep_(std::move(value)) {}
inline Element::Element(FieldPtr field, long long residue) : field_(std::move(field)), rep_(residue) {}
inline Element::Element(FieldPtr field, std::vector<Element> coords)
    : field_(std::move(field)), rep_(std::move(coords)) {}

inline bool Element::is_zero() const {
  switch (field_->kind()) {
    case Field::Kind::rationals: return rat() == 0;
    case Field::Kind::prime_field: return residue() == 0;
    case Field::Kind::extension:
      for (const auto& x : coords())
        if (!x.is_zero()) return false;
      return true;
  }
  return false;
}

inline bool Element::is_one() const {
  switch (field_->kind()) {
    case Field::Kind::rationals: return rat() == 1;
    case Field::Kind::prime_field: return residue() == 1;
    case Field::Kind::extension: {
      if (!coords()[0].is_one()) return false;
      for (size_t i = 1; i < coords().size(); ++i)
        if (!coords()[i].is_zero()) return false;
      return true;
    }
  }
  return false;
}

namespace detail {
// Multiplication of extension coordinate vectors: convolution reduced mod minpoly.
inline std::vector<Element> ext_mul(const Field& L, const std::vector<Element>& a, const std::vector<Element>& b) {
  const auto& base = L.base();
  int d = L.ext_degree();
  std::vector<Element> prod(static_cast<size_t>(2 * d - 1), base->zero());
  for (int i = 0; i < d; ++i) {
    if (a[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d; ++j)
      prod[static_cast<size_t>(i + j)] =
          prod[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  }
  // reduce: z^d = -(m_0 + m_1 z + ... + m_{d-1} z^{d-1})
  const auto& m = L.minpoly();
  for (int t = 2 * d - 2; t >= d; --t) {
    Element top = prod[static_cast<size_t>(t)];
    if (top.is_zero()) continue;
    prod[static_cast<size_t>(t)] = base->zero();
    for (int j = 0; j < d; ++j)
      prod[static_cast<size_t>(t - d + j)] = prod[static_cast<size_t>(t - d + j)] - top * m[static_cast<size_t>(j)];
  }
  prod.resize(static_cast<size_t>(d));
  return prod;
}
}  // namespace detail

inline Element Element::operator+(const Element& o) const {
  require_same_field(*this, o);
  switch (field_->kind()) {
    case Field::Kind::rationals: return Element(field_, rat() + o.rat());
    case Field::Kind::prime_field: return Element(field_, (residue() + o.residue()) % field_->prime());
    case Field::Kind::extension: {
      std::vector<Element> r = coords();
      for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + o.coords()[i];
      return Element(field_, std::move(r));
    }
  }
  fail(Errc::unsupported_field, "bad field kind");
}

inline Element Element::operator-() const {
  switch (field_->kind()) {
    case Field::Kind::rationals: return Element(field_, -rat());
    case Field::Kind::prime_field: return Element(field_, residue() == 0 ? 0 : field_->prime() - residue());
    case Field::Kind::extension: {
      std::vector<Element> r = coords();
      for (auto& x : r) x = -x;
      return Element(field_, std::move(r));
    }
  }
  fail(Errc::unsupported_field, "bad field kind");
}

inline Element Element::operator-(const Element& o) const { return *this + (-o); }

inline Element Element::operator*(const Element& o) const {
  require_same_field(*this, o);
  switch (field_->kind()) {
    case Field::Kind::rationals: return Element(field_, rat() * o.rat());
    case Field::Kind::prime_field:
      return Element(field_, detail::mulmod_ll(residue(), o.residue(), field_->prime()));
    case Field::Kind::extension:
      return Element(field_, detail::ext_mul(*field_, coords(), o.coords()));
  }
  fail(Errc::unsupported_field, "bad field kind");
}

inline Element Element::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  switch (field_->kind()) {
    case Field::Kind::rationals: return Element(field_, Rat(1) / rat());
    case Field::Kind::prime_field:
      return Element(field_, detail::invmod_ll(residue(), field_->prime()));
    case Field::Kind::extension: {
      // xgcd against the minimal polynomial over the base field
      UPoly a(field_->base(), coords());
      UPoly m(field_->base(), field_->minpoly());
      auto [g, s, t] = poly_xgcd(a, m);
      (void)t;
      if (g.deg() != 0)
        fail(Errc::division_by_zero, "non-invertible element (reducible minimal polynomial?)");
      UPoly inv = s.scaled(g.c[0].inverse());
      std::vector<Element> r(static_cast<size_t>(field_->ext_degree()), field_->base()->zero());
      for (size_t i = 0; i < inv.c.size(); ++i) r[i] = inv.c[i];
      return Element(field_, std::move(r));
    }
  }
  fail(Errc::unsupported_field, "bad field kind");
}

inline Element Element::operator/(const Element& o) const {
  if (o.is_zero()) fail(Errc::division_by_zero, "division by zero");
  return *this * o.inverse();
}

inline Element Element::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Element acc = field_->one(), b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

inline bool Element::operator==(const Element& o) const {
  require_same_field(*this, o);
  return cmp(o) == 0;
}

inline int Element::cmp(const Element& o) const {
  switch (field_->kind()) {
    case Field::Kind::rationals: return rat() < o.rat() ? -1 : (rat() == o.rat() ? 0 : 1);
    case Field::Kind::prime_field: return residue() < o.residue() ? -1 : (residue() == o.residue() ? 0 : 1);
    case Field::Kind::extension: {
      for (size_t i = coords().size(); i-- > 0;) {
        int c = coords()[i].cmp(o.coords()[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

inline int Element::sign() const {
  if (!field_->is_rationals()) fail(Errc::unsupported_field, "sign needs a rational element");
  return rat_sign(rat());
}

struct ElementLess {
  bool operator()(const Element& a, const Element& b) const { return a.cmp(b) < 0; }
};

inline std::string Element::str() const {
  switch (field_->kind()) {
    case Field::Kind::rationals: return rat_str(rat());
    case Field::Kind::prime_field: return std::to_string(residue());
    case Field::Kind::extension: {
      const std::string& g = field_->generator_name();
      std::string out;
      for (int i = static_cast<int>(coords().size()) - 1; i >= 0; --i) {
        const Element& ci = coords()[static_cast<size_t>(i)];
        if (ci.is_zero()) continue;
        std::string cs = ci.str();
        bool neg = !cs.empty() && cs[0] == '-';
        std::string body = neg ? cs.substr(1) : cs;
        bool composite = body.find_first_of("+-*/^") != std::string::npos;
        std::string term;
        if (i == 0) {
          term = composite ? "(" + body + ")" : body;
          if (composite) neg = false, term = "(" + cs + ")";
        } else {
          std::string xpow = (i == 1) ? g : g + "^" + std::to_string(i);
          if (body == "1" && !composite)
            term = xpow;
          else if (composite)
            term = "(" + cs + ")*" + xpow, neg = false;
          else
            term = body + "*" + xpow;
        }
        if (out.empty())
          out = (neg ? "-" : "") + term;
        else
          out += (neg ? " - " : " + ") + term;
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

inline std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    Element ci = coeff(i);
    if (ci.is_zero()) continue;
    std::string cs = ci.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string body = neg ? cs.substr(1) : cs;
    bool composite = body.find_first_of("+-*/^") != std::string::npos;
    std::string term;
    if (i == 0) {
      term = composite ? "(" + cs + ")" : body;
      if (composite) neg = false;
    } else {
      std::string xpow = (i == 1) ? var : var + "^" + std::to_string(i);
      if (body == "1" && !composite)
        term = xpow;
      else if (composite)
        term = "(" + cs + ")*" + xpow, neg = false;
      else
        term = body + "*" + xpow;
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

inline UPoly poly_powmod(const UPoly& base, const Int& e, const UPoly& mod) {
  UPoly acc = UPoly::constant(base.k->one());
  UPoly b = base.divmod(mod).second;
  Int n = e;
  while (n > 0) {
    if ((n & 1) != 0) acc = (acc * b).divmod(mod).second;
    b = (b * b).divmod(mod).second;
    n >>= 1;
  }
  return acc;
}

// Extension construction needs Element complete, so it lives down here.
inline FieldPtr Field::extension(FieldPtr base, std::vector<Element> minpoly, std::string gen) {
  if (!base) fail(Errc::parse_error, "extension needs a base field");
  if (minpoly.size() < 3) fail(Errc::parse_error, "minimal polynomial must have degree >= 2");
  for (const auto& cf : minpoly)
    if (!same_field(cf.field(), base)) fail(Errc::descriptor_mismatch, "minpoly coefficients must lie in the base");
  if (!minpoly.back().is_one()) fail(Errc::parse_error, "minimal polynomial must be monic");
  if (minpoly.size() == 3 && (base->is_rationals() || base->is_prime_field())) {
    // x^2 + b x + c is irreducible iff b^2 - 4c is a non-square
    Element b = minpoly[1], c0 = minpoly[0];
    Element disc = b * b - base->from_int(4) * c0;
    bool square;
    if (disc.is_zero()) {
      square = true;
    } else if (base->is_rationals()) {
      const Rat& q = disc.rat();
      square = rat_sign(q) > 0 && is_perfect_square(rat_num(q) * rat_den(q));
    } else {
      square = legendre(Int(disc.residue()), Int(base->prime())) == 1;
    }
    if (square) fail(Errc::parse_error, "minimal polynomial is reducible over the base field");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::extension;
  f->base_ = std::move(base);
  f->minpoly_ = std::move(minpoly);
  f->gen_ = gen.empty() ? "z" : std::move(gen);
  return FieldPtr(f);
}

inline std::string Field::name() const {
  switch (kind_) {
    case Kind::rationals: return "Q";
    case Kind::prime_field: return "F" + std::to_string(p_);
    case Kind::extension: {
      UPoly m(base_, minpoly_);
      return base_->name() + "[" + gen_ + "]/(" + m.str(gen_) + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Squares and square classes.

/// Whether a is a square in its field. Supported for Q and F_p only.
inline bool is_square(const Element& a) {
  if (a.is_zero()) fail(Errc::zero_input, "is_square(0)");
  switch (a.field()->kind()) {
    case Field::Kind::rationals: {
      const Rat& q = a.rat();
      return rat_sign(q) > 0 && is_perfect_square(rat_num(q) * rat_den(q));
    }
    case Field::Kind::prime_field:
      return legendre(Int(a.residue()), Int(a.field()->prime())) == 1;
    case Field::Kind::extension:
      fail(Errc::unsupported_field, "squareness is not decided over extension fields");
  }
  return false;
}

/// Least positive quadratic nonresidue mod p.
inline long long least_nonresidue(long long p) {
  for (long long n = 2; n < p; ++n)
    if (legendre(Int(n), Int(p)) == -1) return n;
  fail(Errc::unsupported_field, "no nonresidue found");
}

struct SquareClass {
  Element rep;

  static SquareClass of(const Element& a) {
    if (a.is_zero()) fail(Errc::zero_input, "square class of 0");
    switch (a.field()->kind()) {
      case Field::Kind::rationals: {
        Int sf = squarefree_part(rat_num(a.rat()) * rat_den(a.rat()));
        return SquareClass{a.field()->from_int(sf)};
      }
      case Field::Kind::prime_field: {
        long long p = a.field()->prime();
        bool sq = legendre(Int(a.residue()), Int(p)) == 1;
        return SquareClass{a.field()->from_int(sq ? 1 : least_nonresidue(p))};
      }
      case Field::Kind::extension:
        fail(Errc::unsupported_field, "square classes are not decided over extension fields");
    }
    fail(Errc::unsupported_field, "bad field kind");
  }

  const FieldPtr& field() const { return rep.field(); }
  bool is_trivial() const { return rep.is_one(); }
  SquareClass times(const SquareClass& o) const { return of(rep * o.rep); }
  bool operator==(const SquareClass& o) const { return rep == o.rep; }
  bool operator!=(const SquareClass& o) const { return !(*this == o); }
  int cmp(const SquareClass& o) const { return rep.cmp(o.rep); }
  std::string str() const { return rep.str(); }
};

inline SquareClass square_class(const Element& a) { return SquareClass::of(a); }

// ---------------------------------------------------------------------------
// Trace, minimal polynomial, separability for simple extensions.

/// Trace of multiplication-by-a on L viewed as a vector space over its base.
inline Element trace(const Element& a) {
  const FieldPtr& L = a.field();
  if (!L->is_extension()) fail(Errc::not_an_extension, "trace needs an extension element");
  int d = L->ext_degree();
  Element t = L->base()->zero();
  Element zpow = L->one();
  Element z = L->generator();
  for (int j = 0; j < d; ++j) {
    Element col = a * zpow;  // a * z^j
    t = t + col.coords()[static_cast<size_t>(j)];
    zpow = zpow * z;
  }
  return t;
}

/// Monic minimal polynomial of a over the base of its field, via the first
/// linear dependency among the powers 1, a, a^2, ...
inline UPoly minimal_polynomial(const Element& a) {
  const FieldPtr& L = a.field();
  if (!L->is_extension()) fail(Errc::not_an_extension, "minimal_polynomial needs an extension element");
  const FieldPtr& K = L->base();
  int n = L->ext_degree();
  // rows: reduced power vectors with their expression in powers of a
  std::vector<std::vector<Element>> rows, combos;
  std::vector<int> pivots;
  Element apow = L->one();
  for (int d = 0; d <= n; ++d) {
    std::vector<Element> v = apow.coords();
    std::vector<Element> combo(static_cast<size_t>(d + 1), K->zero());
    combo[static_cast<size_t>(d)] = K->one();
    for (size_t r = 0; r < rows.size(); ++r) {
      const Element& x = v[static_cast<size_t>(pivots[r])];
      if (x.is_zero()) continue;
      Element f = x;  // pivot rows are normalized to 1
      for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = v[static_cast<size_t>(j)] - f * rows[r][static_cast<size_t>(j)];
      for (size_t j = 0; j < combos[r].size(); ++j) combo[j] = combo[j] - f * combos[r][j];
    }
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (!v[static_cast<size_t>(j)].is_zero()) { piv = j; break; }
    if (piv < 0) return UPoly(K, std::move(combo));  // monic by construction
    Element inv = v[static_cast<size_t>(piv)].inverse();
    for (auto& x : v) x = x * inv;
    for (auto& x : combo) x = x * inv;
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(piv);
    apow = apow * a;
  }
  fail(Errc::degenerate_result, "no dependency among powers (unreachable)");
}

/// Separability of L over its base: gcd(m, m') = 1. Always true in char 0.
inline bool is_separable_extension(const FieldPtr& L) {
  if (!L->is_extension()) fail(Errc::not_an_extension, "separability needs an extension field");
  UPoly m(L->base(), L->minpoly());
  UPoly d = m.derivative();
  if (d.is_zero()) return false;
  return poly_gcd(m, d).deg() == 0;
}

}  // namespace gwdeg
