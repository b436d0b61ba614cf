// The Grothendieck-Witt ring GW(k) for k = Q or F_p: formal Z-combinations of
// rank-one classes <a>, ring structure, hyperbolic elements, the fundamental
// ideal filtration, and normal forms that decide equality.
//
// Virtual elements (negative multiplicities) are first class. Equality is
// decided on hyperbolically stabilized honest representatives; the printed
// normal form carries the complete invariant tuple per field:
//   Q:   (rank, signature, discriminant, Hasse symbols by place)
//   F_p: (rank, discriminant)
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwdeg/form.hpp"

namespace gwdeg {

class GWElement {
public:
  explicit GWElement(FieldPtr k) : k_(std::move(k)) {}

  /// The rank-one class <a>.
  static GWElement generator(const FieldPtr& k, const Element& a) {
    GWElement x(k);
    x.add_class(square_class(a), 1);
    return x;
  }

  static GWElement zero(const FieldPtr& k) { return GWElement(k); }

  const FieldPtr& field() const { return k_; }
  const std::map<Element, long long, ElementLess>& classes() const { return m_; }
  bool is_zero() const { return m_.empty(); }

  GWElement operator+(const GWElement& o) const {
    require_compatible(o);
    GWElement r = *this;
    for (const auto& [c, m] : o.m_) r.insert(c, m);
    return r;
  }

  GWElement operator-() const {
    GWElement r(k_);
    for (const auto& [c, m] : m_) r.m_[c] = -m;
    return r;
  }

  GWElement operator-(const GWElement& o) const { return *this + (-o); }

  GWElement operator*(const GWElement& o) const {
    require_compatible(o);
    GWElement r(k_);
    for (const auto& [c1, m1] : m_)
      for (const auto& [c2, m2] : o.m_) r.insert_class(square_class(c1 * c2), m1 * m2);
    return r;
  }

  GWElement scaled(long long n) const {
    GWElement r(k_);
    if (n != 0)
      for (const auto& [c, m] : m_) r.m_[c] = m * n;
    return r;
  }

  /// Virtual rank |plus| - |minus|.
  long long rank() const {
    long long r = 0;
    for (const auto& [c, m] : m_) r += m;
    return r;
  }

  /// Signature via the real embedding; Q only.
  long long signature() const {
    if (!k_->is_rationals()) fail(Errc::unsupported_field, "signature needs GW(Q)");
    long long s = 0;
    for (const auto& [c, m] : m_) s += m * c.sign();
    return s;
  }

  /// Discriminant of the virtual class: product of generator classes.
  SquareClass disc() const {
    Element prod = k_->one();
    for (const auto& [c, m] : m_)
      if (m % 2 != 0) prod = prod * c;
    return square_class(prod);
  }

  std::vector<Element> plus_list() const {
    std::vector<Element> out;
    for (const auto& [c, m] : m_)
      for (long long i = 0; i < m; ++i) out.push_back(c);
    return out;
  }

  std::vector<Element> minus_list() const {
    std::vector<Element> out;
    for (const auto& [c, m] : m_)
      for (long long i = 0; i < -m; ++i) out.push_back(c);
    return out;
  }

private:
  FieldPtr k_;
  std::map<Element, long long, ElementLess> m_;  // canonical rep -> signed multiplicity

  void require_compatible(const GWElement& o) const {
    if (!same_field(k_, o.k_)) fail(Errc::descriptor_mismatch, "GW elements over different fields");
  }
  void insert(const Element& rep, long long m) {
    auto it = m_.find(rep);
    if (it == m_.end()) {
      if (m != 0) m_[rep] = m;
    } else {
      it->second += m;
      if (it->second == 0) m_.erase(it);
    }
  }
  void insert_class(const SquareClass& c, long long m) { insert(c.rep, m); }
  void add_class(const SquareClass& c, long long m) { insert(c.rep, m); }
};

inline GWElement gw_generator(const FieldPtr& k, long long a) {
  return GWElement::generator(k, k->from_int(a));
}

/// n * (<1> + <-1>).
inline GWElement hyperbolic(const FieldPtr& k, long long n) {
  if (n < 0) fail(Errc::zero_input, "hyperbolic(n) needs n >= 0");
  GWElement h = GWElement::generator(k, k->one()) + GWElement::generator(k, k->from_int(-1));
  return h.scaled(n);
}

/// Diagonalize and record the generator classes. The form must be nondegenerate.
inline GWElement gw_from_form(const BilinearForm& f) {
  GWElement x(f.field());
  for (const auto& d : diagonalize(f).diag) {
    if (d.is_zero()) fail(Errc::degenerate_form, "GW class of a degenerate form");
    x = x + GWElement::generator(f.field(), d);
  }
  return x;
}

/// (<a_1> - <1>)(<a_2> - <1>) ... (<a_n> - <1>), an element of I^n.
inline GWElement milnor_symbol_image(const FieldPtr& k, const std::vector<Element>& symbols) {
  GWElement acc = GWElement::generator(k, k->one());
  for (const auto& a : symbols) {
    if (a.is_zero()) fail(Errc::zero_input, "milnor symbol with zero entry");
    acc = acc * (GWElement::generator(k, a) - GWElement::generator(k, k->one()));
  }
  return acc;
}

/// Hasse symbols of a virtual element at every relevant place. Extends the
/// Hasse-Witt invariant of honest forms through the group law
/// (d1,c1)*(d2,c2) = (d1 d2, c1 c2 (d1,d2)_v); the inverse of (<a>,triv) is
/// (<a>, (a,-1)_v). Agrees with hasse_table on classes of honest forms.
inline PlaceTable gw_hasse_table(const GWElement& x) {
  if (!x.field()->is_rationals()) fail(Errc::unsupported_field, "Hasse table needs GW(Q)");
  std::vector<Rat> entries;
  for (const auto& [c, m] : x.classes()) entries.push_back(c.rat());
  std::vector<Place> places = relevant_places(entries);
  PlaceTable t;
  for (const Place& v : places) {
    int c = 1;
    Rat d(1);
    for (const auto& [rep, m] : x.classes()) {
      const Rat& a = rep.rat();
      for (long long i = 0; i < (m > 0 ? m : -m); ++i) {
        c *= hilbert_symbol(d, a, v);
        if (m < 0) c *= hilbert_symbol(a, Rat(-1), v);
        d = Rat(squarefree_part(rat_num(d * a) * rat_den(d * a)));
      }
    }
    if (c == -1) t[v] = -1;
  }
  return t;
}

struct GWNormalForm {
  enum class Kind { complex_like, real_like, finite_field, rationals };
  Kind kind;
  long long rank = 0;
  long long sig = 0;         // real_like, rationals
  Element disc;              // finite_field, rationals
  PlaceTable hasse;          // rationals

  bool operator==(const GWNormalForm& o) const {
    if (kind != o.kind || rank != o.rank) return false;
    auto disc_eq = [&] {
      if (disc.valid() != o.disc.valid()) return false;
      if (!disc.valid()) return true;
      return same_field(disc.field(), o.disc.field()) && disc == o.disc;
    };
    switch (kind) {
      case Kind::complex_like: return true;
      case Kind::real_like: return sig == o.sig;
      case Kind::finite_field: return disc_eq();
      case Kind::rationals: return sig == o.sig && disc_eq() && hasse == o.hasse;
    }
    return false;
  }
  bool operator!=(const GWNormalForm& o) const { return !(*this == o); }

  std::string str() const {
    switch (kind) {
      case Kind::complex_like: return "rank=" + std::to_string(rank);
      case Kind::real_like: return "rank=" + std::to_string(rank) + ", sig=" + std::to_string(sig);
      case Kind::finite_field: return "rank=" + std::to_string(rank) + ", disc=" + disc.str();
      case Kind::rationals:
        return "rank=" + std::to_string(rank) + ", sig=" + std::to_string(sig) +
               ", disc=" + disc.str() + ", hasse=" + place_table_str(hasse);
    }
    return "?";
  }
};

/// Complete invariant tuple for the supported fields.
inline GWNormalForm gw_normal_form(const GWElement& x) {
  GWNormalForm nf;
  nf.rank = x.rank();
  switch (x.field()->kind()) {
    case Field::Kind::rationals:
      nf.kind = GWNormalForm::Kind::rationals;
      nf.sig = x.signature();
      nf.disc = x.disc().rep;
      nf.hasse = gw_hasse_table(x);
      return nf;
    case Field::Kind::prime_field:
      nf.kind = GWNormalForm::Kind::finite_field;
      nf.disc = x.disc().rep;
      return nf;
    case Field::Kind::extension:
      fail(Errc::unsupported_field, "normal forms exist over Q and F_p only");
  }
  fail(Errc::unsupported_field, "bad field kind");
}

/// The GW(R)-view (rank, signature) of a class over Q.
inline GWNormalForm real_view(const GWElement& x) {
  GWNormalForm nf;
  nf.kind = GWNormalForm::Kind::real_like;
  nf.rank = x.rank();
  nf.sig = x.signature();
  return nf;
}

/// The GW(C)-view (rank only) of a class over Q.
inline GWNormalForm complex_view(const GWElement& x) {
  GWNormalForm nf;
  nf.kind = GWNormalForm::Kind::complex_like;
  nf.rank = x.rank();
  return nf;
}

/// Equality in GW(k), decided on hyperbolically stabilized representatives:
/// x = y iff the honest forms (x_plus + y_minus) and (y_plus + x_minus) are
/// isometric. Witt cancellation makes this sound and complete.
inline bool gw_equals(const GWElement& x, const GWElement& y) {
  if (!same_field(x.field(), y.field())) fail(Errc::descriptor_mismatch, "GW elements over different fields");
  if (!(x.field()->is_rationals() || x.field()->is_prime_field()))
    fail(Errc::unsupported_field, "GW equality is decided over Q and F_p only");
  if (x.rank() != y.rank()) return false;
  std::vector<Element> a = x.plus_list(), b = y.plus_list();
  for (const auto& e : y.minus_list()) a.push_back(e);
  for (const auto& e : x.minus_list()) b.push_back(e);
  if (a.empty() && b.empty()) return true;
  if (a.size() != b.size()) return false;  // cannot happen once ranks agree
  return is_isometric(BilinearForm::diagonal(x.field(), a), BilinearForm::diagonal(x.field(), b));
}

/// Membership in the fundamental-ideal powers I^0, I^1, I^2. Higher powers
/// would need the Arason invariant and are rejected.
inline bool in_fundamental_power(const GWElement& x, int n) {
  if (!(x.field()->is_rationals() || x.field()->is_prime_field()))
    fail(Errc::unsupported_field, "fundamental ideal membership over Q and F_p only");
  if (n < 0 || n > 2) fail(Errc::unsupported_n, "I^n membership is decided for n <= 2");
  if (n == 0) return true;
  if (x.rank() != 0) return false;
  if (n == 1) return true;
  return x.disc().is_trivial();
}

/// Reduced diagonal representative for display: cancels, canonicalizes the
/// square classes, and pairs <a> + <-a> into copies of h.
inline std::string gw_to_string(const GWElement& x) {
  std::map<Element, long long, ElementLess> m;
  for (const auto& [c, mult] : x.classes()) m[c] = mult;
  long long hcount = 0;
  for (auto& [c, mult] : m) {
    if (mult == 0) continue;
    Element neg_rep = square_class(-c).rep;
    if (neg_rep == c) {
      // <a> = <-a>, so two copies make an h
      long long pairs = mult / 2;  // rounds toward zero
      hcount += pairs;
      mult -= 2 * pairs;
    } else if (c.cmp(neg_rep) < 0) {
      auto it = m.find(neg_rep);
      if (it == m.end()) continue;
      long long pairs = 0;
      if (mult > 0 && it->second > 0) pairs = std::min(mult, it->second);
      if (mult < 0 && it->second < 0) pairs = -std::min(-mult, -it->second);
      hcount += pairs;
      mult -= pairs;
      it->second -= pairs;
    }
  }
  std::string out;
  auto append = [&out](long long mult, const std::string& body) {
    if (mult == 0) return;
    std::string mag = (std::abs(mult) == 1) ? body : std::to_string(std::abs(mult)) + body;
    if (out.empty())
      out = (mult < 0 ? "-" : "") + mag;
    else
      out += (mult < 0 ? " - " : " + ") + mag;
  };
  for (const auto& [c, mult] : m) append(mult, "<" + c.str() + ">");
  append(hcount, "h");
  return out.empty() ? "0" : out;
}

}  // namespace gwdeg
