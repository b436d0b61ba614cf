// Symbolic Milnor-Witt K-theory. Elements are Z-combinations of monomials
// eta^e [a_1]...[a_r] with nonzero field entries, homogeneous of grade r - e.
//
// Normalization applies, in a fixed order until stable:
//   [1] = 0, the adjacent Steinberg kill [a][1-a] = 0, and the h-relation
//   rewrite eta^2 [-1] -> -2 eta (eta is central, so any [-1] slot works).
// Symbols do not commute with each other; equality of general elements is
// syntactic after these rewrites. Semantic equality is available in grade 0
// through GW and via the residue/realization probes.
//
// The residue map additionally uses three consequences of the presentation:
//   [a^{-1}] = -<a>[a]   (inverse symbols),
//   [a][a]   = [a][-1]   (square collapse),
//   [a][b]   = -[b][a] - eta [-1][b][a]   (epsilon-commutation),
// applied under a rewrite budget; exceeding it raises RewriteLimitExceeded
// instead of returning an unsound answer.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwdeg/gw.hpp"

namespace gwdeg {

struct MWMonomial {
  long eta = 0;
  std::vector<Element> syms;

  long grade() const { return static_cast<long>(syms.size()) - eta; }
};

struct MWMonomialLess {
  bool operator()(const MWMonomial& a, const MWMonomial& b) const {
    if (a.eta != b.eta) return a.eta < b.eta;
    if (a.syms.size() != b.syms.size()) return a.syms.size() < b.syms.size();
    for (size_t i = 0; i < a.syms.size(); ++i) {
      int c = a.syms[i].cmp(b.syms[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

namespace detail {

/// Fixed-order normalization of one monomial; false when it dies.
inline bool normalize_mw_term(const FieldPtr& k, long& eta, std::vector<Element>& syms, long long& coeff) {
  Element one = k->one(), minus_one = k->from_int(-1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : syms)
      if (a == one) return false;
    for (size_t i = 0; i + 1 < syms.size(); ++i)
      if (syms[i + 1] == one - syms[i]) return false;
    if (eta >= 2) {
      for (size_t i = 0; i < syms.size(); ++i) {
        if (syms[i] == minus_one) {
          syms.erase(syms.begin() + static_cast<long>(i));
          eta -= 1;
          coeff *= -2;
          changed = true;
          break;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

class MWElement {
public:
  explicit MWElement(FieldPtr k) : k_(std::move(k)) {}

  static MWElement zero(const FieldPtr& k) { return MWElement(k); }

  static MWElement integer(const FieldPtr& k, long long n) {
    MWElement x(k);
    x.insert(MWMonomial{0, {}}, n);
    return x;
  }

  static MWElement eta_power(const FieldPtr& k, long e, long long coeff = 1) {
    MWElement x(k);
    x.insert(MWMonomial{e, {}}, coeff);
    return x;
  }

  /// coeff * eta^e [a_1]...[a_r].
  static MWElement symbol(const FieldPtr& k, std::vector<Element> syms, long e = 0, long long coeff = 1) {
    for (const auto& a : syms) {
      if (!same_field(a.field(), k)) fail(Errc::descriptor_mismatch, "symbol entry in the wrong field");
      if (a.is_zero()) fail(Errc::zero_symbol, "symbol entries must be nonzero");
    }
    MWElement x(k);
    x.insert(MWMonomial{e, std::move(syms)}, coeff);
    return x;
  }

  const FieldPtr& field() const { return k_; }
  const std::map<MWMonomial, long long, MWMonomialLess>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  /// Common grade r - e; zero elements carry no grade.
  std::optional<long> grade() const {
    if (t_.empty()) return std::nullopt;
    return t_.begin()->first.grade();
  }

  MWElement operator+(const MWElement& o) const {
    require_compatible(o);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (*grade() != *o.grade()) fail(Errc::grade_mismatch, "sum of different grades");
    MWElement r = *this;
    for (const auto& [m, c] : o.t_) r.insert(m, c);
    return r;
  }

  MWElement operator-() const {
    MWElement r(k_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }
  MWElement operator-(const MWElement& o) const { return *this + (-o); }

  MWElement operator*(const MWElement& o) const {
    require_compatible(o);
    MWElement r(k_);
    for (const auto& [m1, c1] : t_)
      for (const auto& [m2, c2] : o.t_) {
        MWMonomial m{m1.eta + m2.eta, m1.syms};
        m.syms.insert(m.syms.end(), m2.syms.begin(), m2.syms.end());
        r.insert(std::move(m), c1 * c2);
      }
    return r;
  }

  MWElement scaled(long long n) const {
    MWElement r(k_);
    if (n != 0)
      for (const auto& [m, c] : t_) r.t_.emplace(m, c * n);
    return r;
  }

  bool operator==(const MWElement& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = t_.begin();
    auto jt = o.t_.begin();
    MWMonomialLess less;
    for (; it != t_.end(); ++it, ++jt) {
      if (less(it->first, jt->first) || less(jt->first, it->first) || it->second != jt->second) return false;
    }
    return true;
  }
  bool operator!=(const MWElement& o) const { return !(*this == o); }

  /// Insert with normalization and the homogeneity check.
  void insert(MWMonomial m, long long coeff) {
    if (coeff == 0) return;
    if (!detail::normalize_mw_term(k_, m.eta, m.syms, coeff)) return;
    if (!t_.empty() && t_.begin()->first.grade() != m.grade())
      fail(Errc::grade_mismatch, "inhomogeneous element");
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(std::move(m), coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) t_.erase(it);
    }
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
      std::string body;
      if (m.eta == 1)
        body = "eta";
      else if (m.eta > 1)
        body = "eta^" + std::to_string(m.eta);
      std::string symstr;
      for (const auto& a : m.syms) symstr += "[" + a.str() + "]";
      if (!symstr.empty()) body += (body.empty() ? "" : "*") + symstr;
      long long mag = c < 0 ? -c : c;
      std::string term;
      if (body.empty())
        term = std::to_string(mag);
      else if (mag == 1)
        term = body;
      else
        term = std::to_string(mag) + "*" + body;
      if (out.empty())
        out = (c < 0 ? "-" : "") + term;
      else
        out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
  }

private:
  FieldPtr k_;
  std::map<MWMonomial, long long, MWMonomialLess> t_;

  void require_compatible(const MWElement& o) const {
    if (!same_field(k_, o.k_)) fail(Errc::descriptor_mismatch, "MW elements over different fields");
  }
};

inline MWElement mw_symbol(const FieldPtr& k, std::vector<Element> syms, long eta = 0) {
  return MWElement::symbol(k, std::move(syms), eta);
}

/// [ab] = [a] + [b] + eta [a][b], as an element of grade 1.
inline MWElement expand_product_symbol(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) fail(Errc::zero_symbol, "symbol entries must be nonzero");
  const FieldPtr& k = a.field();
  require_same_field(a, b);
  return MWElement::symbol(k, {a}) + MWElement::symbol(k, {b}) + MWElement::symbol(k, {a, b}, 1);
}

/// Grade-0 identification with GW(k): eta^r [a_1]...[a_r] goes to
/// prod_i (<a_i> - <1>), integers go to multiples of <1>.
inline GWElement degree0_to_gw(const MWElement& x) {
  if (!x.is_zero() && *x.grade() != 0) fail(Errc::grade_mismatch, "degree0_to_gw needs a grade-0 element");
  GWElement out = GWElement::zero(x.field());
  for (const auto& [m, c] : x.terms()) {
    GWElement term = milnor_symbol_image(x.field(), m.syms);
    out = out + term.scaled(c);
  }
  return out;
}

/// Real realization on generators: [a] -> 0 for a > 0, 1 for a < 0; eta -> -2.
inline long long real_realization(const MWElement& x) {
  if (!x.field()->is_rationals()) fail(Errc::unsupported_field, "real realization needs rational symbols");
  long long total = 0;
  for (const auto& [m, c] : x.terms()) {
    long long value = c;
    for (long e = 0; e < m.eta; ++e) value *= -2;
    for (const auto& a : m.syms)
      if (a.sign() > 0) { value = 0; break; }
    total += value;
  }
  return total;
}

/// p-adic valuation on Q with uniformizer p and residue field F_p.
struct ValuationSpec {
  long long p;
  explicit ValuationSpec(long long prime) : p(prime) {
    Field::prime_field(prime);  // validates: odd prime
  }
};

/// Residue map d_v^pi: K^MW_n(Q) -> K^MW_{n-1}(F_p). Symbols are expanded one
/// uniformizer factor at a time until each is [p] or a p-adic unit; monomials
/// are then driven to the generator shapes [p][units...] (residue = the
/// reduced units) or [units...] (residue = 0).
inline MWElement residue(const MWElement& x, const ValuationSpec& v) {
  if (!x.field()->is_rationals()) fail(Errc::unsupported_field, "residues are taken over Q");
  const FieldPtr& Qf = x.field();
  auto Fp = Field::prime_field(v.p);
  Int P(v.p);
  Element pi = Qf->from_int(v.p);
  Element minus_one = Qf->from_int(-1);

  struct Term {
    long long coeff;
    long eta;
    std::vector<Element> syms;
  };
  std::vector<Term> work;
  for (const auto& [m, c] : x.terms()) work.push_back(Term{c, m.eta, m.syms});

  MWElement out = MWElement::zero(Fp);
  long budget = 400000;
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    if (t.coeff == 0) continue;
    if (--budget < 0) fail(Errc::rewrite_limit_exceeded, "residue rewriting exceeded its budget");
    if (!detail::normalize_mw_term(Qf, t.eta, t.syms, t.coeff)) continue;

    // expand a symbol that is neither [p] nor a unit
    bool expanded = false;
    for (size_t i = 0; i < t.syms.size() && !expanded; ++i) {
      const Element& a = t.syms[i];
      if (a == pi) continue;
      long val = val_p(a.rat(), P);
      if (val == 0) continue;
      expanded = true;
      if (val >= 1) {
        // [p c] = [p] + [c] + eta [p][c]
        Element c = a / pi;
        Term t1 = t, t2 = t, t3 = t;
        t1.syms[i] = pi;
        t2.syms[i] = c;
        t3.eta += 1;
        t3.syms[i] = pi;
        t3.syms.insert(t3.syms.begin() + static_cast<long>(i) + 1, c);
        work.push_back(std::move(t1));
        work.push_back(std::move(t2));
        work.push_back(std::move(t3));
      } else {
        // [u] = -[u^{-1}] - eta [u^{-1}][-1]
        Element inv = a.inverse();
        Term t1 = t, t2 = t;
        t1.coeff = -t1.coeff;
        t1.syms[i] = inv;
        t2.coeff = -t2.coeff;
        t2.eta += 1;
        t2.syms[i] = inv;
        t2.syms.insert(t2.syms.begin() + static_cast<long>(i) + 1, minus_one);
        work.push_back(std::move(t1));
        work.push_back(std::move(t2));
      }
    }
    if (expanded) continue;

    // all symbols are [p] or units; locate uniformizer slots
    std::vector<size_t> pis;
    for (size_t i = 0; i < t.syms.size(); ++i)
      if (t.syms[i] == pi) pis.push_back(i);

    if (pis.size() >= 2) {
      // adjacent [p][p] collapses by [a][a] = [a][-1]
      bool collapsed = false;
      for (size_t s = 0; s + 1 < pis.size(); ++s) {
        if (pis[s + 1] == pis[s] + 1) {
          t.syms[pis[s + 1]] = minus_one;
          work.push_back(std::move(t));
          collapsed = true;
          break;
        }
      }
      if (collapsed) continue;
    }
    if (!pis.empty() && pis[0] > 0) {
      // move the first [p] left past a unit: [u][p] = -[p][u] - eta [-1][p][u]
      size_t j = pis[0];
      Term t1 = t, t2 = t;
      t1.coeff = -t1.coeff;
      std::swap(t1.syms[j - 1], t1.syms[j]);
      t2.coeff = -t2.coeff;
      t2.eta += 1;
      std::swap(t2.syms[j - 1], t2.syms[j]);
      t2.syms.insert(t2.syms.begin() + static_cast<long>(j) - 1, minus_one);
      work.push_back(std::move(t1));
      work.push_back(std::move(t2));
      continue;
    }
    if (pis.size() >= 2) {
      // leading [p] with another one further right; keep commuting inward
      size_t j = pis[1];
      Term t1 = t, t2 = t;
      t1.coeff = -t1.coeff;
      std::swap(t1.syms[j - 1], t1.syms[j]);
      t2.coeff = -t2.coeff;
      t2.eta += 1;
      std::swap(t2.syms[j - 1], t2.syms[j]);
      t2.syms.insert(t2.syms.begin() + static_cast<long>(j) - 1, minus_one);
      work.push_back(std::move(t1));
      work.push_back(std::move(t2));
      continue;
    }

    if (pis.empty()) continue;  // units only: residue 0

    // shape [p][u_1]...[u_r]: emit eta^e [ubar_1]...[ubar_r] over F_p
    MWMonomial m;
    m.eta = t.eta;
    for (size_t i = 1; i < t.syms.size(); ++i) m.syms.push_back(Fp->from_rat(t.syms[i].rat()));
    out.insert(std::move(m), t.coeff);
  }
  return out;
}

inline MWElement residue(const MWElement& x, long long p) { return residue(x, ValuationSpec(p)); }

}  // namespace gwdeg
