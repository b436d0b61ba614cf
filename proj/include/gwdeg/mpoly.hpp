// Sparse multivariate polynomials over an exact field with graded reverse
// lexicographic term order (x1 > x2 > ... > xn).
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gwdeg/field.hpp"

namespace gwdeg {

struct Monomial {
  std::vector<int> e;

  static Monomial one(int nvars) { return Monomial{std::vector<int>(static_cast<size_t>(nvars), 0)}; }
  static Monomial var(int nvars, int i, int pow = 1) {
    Monomial m = one(nvars);
    m.e[static_cast<size_t>(i)] = pow;
    return m;
  }

  int total() const {
    int t = 0;
    for (int x : e) t += x;
    return t;
  }
  bool is_one() const { return total() == 0; }
  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  /// Quotient, assuming divisibility.
  Monomial quotient_by(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(i + 1);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
  }
};

/// a < b in grevlex: smaller total degree wins; on ties the rightmost nonzero
/// entry of a - b positive means a is smaller.
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    for (size_t i = a.e.size(); i-- > 0;) {
      int d = a.e[i] - b.e[i];
      if (d != 0) return d > 0;
    }
    return false;
  }
};

class MPoly {
public:
  MPoly(FieldPtr k, int nvars) : k_(std::move(k)), n_(nvars) {}

  static MPoly constant(const FieldPtr& k, int nvars, const Element& c) {
    MPoly p(k, nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
  }
  static MPoly variable(const FieldPtr& k, int nvars, int i) {
    MPoly p(k, nvars);
    p.add_term(Monomial::var(nvars, i), k->one());
    return p;
  }
  static MPoly monomial(const FieldPtr& k, Monomial m, const Element& c) {
    MPoly p(k, static_cast<int>(m.e.size()));
    p.add_term(std::move(m), c);
    return p;
  }

  const FieldPtr& field() const { return k_; }
  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Monomial, Element, GrevlexLess>& terms() const { return t_; }

  const Monomial& leading_monomial() const {
    if (is_zero()) fail(Errc::zero_input, "leading term of 0");
    return t_.rbegin()->first;
  }
  const Element& leading_coeff() const {
    if (is_zero()) fail(Errc::zero_input, "leading term of 0");
    return t_.rbegin()->second;
  }
  int total_degree() const { return is_zero() ? -1 : leading_monomial().total(); }

  void add_term(Monomial m, const Element& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(std::move(m), c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
  }
  MPoly operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
  }
  MPoly operator-() const {
    MPoly r(k_, n_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r(k_, n_);
    for (const auto& [m1, c1] : t_)
      for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }
  MPoly scaled(const Element& c) const {
    MPoly r(k_, n_);
    if (!c.is_zero())
      for (const auto& [m, c0] : t_) r.t_.emplace(m, c0 * c);
    return r;
  }
  MPoly times_monomial(const Monomial& m, const Element& c) const {
    MPoly r(k_, n_);
    if (!c.is_zero())
      for (const auto& [m0, c0] : t_) r.t_.emplace(m0 * m, c0 * c);
    return r;
  }

  bool operator==(const MPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = t_.begin();
    auto jt = o.t_.begin();
    for (; it != t_.end(); ++it, ++jt) {
      if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
  }

  MPoly derivative(int var) const {
    MPoly r(k_, n_);
    for (const auto& [m, c] : t_) {
      int e = m.e[static_cast<size_t>(var)];
      if (e == 0) continue;
      Monomial m2 = m;
      m2.e[static_cast<size_t>(var)] -= 1;
      r.add_term(m2, c * k_->from_int(e));
    }
    return r;
  }

  /// Evaluate at a point whose coordinates live in this field or in an
  /// extension of it (coefficients are embedded upward).
  Element eval(const std::vector<Element>& point) const {
    const FieldPtr& L = point.empty() ? k_ : point[0].field();
    Element acc = embed_into(k_->zero(), L);
    for (const auto& [m, c] : t_) {
      Element term = embed_into(c, L);
      for (size_t i = 0; i < m.e.size(); ++i)
        if (m.e[i] > 0) term = term * point[i].pow(m.e[i]);
      acc = acc + term;
    }
    return acc;
  }

  /// Substitute x_i -> x_i + p_i.
  MPoly translate(const std::vector<Element>& p) const {
    MPoly r(k_, n_);
    for (const auto& [m, c] : t_) {
      MPoly term = MPoly::constant(k_, n_, c);
      for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        MPoly lin = MPoly::variable(k_, n_, static_cast<int>(i)) + MPoly::constant(k_, n_, p[i]);
        for (int j = 0; j < m.e[i]; ++j) term = term * lin;
      }
      r = r + term;
    }
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      std::string cs = it->second.str();
      bool neg = !cs.empty() && cs[0] == '-';
      std::string body = neg ? cs.substr(1) : cs;
      bool composite = body.find_first_of("+-") != std::string::npos;
      std::string term;
      if (it->first.is_one()) {
        term = composite ? "(" + cs + ")" : body;
        if (composite) neg = false;
      } else if (body == "1" && !composite) {
        term = it->first.str();
      } else if (composite) {
        term = "(" + cs + ")*" + it->first.str();
        neg = false;
      } else {
        term = body + "*" + it->first.str();
      }
      if (out.empty())
        out = (neg ? "-" : "") + term;
      else
        out += (neg ? " - " : " + ") + term;
    }
    return out;
  }

private:
  FieldPtr k_;
  int n_;
  std::map<Monomial, Element, GrevlexLess> t_;
};

/// An endomorphism of affine n-space: n polynomials in n variables.
struct PolyMap {
  FieldPtr k;
  int n = 0;
  std::vector<MPoly> comps;

  PolyMap(FieldPtr field, std::vector<MPoly> components) : k(std::move(field)), comps(std::move(components)) {
    n = static_cast<int>(comps.size());
    if (n == 0) fail(Errc::zero_input, "polynomial map needs at least one component");
    for (const auto& f : comps) {
      if (!same_field(f.field(), k)) fail(Errc::descriptor_mismatch, "component over wrong field");
      if (f.nvars() != n) fail(Errc::descriptor_mismatch, "map must have as many variables as components");
    }
  }
};

/// det(df_i/dx_j) as a polynomial, by cofactor expansion (n is small here).
inline MPoly jacobian_det(const PolyMap& f) {
  int n = f.n;
  std::vector<std::vector<MPoly>> J;
  for (int i = 0; i < n; ++i) {
    std::vector<MPoly> row;
    for (int j = 0; j < n; ++j) row.push_back(f.comps[static_cast<size_t>(i)].derivative(j));
    J.push_back(std::move(row));
  }
  std::function<MPoly(std::vector<int>, std::vector<int>)> det = [&](std::vector<int> rows,
                                                                     std::vector<int> cols) -> MPoly {
    if (rows.size() == 1) return J[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[0])];
    MPoly acc(f.k, n);
    for (size_t t = 0; t < cols.size(); ++t) {
      std::vector<int> subrows(rows.begin() + 1, rows.end());
      std::vector<int> subcols;
      for (size_t s = 0; s < cols.size(); ++s)
        if (s != t) subcols.push_back(cols[s]);
      MPoly minor = J[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[t])] * det(subrows, subcols);
      acc = (t % 2 == 0) ? acc + minor : acc - minor;
    }
    return acc;
  };
  std::vector<int> idx;
  for (int i = 0; i < n; ++i) idx.push_back(i);
  return det(idx, idx);
}

}  // namespace gwdeg
