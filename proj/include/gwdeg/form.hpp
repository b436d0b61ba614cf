// Symmetric bilinear forms over a field: exact congruence diagonalization,
// the classical invariants (rank, discriminant, signature, Hasse-Witt), and
// isometry decision where the classification is complete (Q and F_p).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwdeg/matrix.hpp"

namespace gwdeg {

// A place of Q: the real place or a prime p (2 included).
struct Place {
  bool infinite = false;
  Int p = 0;

  static Place inf() { return Place{true, 0}; }
  static Place prime(Int q) { return Place{false, std::move(q)}; }

  bool operator==(const Place& o) const { return infinite == o.infinite && p == o.p; }
  bool operator<(const Place& o) const {
    if (infinite != o.infinite) return !infinite;  // finite places sort before inf
    return p < o.p;
  }
  std::string str() const { return infinite ? "inf" : p.str(); }
};

/// Hasse symbols by place; only the places carrying -1 are stored, every
/// omitted place is +1. A table produced from a form satisfies Hilbert
/// reciprocity, so it has an even number of entries.
using PlaceTable = std::map<Place, int>;

inline std::string place_table_str(const PlaceTable& t) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, s] : t) {
    if (!first) out += ", ";
    first = false;
    out += v.str() + ":" + std::to_string(s);
  }
  return out + "}";
}

class BilinearForm {
public:
  BilinearForm(FieldPtr k, Mat gram) : k_(std::move(k)), gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) fail(Errc::degenerate_form, "Gram matrix must be square");
    for (size_t i = 0; i < gram_.rows(); ++i)
      for (size_t j = i + 1; j < gram_.cols(); ++j)
        if (!(gram_.at(i, j) == gram_.at(j, i))) fail(Errc::degenerate_form, "Gram matrix must be symmetric");
    if (k_->characteristic() == 2) fail(Errc::unsupported_field, "characteristic 2");
  }

  static BilinearForm diagonal(const FieldPtr& k, const std::vector<Element>& entries) {
    Mat g(k, entries.size(), entries.size());
    for (size_t i = 0; i < entries.size(); ++i) g.at(i, i) = entries[i];
    return BilinearForm(k, std::move(g));
  }

  const FieldPtr& field() const { return k_; }
  const Mat& gram() const { return gram_; }
  size_t dim() const { return gram_.rows(); }

private:
  FieldPtr k_;
  Mat gram_;
};

struct Diagonalization {
  std::vector<Element> diag;
  Mat basis_change;  // P with P^T G P diagonal
};

/// Symmetric Gaussian elimination; exact. Works for degenerate input, the
/// radical shows up as trailing zero entries. Requires char != 2 for the
/// off-diagonal pivot rescue (u <- u + v).
inline Diagonalization diagonalize(const BilinearForm& f) {
  const FieldPtr& k = f.field();
  size_t n = f.dim();
  Mat G = f.gram();
  Mat P = Mat::identity(k, n);

  auto add_col = [&](Mat& m, size_t dst, size_t src, const Element& c) {
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, dst) = m.at(i, dst) + c * m.at(i, src);
  };
  auto add_row = [&](Mat& m, size_t dst, size_t src, const Element& c) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) = m.at(dst, j) + c * m.at(src, j);
  };
  auto swap_basis = [&](size_t a, size_t b) {
    for (size_t i = 0; i < n; ++i) std::swap(G.at(i, a), G.at(i, b));
    for (size_t j = 0; j < n; ++j) std::swap(G.at(a, j), G.at(b, j));
    for (size_t i = 0; i < n; ++i) std::swap(P.at(i, a), P.at(i, b));
  };

  for (size_t i = 0; i < n; ++i) {
    if (G.at(i, i).is_zero()) {
      size_t j = i + 1;
      while (j < n && G.at(j, j).is_zero()) ++j;
      if (j < n) {
        swap_basis(i, j);
      } else {
        // whole remaining diagonal vanishes; hunt for an off-diagonal entry
        size_t u = n, v = n;
        for (size_t a = i; a < n && u == n; ++a)
          for (size_t b = a + 1; b < n; ++b)
            if (!G.at(a, b).is_zero()) { u = a; v = b; break; }
        if (u == n) break;  // remaining block is identically zero (radical)
        Element one = k->one();
        add_col(G, u, v, one);
        add_row(G, u, v, one);
        add_col(P, u, v, one);
        if (u != i) swap_basis(i, u);
      }
    }
    Element d = G.at(i, i);
    Element dinv = d.inverse();
    for (size_t j = i + 1; j < n; ++j) {
      if (G.at(i, j).is_zero()) continue;
      Element c = -(G.at(i, j) * dinv);
      add_col(G, j, i, c);
      add_row(G, j, i, c);
      add_col(P, j, i, c);
    }
  }
  std::vector<Element> diag;
  diag.reserve(n);
  for (size_t i = 0; i < n; ++i) diag.push_back(G.at(i, i));
  return Diagonalization{std::move(diag), std::move(P)};
}

inline int rank(const BilinearForm& f) {
  int r = 0;
  for (const auto& d : diagonalize(f).diag)
    if (!d.is_zero()) ++r;
  return r;
}

inline bool is_nondegenerate(const BilinearForm& f) {
  return rank(f) == static_cast<int>(f.dim());
}

/// Square class of det(Gram); a congruence invariant.
inline SquareClass discriminant(const BilinearForm& f) {
  Element d = f.gram().det();
  if (d.is_zero()) fail(Errc::degenerate_form, "discriminant of a degenerate form");
  return square_class(d);
}

/// Sylvester signature via the real embedding of Q. Zero diagonal entries
/// (the radical) are ignored.
inline long signature(const BilinearForm& f) {
  if (!f.field()->is_rationals()) fail(Errc::unsupported_field, "signature needs a form over Q");
  long s = 0;
  for (const auto& d : diagonalize(f).diag) s += d.sign();
  return s;
}

/// Hilbert symbol (a,b)_v over Q_v: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution. Standard valuation-and-residue case analysis;
/// see any quadratic forms text.
inline int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) fail(Errc::zero_input, "hilbert symbol of 0");
  if (v.infinite) return (rat_sign(a) < 0 && rat_sign(b) < 0) ? -1 : 1;
  const Int& p = v.p;
  long alpha = val_p(a, p), beta = val_p(b, p);
  auto unit_part = [&p](const Rat& x, long val) {
    Int pw = boost::multiprecision::pow(p, static_cast<unsigned>(val < 0 ? -val : val));
    return val >= 0 ? x / Rat(pw) : x * Rat(pw);
  };
  Rat u = unit_part(a, alpha), w = unit_part(b, beta);
  if (p == 2) {
    auto eps = [](const Rat& x) { return (rat_mod(x, 4) == 3) ? 1 : 0; };          // (x-1)/2 mod 2
    auto omega = [](const Rat& x) { Int r = rat_mod(x, 8); return (r == 3 || r == 5) ? 1 : 0; };  // (x^2-1)/8 mod 2
    long e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int s = 1;
  if ((alpha * beta) % 2 != 0) s *= legendre(Rat(-1), p);
  if (beta % 2 != 0) s *= legendre(u, p);
  if (alpha % 2 != 0) s *= legendre(w, p);
  return s;
}

inline std::vector<Rat> nondegenerate_rational_diagonal(const BilinearForm& f) {
  if (!f.field()->is_rationals()) fail(Errc::unsupported_field, "Hasse-Witt invariants need a form over Q");
  std::vector<Rat> out;
  for (const auto& d : diagonalize(f).diag) {
    if (d.is_zero()) fail(Errc::degenerate_form, "Hasse-Witt invariant of a degenerate form");
    out.push_back(d.rat());
  }
  return out;
}

/// Hasse-Witt invariant at one place: product over i<j of (a_i, a_j)_v for a
/// diagonalization diag(a_1..a_m). Independent of the diagonalization.
inline int hasse_witt(const BilinearForm& f, const Place& v) {
  auto diag = nondegenerate_rational_diagonal(f);
  int s = 1;
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) s *= hilbert_symbol(diag[i], diag[j], v);
  return s;
}

/// Places where the symbol could be nontrivial for the given diagonal entries:
/// inf, 2 and the odd primes dividing some entry.
inline std::vector<Place> relevant_places(const std::vector<Rat>& entries) {
  std::map<Int, bool> primes;
  primes[2] = true;
  for (const Rat& a : entries)
    for (const auto& [q, e] : factorize(rat_num(a) * rat_den(a))) primes[q] = true;
  std::vector<Place> out;
  for (const auto& [q, _] : primes) out.push_back(Place::prime(q));
  out.push_back(Place::inf());
  return out;
}

inline PlaceTable hasse_table(const BilinearForm& f) {
  auto diag = nondegenerate_rational_diagonal(f);
  PlaceTable t;
  for (const Place& v : relevant_places(diag)) {
    int s = 1;
    for (size_t i = 0; i < diag.size(); ++i)
      for (size_t j = i + 1; j < diag.size(); ++j) s *= hilbert_symbol(diag[i], diag[j], v);
    if (s == -1) t[v] = -1;
  }
  return t;
}

/// Isometry decision. Complete over Q (Hasse-Minkowski: rank, discriminant,
/// signature and all local Hasse symbols) and over F_p (rank, discriminant).
inline bool is_isometric(const BilinearForm& f, const BilinearForm& g) {
  if (!same_field(f.field(), g.field())) fail(Errc::descriptor_mismatch, "forms over different fields");
  if (!is_nondegenerate(f) || !is_nondegenerate(g))
    fail(Errc::degenerate_form, "isometry is decided for nondegenerate forms only");
  if (f.dim() != g.dim()) return false;
  switch (f.field()->kind()) {
    case Field::Kind::rationals:
      return discriminant(f) == discriminant(g) && signature(f) == signature(g) &&
             hasse_table(f) == hasse_table(g);
    case Field::Kind::prime_field:
      return discriminant(f) == discriminant(g);
    case Field::Kind::extension:
      fail(Errc::unsupported_field, "isometry over extension fields is not decided");
  }
  return false;
}

inline BilinearForm direct_sum(const BilinearForm& f, const BilinearForm& g) {
  if (!same_field(f.field(), g.field())) fail(Errc::descriptor_mismatch, "forms over different fields");
  size_t n = f.dim(), m = g.dim();
  Mat gr(f.field(), n + m, n + m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) gr.at(i, j) = f.gram().at(i, j);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) gr.at(n + i, n + j) = g.gram().at(i, j);
  return BilinearForm(f.field(), std::move(gr));
}

inline BilinearForm tensor_product(const BilinearForm& f, const BilinearForm& g) {
  if (!same_field(f.field(), g.field())) fail(Errc::descriptor_mismatch, "forms over different fields");
  size_t n = f.dim(), m = g.dim();
  Mat gr(f.field(), n * m, n * m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t s = 0; s < m; ++s)
        for (size_t t = 0; t < m; ++t) gr.at(i * m + s, j * m + t) = f.gram().at(i, j) * g.gram().at(s, t);
  return BilinearForm(f.field(), std::move(gr));
}

}  // namespace gwdeg
