// Zero-dimensional quotient algebras Q = k[x1..xn]/<f1..fn>: standard-monomial
// bases, commuting multiplication matrices, localization at a rational zero by
// generalized eigenspaces, and splitting into primary (one-point) components
// by factoring minimal polynomials of multiplication operators.
#pragma once

#include <memory>
#include <vector>

#include "gwdeg/factor.hpp"
#include "gwdeg/groebner.hpp"
#include "gwdeg/matrix.hpp"

namespace gwdeg {

struct QuotientRing {
  FieldPtr k;
  int nvars = 0;
  std::vector<MPoly> gb;             // reduced Groebner basis
  std::vector<Monomial> basis;       // standard monomials, grevlex ascending
  std::map<Monomial, int, GrevlexLess> index;
  std::vector<Mat> var_ops;          // multiplication by x_i on the basis

  size_t dim() const { return basis.size(); }

  Vec coords_of(const MPoly& reduced) const {
    Vec v(dim(), k->zero());
    for (const auto& [m, c] : reduced.terms()) {
      auto it = index.find(m);
      if (it == index.end()) fail(Errc::degenerate_result, "normal form left the standard basis");
      v[static_cast<size_t>(it->second)] = c;
    }
    return v;
  }

  Vec reduce_to_coords(const MPoly& f) const { return coords_of(normal_form(f, gb)); }

  MPoly lift(const Vec& v) const {
    MPoly f(k, nvars);
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) f.add_term(basis[i], v[i]);
    return f;
  }

  Vec multiply(const Vec& a, const Vec& b) const { return reduce_to_coords(lift(a) * lift(b)); }
};

using QuotientPtr = std::shared_ptr<const QuotientRing>;

/// A finite-dimensional piece of a quotient algebra: either the whole thing or
/// an invariant subspace cut out by localization / primary decomposition. The
/// basis columns live in the coordinates of the ambient quotient ring.
class LocalAlgebra {
public:
  LocalAlgebra(QuotientPtr global, Mat basis, Mat proj, std::vector<Mat> var_ops, Vec one)
      : global_(std::move(global)),
        basis_(std::move(basis)),
        proj_(std::move(proj)),
        var_ops_(std::move(var_ops)),
        one_(std::move(one)) {}

  static LocalAlgebra whole(QuotientPtr q) {
    size_t d = q->dim();
    Mat id = Mat::identity(q->k, d);
    MPoly one_poly = MPoly::constant(q->k, q->nvars, q->k->one());
    Vec one = q->reduce_to_coords(one_poly);
    std::vector<Mat> ops = q->var_ops;
    return LocalAlgebra(std::move(q), id, id, std::move(ops), std::move(one));
  }

  const QuotientPtr& global() const { return global_; }
  const FieldPtr& field() const { return global_->k; }
  int nvars() const { return global_->nvars; }
  size_t dim() const { return basis_.cols(); }
  const std::vector<Mat>& var_ops() const { return var_ops_; }
  const Mat& basis() const { return basis_; }
  const Vec& one() const { return one_; }

  /// Image of a polynomial in this component.
  Vec project_poly(const MPoly& f) const { return proj_ * global_->reduce_to_coords(f); }

  /// Product of two elements given in local coordinates.
  Vec multiply(const Vec& a, const Vec& b) const {
    return proj_ * global_->multiply(basis_ * a, basis_ * b);
  }

  /// Matrix of multiplication by v (local coordinates).
  Mat mult_op(const Vec& v) const {
    Mat m(field(), dim(), dim());
    for (size_t j = 0; j < dim(); ++j) {
      Vec ej(dim(), field()->zero());
      ej[j] = field()->one();
      m.set_col(j, multiply(v, ej));
    }
    return m;
  }

  /// Restrict to the column space of C (columns independent, invariant under
  /// the variable operators); W must complete it to a basis of this algebra.
  LocalAlgebra restrict_to(const Mat& C, const Mat& W) const {
    size_t d = dim(), dc = C.cols();
    Mat full = Mat::hcat(C, W);
    auto inv = full.inverse();
    if (!inv) fail(Errc::degenerate_result, "component basis does not span");
    Mat proj_local(field(), dc, d);
    for (size_t i = 0; i < dc; ++i)
      for (size_t j = 0; j < d; ++j) proj_local.at(i, j) = inv->at(i, j);
    std::vector<Mat> ops;
    for (const auto& m : var_ops_) ops.push_back(proj_local * m * C);
    Vec one = proj_local * one_;
    return LocalAlgebra(global_, basis_ * C, proj_local * proj_, std::move(ops), std::move(one));
  }

private:
  QuotientPtr global_;
  Mat basis_;  // ambient_dim x dim
  Mat proj_;   // dim x ambient_dim
  std::vector<Mat> var_ops_;
  Vec one_;
};

/// Global algebra k[x]/<f_1..f_n> with its standard monomial basis.
/// Errors: UnitIdeal for inconsistent systems, NotZeroDimensional when some
/// variable has no pure power among the leading terms.
inline LocalAlgebra quotient_algebra(const PolyMap& f) {
  auto q = std::make_shared<QuotientRing>();
  q->k = f.k;
  q->nvars = f.n;
  q->gb = groebner_basis(f.comps);
  if (q->gb.empty()) fail(Errc::not_zero_dimensional, "zero ideal is not zero-dimensional");
  if (is_unit_ideal(q->gb)) fail(Errc::unit_ideal, "the system has no solutions (unit ideal)");
  // caps: need a pure power of every variable among the leading terms
  std::vector<int> cap(static_cast<size_t>(f.n), -1);
  for (const auto& g : q->gb) {
    const Monomial& lm = g.leading_monomial();
    int nz = -1;
    bool pure = true;
    for (int i = 0; i < f.n; ++i) {
      if (lm.e[static_cast<size_t>(i)] > 0) {
        if (nz >= 0) { pure = false; break; }
        nz = i;
      }
    }
    if (pure && nz >= 0) {
      int e = lm.e[static_cast<size_t>(nz)];
      if (cap[static_cast<size_t>(nz)] < 0 || e < cap[static_cast<size_t>(nz)]) cap[static_cast<size_t>(nz)] = e;
    }
  }
  for (int i = 0; i < f.n; ++i)
    if (cap[static_cast<size_t>(i)] < 0)
      fail(Errc::not_zero_dimensional, "no pure power of x" + std::to_string(i + 1) + " among leading terms");
  // enumerate standard monomials below the caps
  std::vector<Monomial> all;
  Monomial cur = Monomial::one(f.n);
  std::function<void(int)> enumerate = [&](int var) {
    if (var == f.n) {
      for (const auto& g : q->gb)
        if (g.leading_monomial().divides(cur)) return;
      all.push_back(cur);
      return;
    }
    for (int e = 0; e < cap[static_cast<size_t>(var)]; ++e) {
      cur.e[static_cast<size_t>(var)] = e;
      enumerate(var + 1);
    }
    cur.e[static_cast<size_t>(var)] = 0;
  };
  enumerate(0);
  GrevlexLess less;
  std::sort(all.begin(), all.end(), [&less](const Monomial& a, const Monomial& b) { return less(a, b); });
  q->basis = std::move(all);
  for (size_t i = 0; i < q->basis.size(); ++i) q->index[q->basis[i]] = static_cast<int>(i);
  for (int i = 0; i < f.n; ++i) {
    Mat op(f.k, q->dim(), q->dim());
    for (size_t j = 0; j < q->dim(); ++j) {
      MPoly xib = MPoly::monomial(f.k, Monomial::var(f.n, i) * q->basis[j], f.k->one());
      op.set_col(j, q->reduce_to_coords(xib));
    }
    q->var_ops.push_back(std::move(op));
  }
  return LocalAlgebra::whole(std::move(q));
}

/// Minimal polynomial of a matrix over its field: lcm of the annihilators of
/// the unit vectors, each found as the first Krylov dependency.
inline UPoly operator_minpoly(const Mat& M) {
  const FieldPtr& k = M.field();
  size_t d = M.rows();
  auto annihilator = [&](const Vec& v0) -> UPoly {
    std::vector<Vec> rows;
    std::vector<std::vector<Element>> combos;
    std::vector<size_t> pivots;
    Vec v = v0;
    for (size_t step = 0; step <= d; ++step) {
      Vec w = v;
      std::vector<Element> combo(step + 1, k->zero());
      combo[step] = k->one();
      for (size_t r = 0; r < rows.size(); ++r) {
        const Element& x = w[pivots[r]];
        if (x.is_zero()) continue;
        Element fct = x;
        for (size_t j = 0; j < d; ++j) w[j] = w[j] - fct * rows[r][j];
        for (size_t j = 0; j < combos[r].size(); ++j) combo[j] = combo[j] - fct * combos[r][j];
      }
      size_t piv = d;
      for (size_t j = 0; j < d; ++j)
        if (!w[j].is_zero()) { piv = j; break; }
      if (piv == d) return UPoly(k, std::move(combo));
      Element inv = w[piv].inverse();
      for (auto& x : w) x = x * inv;
      for (auto& x : combo) x = x * inv;
      rows.push_back(std::move(w));
      combos.push_back(std::move(combo));
      pivots.push_back(piv);
      v = M * v;
    }
    fail(Errc::degenerate_result, "krylov sequence has no dependency");
  };
  UPoly m = UPoly::constant(k->one());
  for (size_t j = 0; j < d; ++j) {
    if (m.deg() == static_cast<int>(d)) break;
    Vec ej(d, k->zero());
    ej[j] = k->one();
    UPoly a = annihilator(ej);
    UPoly g = poly_gcd(m, a);
    m = (m * a).divmod(g).first.monic();
  }
  return m;
}

/// The local factor of A at a rational point p: intersection of the
/// generalized eigenspaces ker((M_{x_i} - p_i I)^dim). NotAZero when trivial.
inline LocalAlgebra local_component(const LocalAlgebra& A, const std::vector<Element>& p) {
  const FieldPtr& k = A.field();
  size_t d = A.dim();
  if (p.size() != static_cast<size_t>(A.nvars())) fail(Errc::descriptor_mismatch, "point has wrong dimension");
  for (const auto& c : p)
    if (!same_field(c.field(), k)) fail(Errc::descriptor_mismatch, "point coordinates in the wrong field");
  std::vector<Mat> nil;
  for (int i = 0; i < A.nvars(); ++i) {
    Mat n = A.var_ops()[static_cast<size_t>(i)] - Mat::identity(k, d).scaled(p[static_cast<size_t>(i)]);
    nil.push_back(n.pow(d));
  }
  Mat C = Mat::identity(k, d);
  for (const auto& n : nil) {
    Mat K = (n * C).kernel();
    C = C * K;
    if (C.cols() == 0) fail(Errc::not_a_zero, "the point is not a zero of the system");
  }
  // complement: sum of the images of the nil operators; pivot columns of the
  // rref give an independent spanning subset
  Mat stacked(k, d, 0);
  for (const auto& n : nil) stacked = Mat::hcat(stacked, n);
  std::vector<size_t> piv;
  stacked.rref(&piv);
  Mat W(k, d, piv.size());
  for (size_t t = 0; t < piv.size(); ++t) W.set_col(t, stacked.col(piv[t]));
  if (C.cols() + W.cols() != d) fail(Errc::degenerate_result, "generalized eigenspace split failed");
  return A.restrict_to(C, W);
}

/// Split A into primary components (one closed point each) by factoring
/// minimal polynomials of multiplication operators; deterministic order.
inline std::vector<LocalAlgebra> primary_components(const LocalAlgebra& A) {
  const FieldPtr& k = A.field();
  std::vector<LocalAlgebra> done;
  std::vector<LocalAlgebra> queue{A};
  while (!queue.empty()) {
    LocalAlgebra V = std::move(queue.back());
    queue.pop_back();
    if (V.dim() == 0) continue;
    // operator pool: variables first, then a few deterministic combinations
    std::vector<Mat> pool = V.var_ops();
    for (int i = 0; i < V.nvars(); ++i)
      for (int j = i + 1; j < V.nvars(); ++j)
        for (int t = 1; t <= 2; ++t)
          pool.push_back(V.var_ops()[static_cast<size_t>(i)] +
                         V.var_ops()[static_cast<size_t>(j)].scaled(k->from_int(t)));
    bool split = false;
    for (const Mat& op : pool) {
      UPoly m = operator_minpoly(op);
      auto facs = factor_univariate(m);
      if (facs.size() < 2) continue;
      std::vector<Mat> kernels;
      size_t total = 0;
      for (const auto& [qf, e] : facs) {
        // q(op)^e
        Mat qm(k, V.dim(), V.dim());
        Mat acc = Mat::identity(k, V.dim());
        // evaluate q at op
        Mat val(k, V.dim(), V.dim());
        for (int ci = 0; ci <= qf.deg(); ++ci) {
          val = val + acc.scaled(qf.coeff(ci));
          acc = acc * op;
        }
        Mat power = val.pow(static_cast<size_t>(e));
        kernels.push_back(power.kernel());
        total += kernels.back().cols();
      }
      if (total != V.dim()) fail(Errc::degenerate_result, "primary decomposition does not span");
      for (size_t t = 0; t < kernels.size(); ++t) {
        Mat W(k, V.dim(), 0);
        for (size_t s = 0; s < kernels.size(); ++s)
          if (s != t) W = Mat::hcat(W, kernels[s]);
        queue.push_back(V.restrict_to(kernels[t], W));
      }
      split = true;
      break;
    }
    if (!split) done.push_back(std::move(V));
  }
  return done;
}

}  // namespace gwdeg
