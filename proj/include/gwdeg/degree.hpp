// The A1-degree engine. Local degrees of isolated zeros come from the
// Eisenbud-Khimshiashvili-Levine bilinear form on the local algebra; local
// degrees at separable closed points come from the trace transfer of <J(x)>;
// the global degree over a rational regular value is the sum over the fiber,
// found by primary decomposition of the fiber algebra.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwdeg/algebra.hpp"
#include "gwdeg/transfer.hpp"

namespace gwdeg {

/// Image of the Jacobian determinant in a component of the quotient algebra.
inline Vec jacobian_element(const PolyMap& f, const LocalAlgebra& Q) {
  return Q.project_poly(jacobian_det(f));
}

struct EKLInfo {
  size_t eta_index = 0;   // dual basis functional used
  Element eta_scale;      // scaled so eta(J) = dim Q
};

/// EKL form for an explicit admissible functional eta (given by its values on
/// the basis); eta(J) must equal dim Q in the field.
inline BilinearForm ekl_form_with_functional(const LocalAlgebra& Q, const Vec& J, const Vec& eta) {
  const FieldPtr& k = Q.field();
  size_t d = Q.dim();
  Element target = k->from_int(static_cast<long long>(d));
  Element got = k->zero();
  for (size_t i = 0; i < d; ++i) got = got + eta[i] * J[i];
  if (!(got == target)) fail(Errc::zero_input, "functional is not admissible: eta(J) != dim Q");
  Mat gram(k, d, d);
  for (size_t i = 0; i < d; ++i) {
    Vec ei(d, k->zero());
    ei[i] = k->one();
    for (size_t j = i; j < d; ++j) {
      Vec ej(d, k->zero());
      ej[j] = k->one();
      Vec prod = Q.multiply(ei, ej);
      Element v = k->zero();
      for (size_t t = 0; t < d; ++t) v = v + eta[t] * prod[t];
      gram.at(i, j) = v;
      gram.at(j, i) = v;
    }
  }
  BilinearForm w(k, std::move(gram));
  if (!is_nondegenerate(w)) fail(Errc::degenerate_result, "EKL form is degenerate");
  return w;
}

/// EKL form with the deterministic eta: the dual functional of the largest
/// basis element carrying a nonzero coefficient of J, scaled so eta(J) = dim.
inline BilinearForm ekl_form(const LocalAlgebra& Q, const Vec& J, EKLInfo* info = nullptr) {
  const FieldPtr& k = Q.field();
  size_t d = Q.dim();
  if (d == 0) fail(Errc::not_a_zero, "EKL form of the zero algebra");
  Int ch = k->characteristic();
  if (ch != 0 && Int(static_cast<long long>(d)) % ch == 0)
    fail(Errc::char_divides_dim, "characteristic divides dim Q");
  size_t idx = d;
  for (size_t i = d; i-- > 0;)
    if (!J[i].is_zero()) { idx = i; break; }
  if (idx == d) fail(Errc::zero_jacobian_class, "Jacobian class vanishes in the local algebra");
  Element scale = k->from_int(static_cast<long long>(d)) / J[idx];
  Vec eta(d, k->zero());
  eta[idx] = scale;
  if (info) {
    info->eta_index = idx;
    info->eta_scale = scale;
  }
  return ekl_form_with_functional(Q, J, eta);
}

/// Local A1-degree at a rational point p: translate p to the origin, localize
/// the quotient there, and take the GW class of the EKL form.
inline GWElement local_degree(const PolyMap& f, const std::vector<Element>& p, EKLInfo* info = nullptr) {
  if (p.size() != static_cast<size_t>(f.n)) fail(Errc::descriptor_mismatch, "point has wrong dimension");
  std::vector<MPoly> shifted;
  for (const auto& comp : f.comps) {
    MPoly g = comp.translate(p);
    g.add_term(Monomial::one(f.n), -g.eval(std::vector<Element>(p.size(), f.k->zero())));
    shifted.push_back(std::move(g));
  }
  PolyMap g(f.k, std::move(shifted));
  LocalAlgebra whole = quotient_algebra(g);
  LocalAlgebra loc = local_component(whole, std::vector<Element>(p.size(), f.k->zero()));
  Vec J = jacobian_element(g, loc);
  return gw_from_form(ekl_form(loc, J, info));
}

/// A closed point of affine n-space: a residue field L (the base field itself
/// or a simple extension tower over it) and coordinates in L.
struct ClosedPoint {
  FieldPtr residue_field;
  std::vector<Element> coords;
};

/// Local degree at a separable closed point where f is etale:
/// Tr_{k(x)/k} <J(x)>.
inline GWElement local_degree_at_closed_point(const PolyMap& f, const ClosedPoint& x) {
  if (x.coords.size() != static_cast<size_t>(f.n)) fail(Errc::descriptor_mismatch, "point has wrong dimension");
  const FieldPtr& L = x.residue_field;
  Element jval = jacobian_det(f).eval(x.coords);
  if (same_field(L, f.k)) {
    if (jval.is_zero()) fail(Errc::not_etale, "Jacobian vanishes at the point");
    return GWElement::generator(f.k, jval);
  }
  for (FieldPtr cur = L; !same_field(cur, f.k); cur = cur->base()) {
    if (!cur->is_extension()) fail(Errc::not_an_extension, "residue field is not over the base field");
    if (!is_separable_extension(cur))
      fail(Errc::inseparable_residue_field, "residue field is inseparable over the base");
  }
  if (jval.is_zero()) fail(Errc::not_etale, "Jacobian vanishes at the point");
  return cohomological_transfer_diag(L, {jval}, f.k);
}

/// One fiber point of a global degree computation.
struct FiberPoint {
  bool rational = false;
  std::vector<Element> coords;     // over k (rational) or over residue_field
  FieldPtr residue_field;          // null for rational points
  UPoly generator_minpoly;         // minimal polynomial of the residue generator
  size_t multiplicity = 0;         // local algebra dimension
  GWElement degree;

  FiberPoint() : degree(Field::rationals()) {}
};

namespace detail {

// Identify a primary component as a rational (possibly fat) point when every
// variable operator has a primary minpoly with a linear irreducible part.
inline std::optional<std::vector<Element>> rational_point_of(const LocalAlgebra& V) {
  std::vector<Element> coords;
  for (const auto& op : V.var_ops()) {
    UPoly m = operator_minpoly(op);
    auto facs = factor_univariate(m);
    if (facs.size() != 1 || facs[0].first.deg() != 1) return std::nullopt;
    coords.push_back(-facs[0].first.coeff(0));
  }
  return coords;
}

// Try to present a primary component as a single etale closed point with the
// residue field generated by one multiplication operator.
inline std::optional<std::pair<FieldPtr, std::vector<Element>>> etale_point_of(const LocalAlgebra& V) {
  const FieldPtr& k = V.field();
  std::vector<Mat> pool = V.var_ops();
  for (int i = 0; i < V.nvars(); ++i)
    for (int j = i + 1; j < V.nvars(); ++j)
      for (int t = 1; t <= 2; ++t)
        pool.push_back(V.var_ops()[static_cast<size_t>(i)] +
                       V.var_ops()[static_cast<size_t>(j)].scaled(k->from_int(t)));
  for (const Mat& op : pool) {
    UPoly m = operator_minpoly(op);
    auto facs = factor_univariate(m);
    if (facs.size() != 1 || facs[0].second != 1) continue;
    const UPoly& q = facs[0].first;
    if (q.deg() != static_cast<int>(V.dim()) || q.deg() < 2) continue;
    if (k->is_prime_field() && poly_gcd(q, q.derivative()).deg() != 0) continue;  // inseparable
    FieldPtr L = Field::extension(k, q.c, "t");
    // cyclic basis on the identity: 1, alpha, alpha^2, ... spans the component
    Mat C(k, V.dim(), V.dim());
    Vec w = V.one();
    for (size_t s = 0; s < V.dim(); ++s) {
      C.set_col(s, w);
      w = op * w;
    }
    auto Cinv = C.inverse();
    if (!Cinv) continue;
    std::vector<Element> coords;
    for (const auto& vop : V.var_ops()) {
      Vec img = *Cinv * (vop * V.one());
      coords.push_back(L->make(img));
    }
    return std::make_pair(L, std::move(coords));
  }
  return std::nullopt;
}

}  // namespace detail

/// Global A1-degree over a rational value y: sum of local degrees over the
/// fiber f^{-1}(y). Rational fiber points go through the EKL form (fat points
/// included); irrational points need an etale local factor with separable
/// residue field generated by one multiplication operator, and contribute the
/// trace transfer of <J(x)>. Anything else raises UnsupportedFiberPoint.
inline GWElement global_degree(const PolyMap& f, const std::vector<Element>& y,
                               std::vector<FiberPoint>* breakdown = nullptr) {
  if (y.size() != static_cast<size_t>(f.n)) fail(Errc::descriptor_mismatch, "value has wrong dimension");
  std::vector<MPoly> comps;
  for (int i = 0; i < f.n; ++i)
    comps.push_back(f.comps[static_cast<size_t>(i)] - MPoly::constant(f.k, f.n, y[static_cast<size_t>(i)]));
  PolyMap g(f.k, std::move(comps));
  LocalAlgebra whole = quotient_algebra(g);
  std::vector<LocalAlgebra> parts = primary_components(whole);

  std::vector<FiberPoint> points;
  for (const auto& part : parts) {
    FiberPoint fp;
    fp.multiplicity = part.dim();
    if (auto p = detail::rational_point_of(part)) {
      // sanity: must actually solve f = y
      for (const auto& comp : g.comps)
        if (!comp.eval(*p).is_zero()) fail(Errc::degenerate_result, "eigenvalue point is not a fiber point");
      fp.rational = true;
      fp.coords = *p;
      Vec J = jacobian_element(g, part);
      fp.degree = gw_from_form(ekl_form(part, J));
    } else if (auto cp = detail::etale_point_of(part)) {
      const auto& [L, coords] = *cp;
      for (const auto& comp : g.comps)
        if (!comp.eval(coords).is_zero()) fail(Errc::degenerate_result, "closed point is not a fiber point");
      Element jval = jacobian_det(f).eval(coords);
      if (jval.is_zero()) fail(Errc::not_etale, "Jacobian vanishes at a reduced closed point");
      fp.rational = false;
      fp.coords = coords;
      fp.residue_field = L;
      fp.generator_minpoly = UPoly(f.k, L->minpoly());
      fp.degree = cohomological_transfer_diag(L, {jval}, f.k);
    } else {
      fail(Errc::unsupported_fiber_point,
           "fiber has a non-etale irrational point (or the residue field needs several generators)");
    }
    points.push_back(std::move(fp));
  }

  // deterministic order: rational points first by coordinates, then closed
  // points by their generator minimal polynomial
  std::sort(points.begin(), points.end(), [](const FiberPoint& a, const FiberPoint& b) {
    if (a.rational != b.rational) return a.rational;
    if (a.rational) {
      for (size_t i = 0; i < a.coords.size(); ++i) {
        int c = a.coords[i].cmp(b.coords[i]);
        if (c != 0) return c < 0;
      }
      return false;
    }
    return detail::upoly_cmp(a.generator_minpoly, b.generator_minpoly) < 0;
  });

  GWElement total = GWElement::zero(f.k);
  for (const auto& fp : points) total = total + fp.degree;
  if (breakdown) *breakdown = std::move(points);
  return total;
}

}  // namespace gwdeg
