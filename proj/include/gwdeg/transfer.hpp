// Transfers GW(L) -> GW(K) along simple extensions and towers.
//
// The functional transfer composes a bilinear form over L with any nonzero
// K-linear functional L -> K. The cohomological transfer is the trace-
// functional case, valid for separable steps, composed down the tower; it is
// generator-independent. The untwisted geometric transfer tau^z is not exposed
// separately: it equals the cohomological transfer of <P'(z)>^{-1} * beta.
#pragma once

#include "gwdeg/form.hpp"
#include "gwdeg/gw.hpp"

namespace gwdeg {

/// Gram of f∘beta on the K-basis {b_i z^j}, where f is given by its values on
/// the power basis 1, z, ..., z^{d-1} of L over K.
inline BilinearForm functional_transfer(const std::vector<Element>& f_values, const BilinearForm& beta) {
  const FieldPtr& L = beta.field();
  if (!L->is_extension()) fail(Errc::not_an_extension, "functional transfer needs an extension field");
  const FieldPtr& K = L->base();
  size_t d = static_cast<size_t>(L->ext_degree());
  if (f_values.size() != d) fail(Errc::descriptor_mismatch, "functional needs one value per power basis element");
  bool all_zero = true;
  for (const auto& v : f_values) {
    if (!same_field(v.field(), K)) fail(Errc::descriptor_mismatch, "functional values must lie in the base");
    if (!v.is_zero()) all_zero = false;
  }
  if (all_zero) fail(Errc::zero_functional, "the zero functional does not transfer forms");
  if (!is_nondegenerate(beta)) fail(Errc::degenerate_form, "transfer of a degenerate form");

  auto apply_f = [&](const Element& w) {
    Element acc = K->zero();
    for (size_t m = 0; m < d; ++m) acc = acc + w.coords()[m] * f_values[m];
    return acc;
  };

  size_t r = beta.dim();
  Element z = L->generator();
  std::vector<Element> zpow(2 * d - 1, L->one());
  for (size_t j = 1; j < zpow.size(); ++j) zpow[j] = zpow[j - 1] * z;

  Mat gram(K, r * d, r * d);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t s = 0; s < r; ++s)
        for (size_t t = 0; t < d; ++t) {
          Element w = zpow[j + t] * beta.gram().at(i, s);
          gram.at(i * d + j, s * d + t) = apply_f(w);
        }
  BilinearForm out(K, std::move(gram));
  if (!is_nondegenerate(out)) fail(Errc::degenerate_result, "transferred form is degenerate");
  return out;
}

/// One trace step down the tower: Tr_{L/base(L)} composed with beta.
inline BilinearForm trace_transfer_step(const BilinearForm& beta) {
  const FieldPtr& L = beta.field();
  if (!L->is_extension()) fail(Errc::not_an_extension, "trace transfer needs an extension field");
  if (!is_separable_extension(L))
    fail(Errc::inseparable_residue_field, "trace transfer needs a separable extension");
  size_t d = static_cast<size_t>(L->ext_degree());
  std::vector<Element> f_values;
  Element zpow = L->one();
  for (size_t j = 0; j < d; ++j) {
    f_values.push_back(trace(zpow));
    zpow = zpow * L->generator();
  }
  return functional_transfer(f_values, beta);
}

/// Compose trace transfers from the field of beta down to K (a field on the
/// tower of beta's field). Identity when the fields already agree.
inline BilinearForm transfer_form_to(BilinearForm beta, const FieldPtr& K) {
  while (!same_field(beta.field(), K)) {
    if (!beta.field()->is_extension())
      fail(Errc::not_an_extension, "target field is not below the form's field");
    beta = trace_transfer_step(beta);
  }
  return beta;
}

/// Cohomological transfer Tr_{L/K} into GW(K); K must be Q or F_p so the
/// result has a GW normal form.
inline GWElement cohomological_transfer(const BilinearForm& beta, const FieldPtr& K) {
  BilinearForm down = transfer_form_to(beta, K);
  return gw_from_form(down);
}

/// Transfer of a diagonal form given by its entries over L.
inline GWElement cohomological_transfer_diag(const FieldPtr& L, const std::vector<Element>& entries,
                                             const FieldPtr& K) {
  return cohomological_transfer(BilinearForm::diagonal(L, entries), K);
}

}  // namespace gwdeg
