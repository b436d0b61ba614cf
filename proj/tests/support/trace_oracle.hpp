// Standalone scaled-trace-form oracle over Q[t]/(q): builds the Gram matrix
// of (u, v) -> Tr(w * u * v) on the power basis with nothing but rational
// vector arithmetic. Used to check transfer-based degree contributions by an
// independent route.
#pragma once

#include <vector>

#include "gwdeg/numeric.hpp"

namespace oracle {

using gwdeg::Rat;

// dense rational polynomials, c[i] ~ t^i
using QP = std::vector<Rat>;

inline void qp_trim(QP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline QP qp_mul(const QP& a, const QP& b) {
  if (a.empty() || b.empty()) return {};
  QP r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Remainder mod a monic q.
inline QP qp_mod(QP a, const QP& q) {
  qp_trim(a);
  while (a.size() >= q.size()) {
    Rat f = a.back();
    size_t s = a.size() - q.size();
    for (size_t i = 0; i < q.size(); ++i) a[s + i] -= f * q[i];
    qp_trim(a);
  }
  a.resize(q.size() - 1, Rat(0));
  return a;
}

/// Trace of multiplication by w on Q[t]/(q), q monic.
inline Rat field_trace(const QP& w, const QP& q) {
  size_t d = q.size() - 1;
  Rat tr = 0;
  for (size_t j = 0; j < d; ++j) {
    QP tj(j + 1, Rat(0));
    tj[j] = 1;
    QP col = qp_mod(qp_mul(w, tj), q);
    tr += col[j];
  }
  return tr;
}

/// Gram of (u,v) -> Tr(w u v) on the power basis of Q[t]/(q).
inline std::vector<std::vector<Rat>> scaled_trace_gram(const QP& w, const QP& q) {
  size_t d = q.size() - 1;
  std::vector<std::vector<Rat>> g(d, std::vector<Rat>(d, Rat(0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      QP ti(i + 1, Rat(0)), tj(j + 1, Rat(0));
      ti[i] = 1;
      tj[j] = 1;
      QP prod = qp_mod(qp_mul(qp_mul(ti, tj), w), q);
      g[i][j] = field_trace(prod, q);
    }
  return g;
}

}  // namespace oracle
