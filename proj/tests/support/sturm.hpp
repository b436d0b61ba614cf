// Exact real-root machinery over Q used as an independent oracle: Sturm
// chains, root isolation by bisection, and the signed count of real roots of
// a squarefree polynomial weighted by the sign of the derivative.
//
// Deliberately self-contained on top of UPoly arithmetic: no Groebner bases,
// no EKL forms, no transfers.
#pragma once

#include <vector>

#include "gwdeg/field.hpp"

namespace oracle {

using gwdeg::Element;
using gwdeg::Field;
using gwdeg::Rat;
using gwdeg::UPoly;

inline int sign_of(const Rat& q) { return q == 0 ? 0 : (q < 0 ? -1 : 1); }

inline Rat eval_at(const UPoly& f, const Rat& x) {
  Rat acc = 0;
  for (int i = f.deg(); i >= 0; --i) acc = acc * x + f.coeff(i).rat();
  return acc;
}

inline std::vector<UPoly> sturm_chain(const UPoly& f) {
  std::vector<UPoly> chain;
  chain.push_back(f);
  chain.push_back(f.derivative());
  while (!chain.back().is_zero() && chain.back().deg() > 0) {
    const UPoly& a = chain[chain.size() - 2];
    const UPoly& b = chain.back();
    UPoly r = a.divmod(b).second;
    if (r.is_zero()) break;
    chain.push_back(UPoly(r.k, [&] {
      std::vector<Element> c = r.c;
      for (auto& x : c) x = -x;
      return c;
    }()));
  }
  return chain;
}

inline int sign_changes_at(const std::vector<UPoly>& chain, const Rat& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_of(eval_at(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline int sign_at_infinity(const UPoly& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = gwdeg::rat_sign(p.lead().rat());
  if (!positive && p.deg() % 2 == 1) s = -s;
  return s;
}

inline int sign_changes_at_infinity(const std::vector<UPoly>& chain, bool positive) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at_infinity(p, positive);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Number of distinct real roots in the half-open interval (a, b].
inline int roots_in(const std::vector<UPoly>& chain, const Rat& a, const Rat& b) {
  return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

/// Cauchy bound: all real roots lie in (-B, B).
inline Rat root_bound(const UPoly& f) {
  Rat lc = f.lead().rat();
  Rat best = 0;
  for (int i = 0; i < f.deg(); ++i) {
    Rat c = f.coeff(i).rat() / lc;
    if (c < 0) c = -c;
    if (c > best) best = c;
  }
  return best + 1;
}

/// Isolating intervals (a, b], one simple root each; f must be squarefree.
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& f) {
  auto chain = sturm_chain(f);
  std::vector<std::pair<Rat, Rat>> out;
  Rat bound = root_bound(f);
  std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = roots_in(chain, a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(a, b);
      continue;
    }
    Rat mid = (a + b) / 2;
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
  return out;
}

/// Sum over the real roots r of the squarefree f of sign(f'(r)), each root
/// handled through its isolating interval (exact throughout).
inline long long signed_root_count(const UPoly& f) {
  long long total = 0;
  for (auto& [a, b] : isolate_real_roots(f)) {
    Rat fb = eval_at(f, b);
    if (fb == 0) {
      // the root is the rational endpoint itself
      total += sign_of(eval_at(f.derivative(), b));
    } else {
      // exactly one simple interior root: f crosses upward iff f(b) > 0
      total += sign_of(fb);
    }
  }
  return total;
}

inline long long count_real_roots(const UPoly& f) {
  auto chain = sturm_chain(f);
  return sign_changes_at_infinity(chain, false) - sign_changes_at_infinity(chain, true);
}

}  // namespace oracle
