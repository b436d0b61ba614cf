// Univariate polynomial factorization over F_p and Q.
//
// F_p: squarefree decomposition (with the x^p collapse in characteristic p),
// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
// with a fixed-seed generator so output is deterministic.
//
// Q: monic reduction, Yun squarefree decomposition, then Zassenhaus per
// squarefree part: reduce mod a good small prime, factor there, Hensel-lift
// the factors above the Mignotte bound, and recombine subsets by exact trial
// division over Z.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "gwdeg/field.hpp"

namespace gwdeg {

using PolyFactor = std::pair<UPoly, int>;  // monic irreducible, multiplicity

namespace detail {

inline int upoly_cmp(const UPoly& a, const UPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  for (int i = a.deg(); i >= 0; --i) {
    int c = a.coeff(i).cmp(b.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

inline void sort_factors(std::vector<PolyFactor>& fs) {
  std::sort(fs.begin(), fs.end(),
            [](const PolyFactor& x, const PolyFactor& y) { return upoly_cmp(x.first, y.first) < 0; });
}

// --- F_p ------------------------------------------------------------------

// f = g(x^p) over the prime field collapses to g(x)^p since c^(1/p) = c.
inline UPoly undo_frobenius(const UPoly& f, long long p) {
  std::vector<Element> cs;
  for (int i = 0; i <= f.deg(); i += static_cast<int>(p)) cs.push_back(f.coeff(i));
  return UPoly(f.k, std::move(cs));
}

inline void squarefree_mod_p(const UPoly& f, int mult, std::vector<PolyFactor>& out) {
  long long p = f.k->prime();
  UPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_mod_p(undo_frobenius(f, p), mult * static_cast<int>(p), out);
    return;
  }
  UPoly c = poly_gcd(f, d);
  UPoly w = f.divmod(c).first;
  int i = 1;
  while (w.deg() > 0) {
    UPoly y = poly_gcd(w, c);
    UPoly z = w.divmod(y).first;
    if (z.deg() > 0) out.emplace_back(z.monic(), mult * i);
    w = y;
    c = c.divmod(y).first;
    ++i;
  }
  if (c.deg() > 0) squarefree_mod_p(undo_frobenius(c, p), mult * static_cast<int>(p), out);
}

inline void equal_degree_split(const UPoly& w, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (w.deg() == d) {
    out.push_back(w.monic());
    return;
  }
  long long p = w.k->prime();
  Int e = (boost::multiprecision::pow(Int(p), static_cast<unsigned>(d)) - 1) / 2;
  while (true) {
    std::vector<Element> cs;
    for (int i = 0; i < w.deg(); ++i) cs.push_back(w.k->from_int(static_cast<long long>(rng() % static_cast<unsigned long long>(p))));
    UPoly r(w.k, std::move(cs));
    if (r.deg() < 1) continue;
    UPoly s = poly_powmod(r, e, w) - UPoly::constant(w.k->one());
    UPoly g = poly_gcd(s, w);
    if (g.deg() > 0 && g.deg() < w.deg()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(w.divmod(g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Monic irreducible factors of f over F_p with multiplicities, sorted.
/// The constant leading unit is dropped.
inline std::vector<PolyFactor> factor_mod_p(const UPoly& f) {
  if (!f.k->is_prime_field()) fail(Errc::unsupported_field, "factor_mod_p needs a prime field");
  if (f.is_zero()) fail(Errc::zero_input, "factorization of 0");
  std::vector<PolyFactor> out;
  if (f.deg() < 1) return out;
  long long p = f.k->prime();
  std::vector<PolyFactor> sqf;
  detail::squarefree_mod_p(f.monic(), 1, sqf);
  std::mt19937_64 rng(0xC0FFEEu ^ static_cast<unsigned long long>(p));
  for (const auto& [g, mult] : sqf) {
    // distinct-degree stage
    UPoly v = g;
    UPoly h = UPoly::x(f.k);
    int d = 0;
    std::vector<std::pair<UPoly, int>> stages;
    while (v.deg() >= 2 * (d + 1)) {
      ++d;
      h = poly_powmod(h, Int(p), v);
      UPoly gd = poly_gcd(h - UPoly::x(f.k), v);
      if (gd.deg() > 0) {
        stages.emplace_back(gd, d);
        v = v.divmod(gd).first;
        if (v.deg() == 0) break;
        h = h.divmod(v).second;
      }
    }
    if (v.deg() > 0) stages.emplace_back(v, v.deg());
    for (const auto& [w, wd] : stages) {
      std::vector<UPoly> irr;
      detail::equal_degree_split(w, wd, rng, irr);
      for (const auto& q : irr) out.emplace_back(q, mult);
    }
  }
  detail::sort_factors(out);
  return out;
}

// --- Q ----------------------------------------------------------------------

namespace detail {

using ZPoly = std::vector<Int>;  // c[i] coeff of x^i, trimmed

inline void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline ZPoly zp_mod(ZPoly a, const Int& m) {
  for (auto& c : a) c = mod_pos(c, m);
  zp_trim(a);
  return a;
}

inline ZPoly zp_add_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < r.size(); ++i) {
    Int s = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
    r[i] = mod_pos(s, m);
  }
  zp_trim(r);
  return r;
}

inline ZPoly zp_sub_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < r.size(); ++i) {
    Int s = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
    r[i] = mod_pos(s, m);
  }
  zp_trim(r);
  return r;
}

inline ZPoly zp_mul_mod(const ZPoly& a, const ZPoly& b, const Int& m) { return zp_mod(zp_mul(a, b), m); }

/// Division with remainder mod m by a monic divisor.
inline std::pair<ZPoly, ZPoly> zp_divmod_mod(ZPoly a, const ZPoly& d, const Int& m) {
  a = zp_mod(a, m);
  ZPoly q;
  if (zp_deg(a) >= zp_deg(d)) q.assign(static_cast<size_t>(zp_deg(a) - zp_deg(d) + 1), Int(0));
  while (zp_deg(a) >= zp_deg(d) && !a.empty()) {
    Int f = a.back();
    int s = zp_deg(a) - zp_deg(d);
    q[static_cast<size_t>(s)] = f;
    for (size_t i = 0; i < d.size(); ++i)
      a[static_cast<size_t>(s) + i] = mod_pos(a[static_cast<size_t>(s) + i] - f * d[i], m);
    zp_trim(a);
  }
  zp_trim(q);
  return {q, a};
}

/// Centered representative with coefficients in (-m/2, m/2].
inline ZPoly zp_center(ZPoly a, const Int& m) {
  Int half = m / 2;
  for (auto& c : a) {
    c = mod_pos(c, m);
    if (c > half) c -= m;
  }
  zp_trim(a);
  return a;
}

/// Exact division over Z by a monic divisor; nullopt when it does not divide.
inline std::optional<ZPoly> zp_exact_divide(ZPoly a, const ZPoly& d) {
  if (zp_deg(a) < zp_deg(d)) return std::nullopt;
  ZPoly q(static_cast<size_t>(zp_deg(a) - zp_deg(d) + 1), Int(0));
  while (zp_deg(a) >= zp_deg(d) && !a.empty()) {
    Int f = a.back();
    int s = zp_deg(a) - zp_deg(d);
    q[static_cast<size_t>(s)] = f;
    for (size_t i = 0; i < d.size(); ++i) a[static_cast<size_t>(s) + i] -= f * d[i];
    zp_trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

struct HenselQuad {
  ZPoly g, h, s, t;
};

/// One quadratic Hensel step: from congruences mod m to congruences mod m^2.
/// f = g*h and s*g + t*h = 1 mod m, h monic.
inline HenselQuad hensel_step(const ZPoly& f, const HenselQuad& in, const Int& m) {
  Int m2 = m * m;
  ZPoly e = zp_sub_mod(zp_mod(f, m2), zp_mul_mod(in.g, in.h, m2), m2);
  auto [q, r] = zp_divmod_mod(zp_mul_mod(in.s, e, m2), in.h, m2);
  ZPoly g2 = zp_add_mod(in.g, zp_add_mod(zp_mul_mod(in.t, e, m2), zp_mul_mod(q, in.g, m2), m2), m2);
  ZPoly h2 = zp_add_mod(in.h, r, m2);
  ZPoly b = zp_sub_mod(zp_add_mod(zp_mul_mod(in.s, g2, m2), zp_mul_mod(in.t, h2, m2), m2), ZPoly{Int(1)}, m2);
  auto [c, d] = zp_divmod_mod(zp_mul_mod(in.s, b, m2), h2, m2);
  ZPoly s2 = zp_sub_mod(in.s, d, m2);
  ZPoly t2 = zp_sub_mod(in.t, zp_add_mod(zp_mul_mod(in.t, b, m2), zp_mul_mod(c, g2, m2), m2), m2);
  return HenselQuad{g2, h2, s2, t2};
}

inline ZPoly upoly_to_zpoly(const UPoly& f) {
  ZPoly r;
  for (int i = 0; i <= f.deg(); ++i) r.push_back(Int(f.coeff(i).residue()));
  zp_trim(r);
  return r;
}

/// Lift the factorization F = prod(facs) (monic, mod p, pairwise coprime) to
/// modulus M = p^(2^K); recursive splitting into halves.
inline void hensel_tree(const ZPoly& F, const std::vector<ZPoly>& facs, size_t lo, size_t hi, long long p,
                        const Int& M, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(zp_mod(F, M));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  auto Fp = Field::prime_field(p);
  // initial pair and Bezout data mod p
  ZPoly g0{Int(1)}, h0{Int(1)};
  for (size_t i = lo; i < mid; ++i) g0 = zp_mod(zp_mul(g0, facs[i]), Int(p));
  for (size_t i = mid; i < hi; ++i) h0 = zp_mod(zp_mul(h0, facs[i]), Int(p));
  auto to_up = [&](const ZPoly& z) {
    std::vector<Element> cs;
    for (const auto& c : z) cs.push_back(Fp->from_int(c));
    return UPoly(Fp, std::move(cs));
  };
  auto [gg, ss, tt] = poly_xgcd(to_up(g0), to_up(h0));
  if (gg.deg() != 0) fail(Errc::degenerate_result, "hensel: factors not coprime mod p");
  HenselQuad hq{g0, h0, upoly_to_zpoly(ss), upoly_to_zpoly(tt)};
  // M is p^(2^K), so the doubling schedule lands on M exactly and F is always
  // known modulo the working modulus.
  Int m(p);
  while (m < M) {
    hq = hensel_step(F, hq, m);
    m = m * m;
  }
  hensel_tree(zp_mod(hq.g, M), facs, lo, mid, p, M, out);
  hensel_tree(zp_mod(hq.h, M), facs, mid, hi, p, M, out);
}

inline UPoly zpoly_to_upoly_q(const ZPoly& z) {
  auto q = Field::rationals();
  std::vector<Element> cs;
  for (const auto& c : z) cs.push_back(q->from_int(c));
  return UPoly(q, std::move(cs));
}

/// Zassenhaus on a monic squarefree integer polynomial; returns monic
/// irreducible integer factors.
inline std::vector<ZPoly> factor_monic_squarefree_z(ZPoly G) {
  std::vector<ZPoly> result;
  if (zp_deg(G) <= 1) {
    result.push_back(G);
    return result;
  }
  // choose an odd prime where G stays squarefree
  long long p = 0;
  for (long long cand = 3;; cand += 2) {
    if (!is_probable_prime(Int(cand))) continue;
    auto Fp = Field::prime_field(cand);
    std::vector<Element> cs;
    for (const auto& c : G) cs.push_back(Fp->from_int(c));
    UPoly gp(Fp, std::move(cs));
    if (gp.deg() != zp_deg(G)) continue;  // cannot happen (monic), kept for clarity
    if (poly_gcd(gp, gp.derivative()).deg() == 0) {
      p = cand;
      break;
    }
    if (cand > 1000) fail(Errc::degenerate_result, "no good prime found for factorization");
  }
  auto Fp = Field::prime_field(p);
  std::vector<Element> cs;
  for (const auto& c : G) cs.push_back(Fp->from_int(c));
  auto modp_factors = factor_mod_p(UPoly(Fp, std::move(cs)));
  if (modp_factors.size() == 1) {
    result.push_back(G);
    return result;
  }
  // Mignotte-style bound: factor coefficients are below 2^n (||G||_2 + 1)
  Int norm2 = 0;
  for (const auto& c : G) norm2 += c * c;
  Int B = (boost::multiprecision::sqrt(norm2) + 1) << static_cast<unsigned>(zp_deg(G) + 1);
  Int M(p);
  while (M < 2 * B + 1) M = M * M;
  std::vector<ZPoly> modp;
  for (const auto& [f, mult] : modp_factors) {
    ZPoly z;
    for (int i = 0; i <= f.deg(); ++i) z.push_back(Int(f.coeff(i).residue()));
    modp.push_back(std::move(z));
  }
  std::vector<ZPoly> lifted;
  hensel_tree(zp_mod(G, M), modp, 0, modp.size(), p, M, lifted);

  // subset recombination with exact trial division
  std::vector<size_t> active(lifted.size());
  for (size_t i = 0; i < active.size(); ++i) active[i] = i;
  size_t s = 1;
  while (2 * s <= active.size()) {
    bool found = false;
    std::vector<size_t> comb(s);
    // enumerate subsets of `active` of size s
    std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
      if (pos == s) {
        ZPoly cand{Int(1)};
        for (size_t i = 0; i < s; ++i) cand = zp_mul_mod(cand, lifted[active[comb[i]]], M);
        cand = zp_center(cand, M);
        auto quot = zp_exact_divide(G, cand);
        if (!quot) return false;
        result.push_back(cand);
        G = *quot;
        std::vector<size_t> rest;
        for (size_t i = 0, j = 0; i < active.size(); ++i) {
          if (j < s && comb[j] == i) { ++j; continue; }
          rest.push_back(active[i]);
        }
        active = rest;
        return true;
      }
      for (size_t i = start; i + (s - pos) <= active.size(); ++i) {
        comb[pos] = i;
        if (rec(pos + 1, i + 1)) return true;
      }
      return false;
    };
    found = rec(0, 0);
    if (!found) ++s;
  }
  if (zp_deg(G) >= 1) result.push_back(G);
  return result;
}

/// Yun's squarefree decomposition for monic rational polynomials.
inline std::vector<PolyFactor> yun_squarefree(const UPoly& f) {
  std::vector<PolyFactor> out;
  UPoly a = poly_gcd(f, f.derivative());
  if (a.deg() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  UPoly b = f.divmod(a).first;
  UPoly c = f.derivative().divmod(a).first;
  UPoly d = c - b.derivative();
  for (int i = 1; b.deg() > 0; ++i) {
    UPoly g = poly_gcd(b, d);
    if (g.deg() > 0) out.emplace_back(g.monic(), i);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace detail

/// Monic irreducible factors over Q with multiplicities, sorted; the leading
/// coefficient is discarded.
inline std::vector<PolyFactor> factor_rational(const UPoly& f) {
  if (!f.k->is_rationals()) fail(Errc::unsupported_field, "factor_rational needs a polynomial over Q");
  if (f.is_zero()) fail(Errc::zero_input, "factorization of 0");
  std::vector<PolyFactor> out;
  if (f.deg() < 1) return out;
  for (const auto& [q, mult] : detail::yun_squarefree(f.monic())) {
    if (q.deg() == 1) {
      out.emplace_back(q, mult);
      continue;
    }
    // substitute x -> x/l to obtain a monic integer polynomial
    Int l = 1;
    for (int i = 0; i <= q.deg(); ++i) l = boost::multiprecision::lcm(l, rat_den(q.coeff(i).rat()));
    detail::ZPoly G;
    for (int i = 0; i <= q.deg(); ++i) {
      Rat ci = q.coeff(i).rat() * Rat(boost::multiprecision::pow(l, static_cast<unsigned>(q.deg() - i)));
      G.push_back(rat_num(ci));
    }
    for (const auto& H : detail::factor_monic_squarefree_z(G)) {
      // back substitution: h(x) = H(l x) / l^deg
      auto qq = Field::rationals();
      std::vector<Element> cs;
      int dh = detail::zp_deg(H);
      for (int i = 0; i <= dh; ++i) {
        Rat ci = Rat(H[static_cast<size_t>(i)]) * Rat(boost::multiprecision::pow(l, static_cast<unsigned>(i))) /
                 Rat(boost::multiprecision::pow(l, static_cast<unsigned>(dh)));
        cs.push_back(qq->from_rat(ci));
      }
      out.emplace_back(UPoly(qq, std::move(cs)), mult);
    }
  }
  detail::sort_factors(out);
  return out;
}

/// Factorization dispatch for the supported coefficient fields.
inline std::vector<PolyFactor> factor_univariate(const UPoly& f) {
  switch (f.k->kind()) {
    case Field::Kind::rationals: return factor_rational(f);
    case Field::Kind::prime_field: return factor_mod_p(f);
    case Field::Kind::extension:
      fail(Errc::unsupported_field, "factorization over extension fields is not supported");
  }
  fail(Errc::unsupported_field, "bad field kind");
}

/// Roots in the coefficient field, with multiplicities (from linear factors).
inline std::vector<std::pair<Element, int>> field_roots(const UPoly& f) {
  std::vector<std::pair<Element, int>> out;
  for (const auto& [g, mult] : factor_univariate(f))
    if (g.deg() == 1) out.emplace_back(-g.coeff(0), mult);
  return out;
}

}  // namespace gwdeg
