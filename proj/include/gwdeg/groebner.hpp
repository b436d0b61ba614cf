// Buchberger's algorithm with the coprime-leading-term criterion, full
// normal-form reduction, and reduced Groebner bases with deterministic output
// for a fixed input ordering.
#pragma once

#include <algorithm>
#include <vector>

#include "gwdeg/mpoly.hpp"

namespace gwdeg {

/// Full reduction of f modulo G: no term of the result is divisible by any
/// leading monomial of G.
inline MPoly normal_form(MPoly f, const std::vector<MPoly>& G) {
  MPoly r(f.field(), f.nvars());
  while (!f.is_zero()) {
    const Monomial& lm = f.leading_monomial();
    bool reduced = false;
    for (const MPoly& g : G) {
      if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
      Element c = f.leading_coeff() / g.leading_coeff();
      f = f - g.times_monomial(lm.quotient_by(g.leading_monomial()), c);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lm, f.leading_coeff());
      f.add_term(lm, -f.leading_coeff());
    }
  }
  return r;
}

inline MPoly s_poly(const MPoly& f, const MPoly& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  MPoly a = f.times_monomial(l.quotient_by(f.leading_monomial()), f.leading_coeff().inverse());
  MPoly b = g.times_monomial(l.quotient_by(g.leading_monomial()), g.leading_coeff().inverse());
  return a - b;
}

/// Reduced Groebner basis (grevlex), monic, sorted by leading monomial.
inline std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens) {
  std::vector<MPoly> G;
  for (const auto& f : gens)
    if (!f.is_zero()) G.push_back(f.scaled(f.leading_coeff().inverse()));
  if (G.empty()) return G;

  struct Pair {
    size_t i, j;
    Monomial lcm;
  };
  GrevlexLess less;
  auto pair_less = [&less](const Pair& a, const Pair& b) {
    if (a.lcm != b.lcm) return less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> pairs;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pairs.push_back(Pair{i, j, Monomial::lcm(G[i].leading_monomial(), G[j].leading_monomial())});
    std::sort(pairs.begin(), pairs.end(), pair_less);
  };
  for (size_t j = 1; j < G.size(); ++j)
    for (size_t i = 0; i < j; ++i)
      pairs.push_back(Pair{i, j, Monomial::lcm(G[i].leading_monomial(), G[j].leading_monomial())});
  std::sort(pairs.begin(), pairs.end(), pair_less);

  while (!pairs.empty()) {
    Pair pr = pairs.front();
    pairs.erase(pairs.begin());
    const Monomial &mi = G[pr.i].leading_monomial(), &mj = G[pr.j].leading_monomial();
    // Buchberger's coprime criterion
    if (pr.lcm == mi * mj) continue;
    MPoly s = normal_form(s_poly(G[pr.i], G[pr.j]), G);
    if (s.is_zero()) continue;
    G.push_back(s.scaled(s.leading_coeff().inverse()));
    push_pairs_for(G.size() - 1);
  }

  // minimalize: drop elements whose leading monomial is divisible by another's
  std::vector<MPoly> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].leading_monomial().divides(G[i].leading_monomial())) {
        if (G[j].leading_monomial() == G[i].leading_monomial() && j > i) continue;
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // interreduce tails
  std::vector<MPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> rest;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) rest.push_back(minimal[j]);
    MPoly r = normal_form(minimal[i], rest);
    if (!r.is_zero()) reduced.push_back(r.scaled(r.leading_coeff().inverse()));
  }
  GrevlexLess lmless;
  std::sort(reduced.begin(), reduced.end(), [&lmless](const MPoly& a, const MPoly& b) {
    return lmless(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

/// The ideal is the whole ring iff the reduced basis is {1}.
inline bool is_unit_ideal(const std::vector<MPoly>& gb) {
  return gb.size() == 1 && gb[0].total_degree() == 0;
}

}  // namespace gwdeg
