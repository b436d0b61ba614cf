#include <catch2/catch_amalgamated.hpp>

#include "gwdeg/form.hpp"

#include <cmath>
#include <random>

using namespace gwdeg;

namespace {

FieldPtr Q() { return Field::rationals(); }

// --- independent oracles ----------------------------------------------------

// For 2-adic units u, w: (u,w)_2 = +1 iff u x^2 + w y^2 = z^2 has a primitive
// solution mod 8 (classical lifting criterion for odd units).
int oracle_hilbert2_units(long long u, long long w) {
  for (long long x = 0; x < 8; ++x)
    for (long long y = 0; y < 8; ++y)
      for (long long z = 0; z < 8; ++z) {
        if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
        if (((u * x * x + w * y * y - z * z) % 8 + 8) % 8 == 0) return 1;
      }
  return -1;
}

// For p-adic units u, w at an odd prime: a nontrivial zero mod p lifts by
// Hensel, so a mod-p search decides the symbol.
int oracle_hilbert_odd_units(long long u, long long w, long long p) {
  for (long long x = 0; x < p; ++x)
    for (long long y = 0; y < p; ++y)
      for (long long z = 0; z < p; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (((u * x * x + w * y * y - z * z) % p + p) % p == 0) return 1;
      }
  return -1;
}

// Global isotropy of a x^2 + b y^2 = z^2 for squarefree coprime a, b via the
// Holzer/Legendre bound: a solution exists iff one exists with
// |x| <= sqrt|b|, |y| <= sqrt|a|, |z| <= sqrt|ab|.
bool oracle_isotropic_global(long long a, long long b) {
  long long bx = static_cast<long long>(std::sqrt(std::abs(static_cast<double>(b)))) + 1;
  long long by = static_cast<long long>(std::sqrt(std::abs(static_cast<double>(a)))) + 1;
  long long bz = static_cast<long long>(std::sqrt(std::abs(static_cast<double>(a * b)))) + 1;
  for (long long x = 0; x <= bx; ++x)
    for (long long y = 0; y <= by; ++y)
      for (long long z = 0; z <= bz; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (a * x * x + b * y * y == z * z) return true;
      }
  return false;
}

BilinearForm rand_form(std::mt19937_64& rng, size_t n, long long lo = -6, long long hi = 6) {
  std::uniform_int_distribution<long long> d(lo, hi);
  Mat g(Q(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      Element e = Q()->from_int(d(rng));
      g.at(i, j) = e;
      g.at(j, i) = e;
    }
  return BilinearForm(Q(), std::move(g));
}

BilinearForm rand_nondeg_form(std::mt19937_64& rng, size_t n) {
  while (true) {
    BilinearForm f = rand_form(rng, n);
    if (is_nondegenerate(f)) return f;
  }
}

Mat rand_invertible(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<long long> d(-4, 4);
  while (true) {
    Mat p(Q(), n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) p.at(i, j) = Q()->from_int(d(rng));
    if (!p.det().is_zero()) return p;
  }
}

Rat rand_nonzero_rat(std::mt19937_64& rng, long long lo = -40, long long hi = 40) {
  std::uniform_int_distribution<long long> num(lo, hi);
  std::uniform_int_distribution<long long> den(1, 15);
  while (true) {
    Rat q(num(rng), den(rng));
    if (q != 0) return q;
  }
}

}  // namespace

TEST_CASE("diagonalize the hyperbolic plane") {
  Mat g(Q(), 2, 2);
  g.at(0, 1) = Q()->one();
  g.at(1, 0) = Q()->one();
  BilinearForm f(Q(), g);
  auto d = diagonalize(f);
  REQUIRE(d.diag.size() == 2);
  CHECK(rank(f) == 2);
  CHECK(signature(f) == 0);
  CHECK(d.diag[0].sign() * d.diag[1].sign() == -1);
  // P^T G P = D exactly
  Mat lhs = d.basis_change.transpose() * f.gram() * d.basis_change;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      CHECK(lhs.at(i, j) == (i == j ? d.diag[i] : Q()->zero()));
}

TEST_CASE("diagonalize keeps diagonal input fixed") {
  BilinearForm f = BilinearForm::diagonal(Q(), {Q()->from_int(2), Q()->from_int(-2)});
  auto d = diagonalize(f);
  CHECK(d.diag[0] == Q()->from_int(2));
  CHECK(d.diag[1] == Q()->from_int(-2));
  CHECK(d.basis_change == Mat::identity(Q(), 2));
  BilinearForm id3 = BilinearForm::diagonal(Q(), {Q()->one(), Q()->one(), Q()->one()});
  CHECK(diagonalize(id3).diag == std::vector<Element>{Q()->one(), Q()->one(), Q()->one()});
}

TEST_CASE("diagonalization of random forms, degenerate included") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    size_t n = 1 + rng() % 5;
    BilinearForm f = rand_form(rng, n);
    auto d = diagonalize(f);
    CHECK(!d.basis_change.det().is_zero());
    Mat lhs = d.basis_change.transpose() * f.gram() * d.basis_change;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        CHECK(lhs.at(i, j) == (i == j ? d.diag[i] : Q()->zero()));
    // radical is trailing
    bool seen_zero = false;
    for (const auto& e : d.diag) {
      if (e.is_zero())
        seen_zero = true;
      else
        CHECK_FALSE(seen_zero);
    }
  }
}

TEST_CASE("rank") {
  CHECK(rank(BilinearForm::diagonal(Q(), {Q()->from_int(2), Q()->from_int(-2)})) == 2);
  Mat z(Q(), 2, 2);
  CHECK(rank(BilinearForm(Q(), z)) == 0);
  Mat ones(Q(), 2, 2);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) ones.at(i, j) = Q()->one();
  CHECK(rank(BilinearForm(Q(), ones)) == 1);
}

TEST_CASE("discriminant") {
  auto f = BilinearForm::diagonal(Q(), {Q()->from_int(2), Q()->from_int(-2)});
  CHECK(discriminant(f).rep == Q()->from_int(-1));
  auto g = BilinearForm::diagonal(Q(), {Q()->from_int(12)});
  CHECK(discriminant(g).rep == Q()->from_int(3));
  auto id4 = BilinearForm::diagonal(Q(), std::vector<Element>(4, Q()->one()));
  CHECK(discriminant(id4).rep == Q()->one());
  Mat z(Q(), 2, 2);
  CHECK_THROWS_AS(discriminant(BilinearForm(Q(), z)), Error);
}

TEST_CASE("signature") {
  CHECK(signature(BilinearForm::diagonal(Q(), {Q()->from_int(2), Q()->from_int(-2)})) == 0);
  CHECK(signature(BilinearForm::diagonal(Q(), std::vector<Element>(5, Q()->one()))) == 5);
  CHECK(signature(BilinearForm::diagonal(Q(), {Q()->one(), Q()->one(), Q()->from_int(-3)})) == 1);
  auto F5 = Field::prime_field(5);
  CHECK_THROWS_AS(signature(BilinearForm::diagonal(F5, {F5->one()})), Error);
}

TEST_CASE("hilbert symbol pinned values") {
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::inf()) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::prime(2)) == -1);
  CHECK(oracle_hilbert2_units(-1, -1) == -1);
  for (long long p : {3, 5, 7}) CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::prime(p)) == 1);
  // (a, 1) = +1 everywhere
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    Rat a = rand_nonzero_rat(rng);
    for (auto v : {Place::inf(), Place::prime(2), Place::prime(3), Place::prime(5)})
      CHECK(hilbert_symbol(a, Rat(1), v) == 1);
  }
  CHECK_THROWS_AS(hilbert_symbol(Rat(0), Rat(1), Place::inf()), Error);
}

TEST_CASE("hilbert symbol against unit oracles") {
  std::mt19937_64 rng(31);
  for (long long p : {3, 5, 7, 11}) {
    for (int t = 0; t < 12; ++t) {
      long long u = 1 + static_cast<long long>(rng() % (p - 1));
      long long w = 1 + static_cast<long long>(rng() % (p - 1));
      CHECK(hilbert_symbol(Rat(u), Rat(w), Place::prime(p)) == oracle_hilbert_odd_units(u, w, p));
    }
  }
  for (long long u : {1, 3, 5, 7, -1, -3, -5, -7})
    for (long long w : {1, 3, 5, 7, -1, -3, -5, -7})
      CHECK(hilbert_symbol(Rat(u), Rat(w), Place::prime(2)) == oracle_hilbert2_units(u, w));
}

TEST_CASE("hilbert symbol against global isotropy oracle") {
  // squarefree coprime pairs; all-places-trivial iff globally isotropic
  std::vector<std::pair<long long, long long>> pairs = {
      {2, -2}, {1, 1}, {-1, -1}, {2, 3}, {-2, 3}, {5, -1}, {-5, -1}, {3, -1},
      {6, -5}, {7, 2}, {10, 3}, {-6, 5}, {15, 2}, {-10, 7}, {13, -3}, {30, -7}};
  for (auto [a, b] : pairs) {
    bool iso = oracle_isotropic_global(a, b);
    bool all_trivial = true;
    for (const auto& v : relevant_places({Rat(a), Rat(b)}))
      if (hilbert_symbol(Rat(a), Rat(b), v) == -1) all_trivial = false;
    CHECK(all_trivial == iso);
  }
}

TEST_CASE("hilbert reciprocity on random pairs") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    Rat a = rand_nonzero_rat(rng), b = rand_nonzero_rat(rng);
    int prod = 1;
    for (const auto& v : relevant_places({a, b})) prod *= hilbert_symbol(a, b, v);
    CHECK(prod == 1);
  }
}

TEST_CASE("hilbert symbol bimultiplicativity") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    Rat a1 = rand_nonzero_rat(rng), a2 = rand_nonzero_rat(rng), b = rand_nonzero_rat(rng);
    for (auto v : {Place::inf(), Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7)})
      CHECK(hilbert_symbol(a1 * a2, b, v) == hilbert_symbol(a1, b, v) * hilbert_symbol(a2, b, v));
  }
}

TEST_CASE("hasse-witt values") {
  auto id = BilinearForm::diagonal(Q(), std::vector<Element>(4, Q()->one()));
  CHECK(hasse_witt(id, Place::prime(2)) == 1);
  CHECK(hasse_witt(id, Place::inf()) == 1);
  auto mm = BilinearForm::diagonal(Q(), {Q()->from_int(-1), Q()->from_int(-1)});
  CHECK(hasse_witt(mm, Place::prime(2)) == -1);
  auto two = BilinearForm::diagonal(Q(), {Q()->from_int(2), Q()->from_int(-2)});
  for (auto v : {Place::inf(), Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7)})
    CHECK(hasse_witt(two, v) == 1);
  CHECK(hasse_table(two).empty());
  CHECK(place_table_str(hasse_table(mm)) == "{2:-1, inf:-1}");
}

TEST_CASE("invariants are congruence invariants") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    size_t n = 1 + rng() % 4;
    BilinearForm f = rand_nondeg_form(rng, n);
    Mat p = rand_invertible(rng, n);
    BilinearForm g(Q(), p.transpose() * f.gram() * p);
    CHECK(rank(f) == rank(g));
    CHECK(discriminant(f) == discriminant(g));
    CHECK(signature(f) == signature(g));
    CHECK(hasse_table(f) == hasse_table(g));
    CHECK(is_isometric(f, g));
  }
}

TEST_CASE("isometry examples") {
  auto f1 = BilinearForm::diagonal(Q(), {Q()->one(), Q()->from_int(-1)});
  auto f2 = BilinearForm::diagonal(Q(), {Q()->from_int(2), Q()->from_int(-2)});
  CHECK(is_isometric(f1, f2));
  auto g1 = BilinearForm::diagonal(Q(), {Q()->one(), Q()->one()});
  CHECK_FALSE(is_isometric(g1, f1));
  auto F5 = Field::prime_field(5);
  auto h1 = BilinearForm::diagonal(F5, {F5->one(), F5->one()});
  auto h2 = BilinearForm::diagonal(F5, {F5->from_int(2), F5->from_int(2)});
  CHECK(is_isometric(h1, h2));  // disc 1 and 4, both squares mod 5
  auto h3 = BilinearForm::diagonal(F5, {F5->one(), F5->from_int(2)});
  CHECK_FALSE(is_isometric(h1, h3));
}

TEST_CASE("isometry is an equivalence relation on random forms") {
  std::mt19937_64 rng(149);
  std::vector<BilinearForm> pool;
  for (int t = 0; t < 8; ++t) pool.push_back(rand_nondeg_form(rng, 2));
  for (const auto& f : pool) CHECK(is_isometric(f, f));
  for (const auto& f : pool)
    for (const auto& g : pool) CHECK(is_isometric(f, g) == is_isometric(g, f));
  for (const auto& f : pool)
    for (const auto& g : pool)
      for (const auto& k : pool)
        if (is_isometric(f, g) && is_isometric(g, k)) CHECK(is_isometric(f, k));
}

TEST_CASE("witt cancellation over Q") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 25; ++t) {
    BilinearForm f = rand_nondeg_form(rng, 1 + rng() % 3);
    BilinearForm g = rand_nondeg_form(rng, f.dim());
    Element a = Q()->from_int(static_cast<long long>(rng() % 9) - 4);
    if (a.is_zero()) a = Q()->one();
    auto fa = direct_sum(f, BilinearForm::diagonal(Q(), {a}));
    auto ga = direct_sum(g, BilinearForm::diagonal(Q(), {a}));
    if (is_isometric(fa, ga)) CHECK(is_isometric(f, g));
    if (is_isometric(f, g)) CHECK(is_isometric(fa, ga));
  }
}

TEST_CASE("direct sum and tensor product") {
  auto a = BilinearForm::diagonal(Q(), {Q()->from_int(3)});
  auto b = BilinearForm::diagonal(Q(), {Q()->from_int(5)});
  auto s = direct_sum(a, b);
  CHECK(s.dim() == 2);
  CHECK(s.gram().at(0, 0) == Q()->from_int(3));
  CHECK(s.gram().at(1, 1) == Q()->from_int(5));
  auto t = tensor_product(a, b);
  CHECK(t.dim() == 1);
  CHECK(t.gram().at(0, 0) == Q()->from_int(15));
  // f + 0-dim = f
  Mat empty(Q(), 0, 0);
  auto e = BilinearForm(Q(), empty);
  CHECK(direct_sum(a, e).dim() == 1);
  auto F5 = Field::prime_field(5);
  CHECK_THROWS_AS(direct_sum(a, BilinearForm::diagonal(F5, {F5->one()})), Error);
}
