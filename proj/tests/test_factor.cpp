#include <catch2/catch_amalgamated.hpp>

#include "gwdeg/factor.hpp"

#include <random>

using namespace gwdeg;

namespace {

FieldPtr Q() { return Field::rationals(); }

UPoly qpoly(std::vector<long long> coeffs) {
  std::vector<Element> cs;
  for (long long c : coeffs) cs.push_back(Q()->from_int(c));
  return UPoly(Q(), std::move(cs));
}

UPoly ppoly(const FieldPtr& k, std::vector<long long> coeffs) {
  std::vector<Element> cs;
  for (long long c : coeffs) cs.push_back(k->from_int(c));
  return UPoly(k, std::move(cs));
}

UPoly product_of(const std::vector<PolyFactor>& fs, const FieldPtr& k) {
  UPoly acc = UPoly::constant(k->one());
  for (const auto& [g, m] : fs)
    for (int i = 0; i < m; ++i) acc = acc * g;
  return acc;
}

}  // namespace

TEST_CASE("factor over F_p: linear splits") {
  auto F5 = Field::prime_field(5);
  // x^5 - x = x(x-1)(x-2)(x-3)(x-4) mod 5
  UPoly f = ppoly(F5, {0, -1, 0, 0, 0, 1});
  auto fs = factor_mod_p(f);
  REQUIRE(fs.size() == 5);
  for (const auto& [g, m] : fs) {
    CHECK(g.deg() == 1);
    CHECK(m == 1);
  }
  CHECK(product_of(fs, F5) == f.monic());
}

TEST_CASE("factor over F_p: irreducible quadratic") {
  auto F3 = Field::prime_field(3);
  UPoly f = ppoly(F3, {1, 0, 1});  // x^2 + 1 mod 3
  auto fs = factor_mod_p(f);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].first.deg() == 2);
  CHECK(fs[0].second == 1);
}

TEST_CASE("factor over F_p: p-th power collapse") {
  auto F5 = Field::prime_field(5);
  // (x+1)^5 = x^5 + 1 mod 5
  UPoly f = ppoly(F5, {1, 0, 0, 0, 0, 1});
  auto fs = factor_mod_p(f);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].first == ppoly(F5, {1, 1}));
  CHECK(fs[0].second == 5);
}

TEST_CASE("factor over F_p: mixed degrees and multiplicities") {
  auto F7 = Field::prime_field(7);
  UPoly f = ppoly(F7, {3, 1}) * ppoly(F7, {3, 1}) * ppoly(F7, {1, 0, 1});  // (x+3)^2 (x^2+1), x^2+1 irred mod 7
  auto fs = factor_mod_p(f);
  REQUIRE(fs.size() == 2);
  CHECK(product_of(fs, F7) == f.monic());
  for (const auto& [g, m] : fs) {
    if (g.deg() == 1) CHECK(m == 2);
    if (g.deg() == 2) CHECK(m == 1);
  }
}

TEST_CASE("factor over Q: difference of squares") {
  auto fs = factor_rational(qpoly({-1, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == qpoly({-1, 1}));
  CHECK(fs[1].first == qpoly({1, 1}));
}

TEST_CASE("factor over Q: z^8 - 1") {
  auto fs = factor_rational(qpoly({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
  REQUIRE(fs.size() == 4);
  // (z-1)(z+1)(z^2+1)(z^4+1)
  CHECK(fs[0].first == qpoly({-1, 1}));
  CHECK(fs[1].first == qpoly({1, 1}));
  CHECK(fs[2].first == qpoly({1, 0, 1}));
  CHECK(fs[3].first == qpoly({1, 0, 0, 0, 1}));
}

TEST_CASE("factor over Q: z^6 - 1 has two cyclotomic quadratics") {
  auto fs = factor_rational(qpoly({-1, 0, 0, 0, 0, 0, 1}));
  REQUIRE(fs.size() == 4);
  CHECK(fs[2].first == qpoly({1, -1, 1}));
  CHECK(fs[3].first == qpoly({1, 1, 1}));
}

TEST_CASE("factor over Q: x^4 + 1 stays irreducible") {
  // reducible mod every prime, so this exercises subset recombination
  auto fs = factor_rational(qpoly({1, 0, 0, 0, 1}));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].first == qpoly({1, 0, 0, 0, 1}));
  CHECK(fs[0].second == 1);
}

TEST_CASE("factor over Q: multiplicities via yun") {
  UPoly f = qpoly({-2, 0, 1}) * qpoly({-2, 0, 1}) * qpoly({-3, 1});  // (x^2-2)^2 (x-3)
  auto fs = factor_rational(f);
  REQUIRE(fs.size() == 2);
  for (const auto& [g, m] : fs) {
    if (g.deg() == 1) { CHECK(m == 1); CHECK(g == qpoly({-3, 1})); }
    if (g.deg() == 2) { CHECK(m == 2); CHECK(g == qpoly({-2, 0, 1})); }
  }
}

TEST_CASE("factor over Q: non-monic rational coefficients") {
  // 2x^3 - 3x^2 + 4x - 6 = (2x - 3)(x^2 + 2)
  auto fs = factor_rational(qpoly({-6, 4, -3, 2}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first.deg() == 1);
  CHECK(fs[0].first.coeff(0) == Q()->from_rat(Rat(-3, 2)));
  CHECK(fs[1].first == qpoly({2, 0, 1}));
}

TEST_CASE("factor over Q: random products reassemble") {
  std::mt19937_64 rng(79);
  std::vector<UPoly> pool = {
      qpoly({-1, 1}), qpoly({1, 1}), qpoly({-2, 1}), qpoly({3, 1}),
      qpoly({1, 1, 1}), qpoly({1, 0, 1}), qpoly({-2, 0, 1}), qpoly({1, -1, 1}),
      qpoly({2, 0, 0, 1}),  // x^3 + 2 irreducible
  };
  for (int t = 0; t < 12; ++t) {
    UPoly f = UPoly::constant(Q()->one());
    int parts = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) f = f * pool[rng() % pool.size()];
    auto fs = factor_rational(f);
    CHECK(product_of(fs, Q()) == f.monic());
    for (const auto& [g, m] : fs) CHECK(g.is_monic());
  }
}

TEST_CASE("factor over Q: fuzz against the product invariant") {
  std::mt19937_64 rng(151);
  std::uniform_int_distribution<long long> c(-9, 9);
  for (int t = 0; t < 15; ++t) {
    int deg = 2 + static_cast<int>(rng() % 9);
    std::vector<long long> cs(static_cast<size_t>(deg + 1));
    for (auto& x : cs) x = c(rng);
    if (cs.back() == 0) cs.back() = 1;
    UPoly f = qpoly(cs);
    auto fs = factor_rational(f);
    CHECK(product_of(fs, Q()) == f.monic());
    for (const auto& [g, m] : fs) {
      CHECK(g.is_monic());
      CHECK(g.deg() >= 1);
      CHECK(m >= 1);
      if (g.deg() >= 2) CHECK(field_roots(g).empty());
    }
  }
}

TEST_CASE("factor over F_p: fuzz against the product invariant") {
  std::mt19937_64 rng(157);
  for (long long p : {3LL, 7LL, 13LL}) {
    auto Fp = Field::prime_field(p);
    for (int t = 0; t < 10; ++t) {
      int deg = 2 + static_cast<int>(rng() % 8);
      std::vector<long long> cs(static_cast<size_t>(deg + 1));
      for (auto& x : cs) x = static_cast<long long>(rng() % static_cast<unsigned long long>(p));
      if (cs.back() % p == 0) cs.back() = 1;
      UPoly f = ppoly(Fp, cs);
      auto fs = factor_mod_p(f);
      CHECK(product_of(fs, Fp) == f.monic());
      for (const auto& [g, m] : fs) {
        CHECK(g.is_monic());
        CHECK(g.deg() >= 1);
        if (g.deg() >= 2) CHECK(field_roots(g).empty());
      }
    }
  }
}

TEST_CASE("field_roots") {
  // (x - 1/2)(x + 3)^2, scaled by 2
  UPoly f = qpoly({-1, 2}) * qpoly({3, 1}) * qpoly({3, 1});
  auto roots = field_roots(f);
  REQUIRE(roots.size() == 2);
  bool seen_half = false, seen_m3 = false;
  for (const auto& [r, m] : roots) {
    if (r == Q()->from_rat(Rat(1, 2))) { seen_half = true; CHECK(m == 1); }
    if (r == Q()->from_int(-3)) { seen_m3 = true; CHECK(m == 2); }
  }
  CHECK(seen_half);
  CHECK(seen_m3);
  // no rational roots of x^2 + 1
  CHECK(field_roots(qpoly({1, 0, 1})).empty());
  // x^2 + 1 = (x-2)(x-3) over F_5 since -1 = 4 is a square there
  auto F5 = Field::prime_field(5);
  auto r5 = field_roots(ppoly(F5, {1, 0, 1}));
  REQUIRE(r5.size() == 2);
  // ... and stays irreducible over F_7
  auto F7 = Field::prime_field(7);
  CHECK(field_roots(ppoly(F7, {1, 0, 1})).empty());
}
