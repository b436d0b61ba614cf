// Arbitrary-precision integer/rational helpers on top of Boost.Multiprecision:
// p-adic valuations, primality, factoring (trial division + Pollard rho),
// squarefree parts, Legendre symbols. These feed square-class canonicalization
// and the Hilbert symbol machinery.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gwdeg/errors.hpp"

namespace gwdeg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int int_sign(const Int& a) { return a.sign(); }
inline int rat_sign(const Rat& q) { return rat_num(q).sign(); }

/// v_p(a) for a nonzero integer.
inline long val_p(Int a, const Int& p) {
  if (a == 0) fail(Errc::zero_input, "valuation of zero");
  long v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

/// v_p(q) for a nonzero rational.
inline long val_p(const Rat& q, const Int& p) {
  if (q == 0) fail(Errc::zero_input, "valuation of zero");
  long v = 0;
  Int n = rat_num(q), d = rat_den(q);
  while (n % p == 0) { n /= p; ++v; }
  while (d % p == 0) { d /= p; --v; }
  return v;
}

inline Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int mod_inverse(const Int& a, const Int& m) {
  // extended Euclid
  Int r0 = mod_pos(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) fail(Errc::division_by_zero, "element not invertible mod m");
  return mod_pos(s0, m);
}

/// Residue of a rational with v_p(q) = 0, as an element of Z/m for m a power of p.
inline Int rat_mod(const Rat& q, const Int& m) {
  Int n = mod_pos(rat_num(q), m);
  Int d = mod_pos(rat_den(q), m);
  return mod_pos(n * mod_inverse(d, m), m);
}

inline bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned long r = 0;
  while (d % 2 == 0) { d /= 2; ++r; }
  // Deterministic Miller-Rabin base set; sufficient far beyond the sizes we meet.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = boost::multiprecision::powm(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long i = 0; i + 1 < r; ++i) {
      x = x * x % n;
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

namespace detail {

inline Int pollard_rho(const Int& n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  while (true) {
    Int x = Int(rng()) % n, c = Int(rng()) % n + 1;
    Int y = x, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = boost::multiprecision::gcd(x >= y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(Int n, std::map<Int, long>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

}  // namespace detail

/// Prime factorization of |n|, n != 0. The sign is the caller's business.
inline std::map<Int, long> factorize(Int n) {
  if (n == 0) fail(Errc::zero_input, "factorize(0)");
  if (n < 0) n = -n;
  std::map<Int, long> out;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    while (n % p == 0) { n /= p; ++out[Int(p)]; }
  }
  for (Int p = 53; p * p <= n && p < 10000; p += 2) {
    while (n % p == 0) { n /= p; ++out[p]; }
  }
  if (n > 1) {
    std::mt19937_64 rng(0x5eedf00du);  // fixed seed: deterministic output
    detail::factor_into(n, out, rng);
  }
  return out;
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

/// Signed squarefree part: the unique squarefree d with n = d * (square).
inline Int squarefree_part(const Int& n) {
  if (n == 0) fail(Errc::zero_input, "squarefree_part(0)");
  Int d = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2 != 0) d *= p;
  }
  return d;
}

/// Legendre symbol (a|p) for odd prime p: +1, -1, or 0.
inline int legendre(const Int& a, const Int& p) {
  Int r = boost::multiprecision::powm(mod_pos(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

/// Legendre symbol of a rational p-adic unit.
inline int legendre(const Rat& a, const Int& p) { return legendre(rat_mod(a, p), p); }

inline std::string int_str(const Int& n) { return n.str(); }

inline std::string rat_str(const Rat& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

}  // namespace gwdeg
