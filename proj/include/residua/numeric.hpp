#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include "residua/errors.hpp"

namespace residua {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat make_rat(long long num, long long den) {
  return make_rat(to_int(num), to_int(den));
}

inline Int rat_num(const Rat& x) { return Int(x.get_num()); }
inline Int rat_den(const Rat& x) { return Int(x.get_den()); }

// Floor division / floor of a rational.
Int floor_div(const Int& a, const Int& b);
Int rat_floor(const Rat& x);
// x - floor(x), in [0, 1).
Rat rat_frac(const Rat& x);

// p-adic valuation. vp_int requires n != 0.
long long vp_int(Int n, const Int& p);
long long vp_rat(const Rat& x, const Int& p);

// Trial-division factorization of |n| (n != 0). Throws ErrKind::FactorBound
// if a cofactor > bound^2 survives division by all primes <= bound.
std::map<long long, long long> factor_int(Int n, long long bound);

// Inverse of a mod m, m >= 1, gcd(a, m) = 1.
Int mod_inverse(const Int& a, const Int& m);

// u^{-1} mod m for rational u whose numerator and denominator are units mod m.
Rat rat_mod_inverse(const Rat& u, const Int& m);

// Representative of x mod m*Z in [0, m), m >= 1; x's denominator must be a
// unit mod m.
Rat rat_mod(const Rat& x, const Int& m);

std::string rat_str(const Rat& x);

// Deterministic splitmix64-based RNG; streams derived from (seed, index)
// are independent of evaluation order.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n)
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
  // Uniform in [lo, hi] inclusive
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (next() & 1) != 0; }
  static Rng stream(uint64_t seed, uint64_t index) {
    Rng r(seed * 0x2545f4914f6cdd1dull + index + 1);
    r.next();
    return r;
  }
};

}  // namespace residua
