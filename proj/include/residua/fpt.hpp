#pragma once

#include <string>
#include <vector>

#include "residua/errors.hpp"

namespace residua {

// Dense polynomial over F_p, coefficients in [0, p). The zero polynomial has
// an empty coefficient vector and degree -1.
struct FpPoly {
  long long p = 2;
  std::vector<long long> c;  // c[i] = coefficient of t^i, c.back() != 0

  FpPoly() = default;
  FpPoly(long long p_, std::vector<long long> coeffs);
  static FpPoly constant(long long p, long long value);
  static FpPoly t(long long p);  // the monomial t

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  long long lead() const { return c.back(); }
  bool monic() const { return !c.empty() && c.back() == 1; }

  bool operator==(const FpPoly&) const = default;
};

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_neg(const FpPoly& a);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, long long k);
// Euclidean division: a = q*b + r with deg r < deg b.
void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic gcd
// g = gcd(a, b) monic, with u*a + v*b = g.
void fp_xgcd(const FpPoly& a, const FpPoly& b, FpPoly& g, FpPoly& u, FpPoly& v);
FpPoly fp_make_monic(const FpPoly& a);
FpPoly fp_pow_mod(FpPoly base, long long e, const FpPoly& mod);

bool fp_irreducible(const FpPoly& a);
// Trial-division factorization into monic irreducibles; supported for
// deg <= 6, rejects larger inputs.
std::vector<std::pair<FpPoly, long long>> fp_factor(FpPoly a);

long long fp_eval(const FpPoly& a, long long x);
std::string fp_poly_str(const FpPoly& a);
FpPoly fp_poly_parse(long long p, const std::string& src);

// Rational function over F_p in lowest terms with monic denominator.
struct FpRat {
  FpPoly num;
  FpPoly den;  // monic, gcd(num, den) = 1

  FpRat() = default;
  FpRat(FpPoly n, FpPoly d);
  static FpRat of(const FpPoly& n) { return FpRat(n, FpPoly::constant(n.p, 1)); }

  long long p() const { return num.p; }
  bool is_zero() const { return num.is_zero(); }
  bool operator==(const FpRat&) const = default;
};

FpRat fq_add(const FpRat& a, const FpRat& b);
FpRat fq_sub(const FpRat& a, const FpRat& b);
FpRat fq_neg(const FpRat& a);
FpRat fq_mul(const FpRat& a, const FpRat& b);
FpRat fq_inv(const FpRat& a);
long long vq_poly(FpPoly n, const FpPoly& q);           // multiplicity, n != 0
long long vq_rat(const FpRat& x, const FpPoly& q);      // x != 0
std::string fq_str(const FpRat& x);

}  // namespace residua
