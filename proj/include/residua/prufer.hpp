#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "residua/fpt.hpp"
#include "residua/lmonoid.hpp"

namespace residua {

// Concrete Prufer extension A <= B with computable factorization.
//   ZinQ      Z in Q                      Lambda = Q_{>0} (prime-indexed)
//   ZlocS     Z_S in Q, S finite primes   Lambda = Z^S
//   FpTlocS   F_p[t]_S in F_p(t)          Lambda = Z^S, S monic irreducibles
//   Product   finite product              Lambda = direct product
struct ExtDesc {
  enum class Kind { ZinQ, ZlocS, FpTlocS, Product };

  Kind kind = Kind::ZinQ;
  std::vector<long long> s_primes;  // ZlocS
  long long p = 0;                  // FpTlocS characteristic
  std::vector<FpPoly> s_polys;      // FpTlocS, monic irreducible
  std::vector<ExtDesc> parts;       // Product
  long long factor_bound = 1000000; // ZinQ trial-division bound

  bool operator==(const ExtDesc&) const = default;

  static ExtDesc zinq(long long bound = 1000000);
  static ExtDesc zloc(std::vector<long long> primes);
  static ExtDesc fptloc(long long p, std::vector<FpPoly> polys);
  static ExtDesc product(std::vector<ExtDesc> parts);

  std::string str() const;
};

LGroupDesc lambda_group(const ExtDesc& ext);

// Exact element of B: a rational, a rational function, or a tuple.
struct FieldElem {
  std::variant<Rat, FpRat, std::vector<FieldElem>> v;

  FieldElem() : v(Rat(0)) {}
  explicit FieldElem(Rat r) : v(std::move(r)) {}
  explicit FieldElem(FpRat r) : v(std::move(r)) {}
  explicit FieldElem(std::vector<FieldElem> t) : v(std::move(t)) {}

  const Rat& rat() const { return std::get<Rat>(v); }
  const FpRat& fq() const { return std::get<FpRat>(v); }
  const std::vector<FieldElem>& tuple() const {
    return std::get<std::vector<FieldElem>>(v);
  }
  bool operator==(const FieldElem&) const = default;
};

FieldElem fe_zero(const ExtDesc& ext);
FieldElem fe_one(const ExtDesc& ext);
FieldElem fe_of_int(const ExtDesc& ext, long long n);
bool fe_is_zero(const FieldElem& x);
FieldElem fe_add(const ExtDesc& ext, const FieldElem& a, const FieldElem& b);
FieldElem fe_sub(const ExtDesc& ext, const FieldElem& a, const FieldElem& b);
FieldElem fe_neg(const ExtDesc& ext, const FieldElem& a);
FieldElem fe_mul(const ExtDesc& ext, const FieldElem& a, const FieldElem& b);
FieldElem fe_inv(const ExtDesc& ext, const FieldElem& a);  // a componentwise nonzero
std::string fe_str(const FieldElem& x);
// Validates shape against the extension (tuple arity, characteristic).
void fe_check(const ExtDesc& ext, const FieldElem& x);

// The Prufer-Manis l-valuation w(x) = ideal A*x as an element of the
// l-monoid extension; w(1) = eps, w(0) = omega.
LMonElem pm_valuation(const ExtDesc& ext, const FieldElem& x);

// Finitely generated A-submodule of B given by generators.
struct ModuleGens {
  ExtDesc ext;
  std::vector<FieldElem> gens;
};

// Fractional ideal of a nonzero f.g. module: exponentwise min of the
// generators' valuations. nullopt encodes the zero module. A module with a
// zero component but not identically zero is not invertible and is rejected.
std::optional<LElem> module_reduce(const ModuleGens& m);
// Meet of pm_valuation over generators; total (value in the l-monoid).
LMonElem what_hat(const ModuleGens& m);

// P2 witness: y in A with x*y in A and x*(1 - x*y) in A.
FieldElem p2_witness(const ExtDesc& ext, const FieldElem& x);

struct ManisReport {
  std::set<Idx> covered;       // basis coordinates hit by some w(x)_- factor
  bool basis_finite = false;
  bool full = false;           // covered == whole basis (finite case)
};
ManisReport is_manis_report(const ExtDesc& ext, const std::vector<FieldElem>& sample);

// --- exact residue plumbing used by the residue model ---

// Positive generator of the fractional ideal alpha as an element of B.
FieldElem ideal_generator(const ExtDesc& ext, const LElem& alpha);
// Canonical representative of x mod alpha*A in the standard window.
FieldElem canon_rep(const ExtDesc& ext, const FieldElem& x, const LElem& alpha);
// x == y mod alpha*A
bool eq_mod(const ExtDesc& ext, const FieldElem& x, const FieldElem& y,
            const LElem& alpha);
// t = u^{-1} mod ideal alpha (alpha >= eps); u a unit at supp(alpha).
FieldElem mod_inverse_ideal(const ExtDesc& ext, const FieldElem& u,
                            const LElem& alpha);
// Chinese remainder: z = x mod alpha, z = y mod beta, modulus alpha v beta.
// nullopt when x != y mod (alpha /\ beta).
std::optional<std::pair<FieldElem, LElem>> crt_pair(const ExtDesc& ext,
                                                    const FieldElem& x,
                                                    const LElem& alpha,
                                                    const FieldElem& y,
                                                    const LElem& beta);

}  // namespace residua
