#include "residua/numeric.hpp"

namespace residua {

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int rat_floor(const Rat& x) { return floor_div(rat_num(x), rat_den(x)); }

Rat rat_frac(const Rat& x) { return x - Rat(rat_floor(x)); }

long long vp_int(Int n, const Int& p) {
  if (n == 0) fail(ErrKind::BadArgument, "vp_int: zero argument");
  long long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

long long vp_rat(const Rat& x, const Int& p) {
  if (x == 0) fail(ErrKind::BadArgument, "vp_rat: zero argument");
  return vp_int(rat_num(x), p) - vp_int(rat_den(x), p);
}

std::map<long long, long long> factor_int(Int n, long long bound) {
  std::map<long long, long long> out;
  if (n < 0) n = -n;
  if (n == 0) fail(ErrKind::BadArgument, "factor_int: zero argument");
  for (long long p = 2; p <= bound && Int(static_cast<long>(p)) * static_cast<long>(p) <= n; p = (p == 2 ? 3 : p + 2)) {
    long long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
      ++e;
    }
    if (e) out[p] = e;
  }
  if (n > 1) {
    if (n > Int(static_cast<long>(bound)) * static_cast<long>(bound))
      fail(ErrKind::FactorBound,
           "factor_int: cofactor " + n.get_str() + " exceeds trial-division bound");
    if (!n.fits_slong_p())
      fail(ErrKind::FactorBound, "factor_int: cofactor does not fit");
    out[n.get_si()] += 1;
  }
  return out;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (m == 1) return 0;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    fail(ErrKind::BadArgument, "mod_inverse: not invertible");
  return r;
}

Rat rat_mod_inverse(const Rat& u, const Int& m) {
  if (m == 1) return Rat(0);
  Int n = rat_num(u) % m;
  if (n < 0) n += m;
  Int inv = mod_inverse(n, m) * rat_den(u) % m;
  return Rat(inv);
}

Rat rat_mod(const Rat& x, const Int& m) {
  if (m == 1) return Rat(0);
  Int n = rat_num(x) % m;
  if (n < 0) n += m;
  Int r = n * mod_inverse(rat_den(x) % m, m) % m;
  return Rat(r);
}

std::string rat_str(const Rat& x) { return x.get_str(); }

}  // namespace residua
