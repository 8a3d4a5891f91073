#include "residua/fpt.hpp"

#include <algorithm>

namespace residua {

namespace {

long long norm_coeff(long long v, long long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

void trim(std::vector<long long>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

long long inv_mod_p(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = norm_coeff(a, p);
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) fail(ErrKind::BadArgument, "inv_mod_p: not invertible");
  return norm_coeff(t, p);
}

void check_same_p(const FpPoly& a, const FpPoly& b) {
  if (a.p != b.p) fail(ErrKind::BadArgument, "FpPoly: characteristic mismatch");
}

}  // namespace

FpPoly::FpPoly(long long p_, std::vector<long long> coeffs) : p(p_), c(std::move(coeffs)) {
  for (auto& v : c) v = norm_coeff(v, p);
  trim(c);
}

FpPoly FpPoly::constant(long long p, long long value) { return FpPoly(p, {value}); }

FpPoly FpPoly::t(long long p) { return FpPoly(p, {0, 1}); }

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  check_same_p(a, b);
  std::vector<long long> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    long long v = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
    c[i] = norm_coeff(v, a.p);
  }
  return FpPoly(a.p, std::move(c));
}

FpPoly fp_neg(const FpPoly& a) {
  std::vector<long long> c(a.c);
  for (auto& v : c) v = norm_coeff(-v, a.p);
  return FpPoly(a.p, std::move(c));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) { return fp_add(a, fp_neg(b)); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  check_same_p(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p, {});
  std::vector<long long> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = norm_coeff(c[i + j] + a.c[i] * b.c[j], a.p);
  return FpPoly(a.p, std::move(c));
}

FpPoly fp_scale(const FpPoly& a, long long k) {
  std::vector<long long> c(a.c);
  for (auto& v : c) v = norm_coeff(v * k, a.p);
  return FpPoly(a.p, std::move(c));
}

void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
  check_same_p(a, b);
  if (b.is_zero()) fail(ErrKind::BadArgument, "fp_divmod: division by zero");
  std::vector<long long> rem(a.c), quo;
  int db = b.deg();
  long long linv = inv_mod_p(b.lead(), a.p);
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr >= db) quo.assign(dr - db + 1, 0);
  while (dr >= db) {
    long long f = norm_coeff(rem[dr] * linv, a.p);
    quo[dr - db] = f;
    for (int i = 0; i <= db; ++i)
      rem[dr - db + i] = norm_coeff(rem[dr - db + i] - f * b.c[i], a.p);
    while (dr >= 0 && rem[dr] == 0) --dr;
  }
  rem.resize(dr + 1);
  q = FpPoly(a.p, std::move(quo));
  r = FpPoly(a.p, std::move(rem));
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  fp_divmod(a, b, q, r);
  return r;
}

FpPoly fp_make_monic(const FpPoly& a) {
  if (a.is_zero() || a.monic()) return a;
  return fp_scale(a, inv_mod_p(a.lead(), a.p));
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_mod(a, b);
    a = b;
    b = r;
  }
  return fp_make_monic(a);
}

void fp_xgcd(const FpPoly& a, const FpPoly& b, FpPoly& g, FpPoly& u, FpPoly& v) {
  FpPoly r0 = a, r1 = b;
  FpPoly u0 = FpPoly::constant(a.p, 1), u1 = FpPoly::constant(a.p, 0);
  FpPoly v0 = FpPoly::constant(a.p, 0), v1 = FpPoly::constant(a.p, 1);
  while (!r1.is_zero()) {
    FpPoly q, r;
    fp_divmod(r0, r1, q, r);
    r0 = r1; r1 = r;
    FpPoly u2 = fp_sub(u0, fp_mul(q, u1));
    u0 = u1; u1 = u2;
    FpPoly v2 = fp_sub(v0, fp_mul(q, v1));
    v0 = v1; v1 = v2;
  }
  if (!r0.is_zero() && !r0.monic()) {
    long long f = inv_mod_p(r0.lead(), a.p);
    r0 = fp_scale(r0, f);
    u0 = fp_scale(u0, f);
    v0 = fp_scale(v0, f);
  }
  g = r0; u = u0; v = v0;
}

FpPoly fp_pow_mod(FpPoly base, long long e, const FpPoly& mod) {
  FpPoly acc = FpPoly::constant(base.p, 1);
  base = fp_mod(base, mod);
  while (e > 0) {
    if (e & 1) acc = fp_mod(fp_mul(acc, base), mod);
    base = fp_mod(fp_mul(base, base), mod);
    e >>= 1;
  }
  return acc;
}

namespace {

// Enumerate monic polynomials of exact degree d.
void monics_of_degree(long long p, int d, std::vector<FpPoly>& out) {
  std::vector<long long> c(d + 1, 0);
  c[d] = 1;
  for (;;) {
    out.emplace_back(p, c);
    int i = 0;
    while (i < d && ++c[i] == p) c[i++] = 0;
    if (i == d) break;
  }
}

}  // namespace

bool fp_irreducible(const FpPoly& a) {
  int d = a.deg();
  if (d <= 0) return false;
  if (d == 1) return true;
  std::vector<FpPoly> cands;
  for (int k = 1; 2 * k <= d; ++k) monics_of_degree(a.p, k, cands);
  for (const auto& q : cands)
    if (fp_mod(a, q).is_zero()) return false;
  return true;
}

std::vector<std::pair<FpPoly, long long>> fp_factor(FpPoly a) {
  if (a.is_zero()) fail(ErrKind::BadArgument, "fp_factor: zero argument");
  if (a.deg() > 6)
    fail(ErrKind::FactorBound, "fp_factor: degree > 6 not supported");
  a = fp_make_monic(a);
  std::vector<std::pair<FpPoly, long long>> out;
  for (int d = 1; d <= a.deg(); ++d) {
    std::vector<FpPoly> cands;
    monics_of_degree(a.p, d, cands);
    for (const auto& q : cands) {
      if (a.deg() < d) break;
      long long e = 0;
      for (;;) {
        FpPoly quo, rem;
        fp_divmod(a, q, quo, rem);
        if (!rem.is_zero()) break;
        a = quo;
        ++e;
      }
      if (e) out.emplace_back(q, e);
    }
  }
  return out;
}

long long fp_eval(const FpPoly& a, long long x) {
  long long acc = 0;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
    acc = norm_coeff(acc * x + *it, a.p);
  return acc;
}

std::string fp_poly_str(const FpPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.deg(); i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(a.c[i]);
    } else {
      if (a.c[i] != 1) out += std::to_string(a.c[i]) + "*";
      out += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

FpPoly fp_poly_parse(long long p, const std::string& src) {
  // terms separated by '+' / '-'; each term [coef][*][t[^k]]
  std::vector<long long> coeffs;
  size_t i = 0;
  auto skip_ws = [&] { while (i < src.size() && src[i] == ' ') ++i; };
  long long sign = 1;
  skip_ws();
  while (i < src.size()) {
    skip_ws();
    if (src[i] == '+') { sign = 1; ++i; skip_ws(); }
    else if (src[i] == '-') { sign = -1; ++i; skip_ws(); }
    long long coef = 1;
    bool saw_digit = false;
    if (i < src.size() && isdigit(static_cast<unsigned char>(src[i]))) {
      coef = 0;
      while (i < src.size() && isdigit(static_cast<unsigned char>(src[i])))
        coef = coef * 10 + (src[i++] - '0');
      saw_digit = true;
    }
    skip_ws();
    if (i < src.size() && src[i] == '*') { ++i; skip_ws(); }
    long long expo = 0;
    if (i < src.size() && src[i] == 't') {
      ++i;
      expo = 1;
      if (i < src.size() && src[i] == '^') {
        ++i;
        expo = 0;
        while (i < src.size() && isdigit(static_cast<unsigned char>(src[i])))
          expo = expo * 10 + (src[i++] - '0');
      }
    } else if (!saw_digit) {
      fail(ErrKind::Parse, "fp_poly_parse: bad term in '" + src + "'");
    }
    if (static_cast<size_t>(expo) >= coeffs.size()) coeffs.resize(expo + 1, 0);
    coeffs[expo] += sign * coef;
    sign = 1;
    skip_ws();
  }
  return FpPoly(p, std::move(coeffs));
}

FpRat::FpRat(FpPoly n, FpPoly d) {
  check_same_p(n, d);
  if (d.is_zero()) fail(ErrKind::BadArgument, "FpRat: zero denominator");
  FpPoly g = fp_gcd(n, d);
  if (!g.is_zero() && !g.is_one()) {
    FpPoly q, r;
    fp_divmod(n, g, q, r);
    n = q;
    fp_divmod(d, g, q, r);
    d = q;
  }
  long long f = inv_mod_p(d.lead(), d.p);
  num = fp_scale(n, f);
  den = fp_scale(d, f);
}

FpRat fq_add(const FpRat& a, const FpRat& b) {
  return FpRat(fp_add(fp_mul(a.num, b.den), fp_mul(b.num, a.den)),
               fp_mul(a.den, b.den));
}

FpRat fq_sub(const FpRat& a, const FpRat& b) { return fq_add(a, fq_neg(b)); }

FpRat fq_neg(const FpRat& a) {
  FpRat r = a;
  r.num = fp_neg(r.num);
  return r;
}

FpRat fq_mul(const FpRat& a, const FpRat& b) {
  return FpRat(fp_mul(a.num, b.num), fp_mul(a.den, b.den));
}

FpRat fq_inv(const FpRat& a) {
  if (a.is_zero()) fail(ErrKind::BadArgument, "fq_inv: zero");
  return FpRat(a.den, a.num);
}

long long vq_poly(FpPoly n, const FpPoly& q) {
  if (n.is_zero()) fail(ErrKind::BadArgument, "vq_poly: zero argument");
  long long v = 0;
  for (;;) {
    FpPoly quo, rem;
    fp_divmod(n, q, quo, rem);
    if (!rem.is_zero()) break;
    n = quo;
    ++v;
  }
  return v;
}

long long vq_rat(const FpRat& x, const FpPoly& q) {
  if (x.is_zero()) fail(ErrKind::BadArgument, "vq_rat: zero argument");
  return vq_poly(x.num, q) - vq_poly(x.den, q);
}

std::string fq_str(const FpRat& x) {
  auto terms = [](const FpPoly& a) {
    int n = 0;
    for (auto v : a.c) n += (v != 0);
    return n;
  };
  if (x.den.is_one()) return fp_poly_str(x.num);
  std::string n = fp_poly_str(x.num);
  std::string d = fp_poly_str(x.den);
  if (terms(x.num) > 1) n = "(" + n + ")";
  if (terms(x.den) > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace residua
