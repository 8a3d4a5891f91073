#include "residua/prufer.hpp"

#include <algorithm>

namespace residua {

ExtDesc ExtDesc::zinq(long long bound) {
  ExtDesc e;
  e.kind = Kind::ZinQ;
  e.factor_bound = bound;
  return e;
}

ExtDesc ExtDesc::zloc(std::vector<long long> primes) {
  ExtDesc e;
  e.kind = Kind::ZlocS;
  std::sort(primes.begin(), primes.end());
  e.s_primes = std::move(primes);
  return e;
}

ExtDesc ExtDesc::fptloc(long long p, std::vector<FpPoly> polys) {
  ExtDesc e;
  e.kind = Kind::FpTlocS;
  e.p = p;
  for (const auto& q : polys) {
    if (q.p != p || !q.monic() || !fp_irreducible(q))
      fail(ErrKind::BadArgument, "fptloc: S must consist of monic irreducibles");
  }
  e.s_polys = std::move(polys);
  return e;
}

ExtDesc ExtDesc::product(std::vector<ExtDesc> parts) {
  for (const auto& p : parts)
    if (p.kind == Kind::Product)
      fail(ErrKind::Unsupported, "nested product extensions not supported");
  ExtDesc e;
  e.kind = Kind::Product;
  e.parts = std::move(parts);
  return e;
}

std::string ExtDesc::str() const {
  switch (kind) {
    case Kind::ZinQ:
      return "Z⊂Q";
    case Kind::ZlocS: {
      std::string s = "Zloc{";
      for (size_t i = 0; i < s_primes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(s_primes[i]);
      }
      return s + "}";
    }
    case Kind::FpTlocS: {
      std::string s = "F" + std::to_string(p) + "[t]loc{";
      for (size_t i = 0; i < s_polys.size(); ++i) {
        if (i) s += ",";
        s += fp_poly_str(s_polys[i]);
      }
      return s + "}";
    }
    case Kind::Product: {
      std::string s = "prod(";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += parts[i].str();
      }
      return s + ")";
    }
  }
  return "?";
}

LGroupDesc lambda_group(const ExtDesc& ext) {
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ:
      return LGroupDesc::primes();
    case ExtDesc::Kind::ZlocS:
      return LGroupDesc::pointwise(ext.s_primes);
    case ExtDesc::Kind::FpTlocS: {
      std::vector<long long> labels;
      std::vector<std::string> names;
      for (size_t i = 0; i < ext.s_polys.size(); ++i) {
        labels.push_back(static_cast<long long>(i));
        names.push_back(fp_poly_str(ext.s_polys[i]));
      }
      return LGroupDesc::pointwise(std::move(labels), std::move(names));
    }
    case ExtDesc::Kind::Product: {
      std::vector<LGroupDesc> parts;
      for (const auto& p : ext.parts) parts.push_back(lambda_group(p));
      return LGroupDesc::product(std::move(parts));
    }
  }
  fail(ErrKind::Internal, "lambda_group: bad kind");
}

FieldElem fe_zero(const ExtDesc& ext) { return fe_of_int(ext, 0); }
FieldElem fe_one(const ExtDesc& ext) { return fe_of_int(ext, 1); }

FieldElem fe_of_int(const ExtDesc& ext, long long n) {
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ:
    case ExtDesc::Kind::ZlocS:
      return FieldElem(Rat(static_cast<long>(n)));
    case ExtDesc::Kind::FpTlocS:
      return FieldElem(FpRat::of(FpPoly::constant(ext.p, n)));
    case ExtDesc::Kind::Product: {
      std::vector<FieldElem> t;
      for (const auto& p : ext.parts) t.push_back(fe_of_int(p, n));
      return FieldElem(std::move(t));
    }
  }
  fail(ErrKind::Internal, "fe_of_int: bad kind");
}

bool fe_is_zero(const FieldElem& x) {
  if (std::holds_alternative<Rat>(x.v)) return x.rat() == 0;
  if (std::holds_alternative<FpRat>(x.v)) return x.fq().is_zero();
  for (const auto& c : x.tuple())
    if (!fe_is_zero(c)) return false;
  return true;
}

void fe_check(const ExtDesc& ext, const FieldElem& x) {
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ:
    case ExtDesc::Kind::ZlocS:
      if (!std::holds_alternative<Rat>(x.v))
        fail(ErrKind::BadArgument, "element is not a rational");
      return;
    case ExtDesc::Kind::FpTlocS:
      if (!std::holds_alternative<FpRat>(x.v) || x.fq().num.p != ext.p)
        fail(ErrKind::BadArgument, "element is not in F_p(t)");
      return;
    case ExtDesc::Kind::Product: {
      if (!std::holds_alternative<std::vector<FieldElem>>(x.v) ||
          x.tuple().size() != ext.parts.size())
        fail(ErrKind::BadArgument, "tuple arity mismatch");
      for (size_t i = 0; i < ext.parts.size(); ++i)
        fe_check(ext.parts[i], x.tuple()[i]);
      return;
    }
  }
}

namespace {

template <typename FRat, typename FFq>
FieldElem fe_zip(const ExtDesc& ext, const FieldElem& a, const FieldElem& b,
                 FRat frat, FFq ffq) {
  fe_check(ext, a);
  fe_check(ext, b);
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ:
    case ExtDesc::Kind::ZlocS:
      return FieldElem(frat(a.rat(), b.rat()));
    case ExtDesc::Kind::FpTlocS:
      return FieldElem(ffq(a.fq(), b.fq()));
    case ExtDesc::Kind::Product: {
      std::vector<FieldElem> t;
      for (size_t i = 0; i < ext.parts.size(); ++i)
        t.push_back(fe_zip(ext.parts[i], a.tuple()[i], b.tuple()[i], frat, ffq));
      return FieldElem(std::move(t));
    }
  }
  fail(ErrKind::Internal, "fe_zip: bad kind");
}

}  // namespace

FieldElem fe_add(const ExtDesc& ext, const FieldElem& a, const FieldElem& b) {
  return fe_zip(ext, a, b, [](const Rat& x, const Rat& y) { return Rat(x + y); },
                fq_add);
}

FieldElem fe_sub(const ExtDesc& ext, const FieldElem& a, const FieldElem& b) {
  return fe_zip(ext, a, b, [](const Rat& x, const Rat& y) { return Rat(x - y); },
                fq_sub);
}

FieldElem fe_mul(const ExtDesc& ext, const FieldElem& a, const FieldElem& b) {
  return fe_zip(ext, a, b, [](const Rat& x, const Rat& y) { return Rat(x * y); },
                fq_mul);
}

FieldElem fe_neg(const ExtDesc& ext, const FieldElem& a) {
  return fe_sub(ext, fe_zero(ext), a);
}

FieldElem fe_inv(const ExtDesc& ext, const FieldElem& a) {
  return fe_zip(ext, a, a,
                [](const Rat& x, const Rat&) {
                  if (x == 0) fail(ErrKind::BadArgument, "fe_inv: zero");
                  return Rat(1 / x);
                },
                [](const FpRat& x, const FpRat&) { return fq_inv(x); });
}

std::string fe_str(const FieldElem& x) {
  if (std::holds_alternative<Rat>(x.v)) return rat_str(x.rat());
  if (std::holds_alternative<FpRat>(x.v)) return fq_str(x.fq());
  std::string s = "(";
  for (size_t i = 0; i < x.tuple().size(); ++i) {
    if (i) s += " | ";
    s += fe_str(x.tuple()[i]);
  }
  return s + ")";
}

LMonElem pm_valuation(const ExtDesc& ext, const FieldElem& x) {
  fe_check(ext, x);
  LGroupDesc g = lambda_group(ext);
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ: {
      if (x.rat() == 0) return lmon_omega(g);
      std::map<Idx, ExtInt> entries;
      for (const auto& [p, e] : factor_int(rat_num(x.rat()), ext.factor_bound))
        entries[Idx{0, p}] = ExtInt::of(e);
      for (const auto& [p, e] : factor_int(rat_den(x.rat()), ext.factor_bound)) {
        auto& slot = entries[Idx{0, p}];
        slot = ExtInt::of(slot.v - e);
      }
      return lmon_make(g, {}, std::move(entries));
    }
    case ExtDesc::Kind::ZlocS: {
      if (x.rat() == 0) return lmon_omega(g);
      std::map<Idx, ExtInt> entries;
      for (long long p : ext.s_primes) {
        long long v = vp_rat(x.rat(), Int(static_cast<long>(p)));
        if (v) entries[Idx{0, p}] = ExtInt::of(v);
      }
      return lmon_make(g, {}, std::move(entries));
    }
    case ExtDesc::Kind::FpTlocS: {
      if (x.fq().is_zero()) return lmon_omega(g);
      std::map<Idx, ExtInt> entries;
      for (size_t i = 0; i < ext.s_polys.size(); ++i) {
        long long v = vq_rat(x.fq(), ext.s_polys[i]);
        if (v) entries[Idx{0, static_cast<long long>(i)}] = ExtInt::of(v);
      }
      return lmon_make(g, {}, std::move(entries));
    }
    case ExtDesc::Kind::Product: {
      std::vector<bool> defaults(ext.parts.size(), false);
      std::map<Idx, ExtInt> entries;
      for (size_t b = 0; b < ext.parts.size(); ++b) {
        LMonElem w = pm_valuation(ext.parts[b], x.tuple()[b]);
        if (lmon_is_omega(w)) {
          defaults[b] = true;
          continue;
        }
        for (const auto& [k, v] : w.exc)
          entries[Idx{static_cast<int>(b), k.pos}] = v;
      }
      return lmon_make(g, std::move(defaults), std::move(entries));
    }
  }
  fail(ErrKind::Internal, "pm_valuation: bad kind");
}

LMonElem what_hat(const ModuleGens& m) {
  if (m.gens.empty()) fail(ErrKind::BadArgument, "what_hat: empty generator list");
  LMonElem acc = pm_valuation(m.ext, m.gens[0]);
  for (size_t i = 1; i < m.gens.size(); ++i)
    acc = lmon_meet(acc, pm_valuation(m.ext, m.gens[i]));
  return acc;
}

std::optional<LElem> module_reduce(const ModuleGens& m) {
  LMonElem w = what_hat(m);
  if (lmon_is_omega(w)) return std::nullopt;
  auto l = lmon_as_lelem(w);
  if (!l)
    fail(ErrKind::Unsupported,
         "module_reduce: module has a zero component and is not invertible");
  return *l;
}

namespace {

// numerator/denominator split of the S-part: d_S = prod of S-supported part
// of den(x), d_1 the coprime rest.
void split_den_rat(const Rat& x, const std::vector<long long>& s, Int& ds, Int& d1) {
  Int den = rat_den(x);
  ds = 1;
  for (long long p : s) {
    long long v = vp_int(den, Int(static_cast<long>(p)));
    for (long long i = 0; i < v; ++i) {
      ds *= static_cast<long>(p);
      den /= static_cast<long>(p);
    }
  }
  d1 = den;
}

// S-part of y modulo Z_S: rational with S-supported denominator, in [0, 1).
Rat s_frac(const Rat& y, const std::vector<long long>& s) {
  Int ds, d1;
  split_den_rat(y, s, ds, d1);
  if (ds == 1) return Rat(0);
  // 1 = u*ds + v*d1  =>  y = n*u/d1 + n*v/ds
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), ds.get_mpz_t(),
             d1.get_mpz_t());
  Rat spart = make_rat(rat_num(y) * v, ds);
  return rat_frac(spart);
}

FpRat fq_div(const FpRat& a, const FpRat& b) { return fq_mul(a, fq_inv(b)); }

void split_den_fq(const FpRat& x, const std::vector<FpPoly>& s, FpPoly& ds,
                  FpPoly& d1) {
  FpPoly den = x.den;
  ds = FpPoly::constant(x.p(), 1);
  for (const auto& q : s) {
    long long v = den.is_zero() ? 0 : vq_poly(den, q);
    for (long long i = 0; i < v; ++i) {
      ds = fp_mul(ds, q);
      FpPoly quo, rem;
      fp_divmod(den, q, quo, rem);
      den = quo;
    }
  }
  d1 = den;
}

FpRat s_frac_fq(const FpRat& y, const std::vector<FpPoly>& s) {
  FpPoly ds, d1;
  split_den_fq(y, s, ds, d1);
  if (ds.is_one()) return FpRat::of(FpPoly::constant(y.p(), 0));
  FpPoly g, u, v;
  fp_xgcd(ds, d1, g, u, v);
  // y = n*u/d1 + n*v/ds ; reduce the S-part numerator mod ds
  FpPoly num = fp_mod(fp_mul(y.num, v), ds);
  return FpRat(num, ds);
}

}  // namespace

FieldElem ideal_generator(const ExtDesc& ext, const LElem& alpha) {
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ:
    case ExtDesc::Kind::ZlocS:
      return FieldElem(lelem_rat(alpha));
    case ExtDesc::Kind::FpTlocS: {
      FpRat r = FpRat::of(FpPoly::constant(ext.p, 1));
      for (const auto& [k, v] : alpha.e) {
        FpRat q = FpRat::of(ext.s_polys[static_cast<size_t>(k.pos)]);
        for (long long i = 0; i < (v > 0 ? v : -v); ++i)
          r = (v > 0) ? fq_mul(r, q) : fq_div(r, q);
      }
      return FieldElem(r);
    }
    case ExtDesc::Kind::Product: {
      std::vector<FieldElem> t;
      for (size_t b = 0; b < ext.parts.size(); ++b) {
        LElem part;
        part.group = lambda_group(ext.parts[b]);
        for (const auto& [k, v] : alpha.e)
          if (k.block == static_cast<int>(b)) part.e[Idx{0, k.pos}] = v;
        t.push_back(ideal_generator(ext.parts[b], part));
      }
      return FieldElem(std::move(t));
    }
  }
  fail(ErrKind::Internal, "ideal_generator: bad kind");
}

FieldElem canon_rep(const ExtDesc& ext, const FieldElem& x, const LElem& alpha) {
  fe_check(ext, x);
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ: {
      Rat q = lelem_rat(alpha);
      if (rat_den(q) == 1 && rat_den(x.rat()) == 1) {
        Int r = rat_num(x.rat()) % rat_num(q);
        if (r < 0) r += rat_num(q);
        return FieldElem(Rat(r));
      }
      Rat y = x.rat() / q;
      return FieldElem(Rat(rat_frac(y) * q));
    }
    case ExtDesc::Kind::ZlocS: {
      Rat q = lelem_rat(alpha);
      return FieldElem(Rat(s_frac(x.rat() / q, ext.s_primes) * q));
    }
    case ExtDesc::Kind::FpTlocS: {
      FpRat q = ideal_generator(ext, alpha).fq();
      return FieldElem(fq_mul(s_frac_fq(fq_div(x.fq(), q), ext.s_polys), q));
    }
    case ExtDesc::Kind::Product: {
      std::vector<FieldElem> t;
      for (size_t b = 0; b < ext.parts.size(); ++b) {
        LElem part;
        part.group = lambda_group(ext.parts[b]);
        for (const auto& [k, v] : alpha.e)
          if (k.block == static_cast<int>(b)) part.e[Idx{0, k.pos}] = v;
        t.push_back(canon_rep(ext.parts[b], x.tuple()[b], part));
      }
      return FieldElem(std::move(t));
    }
  }
  fail(ErrKind::Internal, "canon_rep: bad kind");
}

bool eq_mod(const ExtDesc& ext, const FieldElem& x, const FieldElem& y,
            const LElem& alpha) {
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ: {
      Rat d = (x.rat() - y.rat()) / lelem_rat(alpha);
      return rat_den(d) == 1;
    }
    case ExtDesc::Kind::ZlocS: {
      Rat d = (x.rat() - y.rat()) / lelem_rat(alpha);
      Int den = rat_den(d);
      for (long long p : ext.s_primes)
        if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
          return false;
      return true;
    }
    case ExtDesc::Kind::FpTlocS: {
      FpRat d = fq_sub(x.fq(), y.fq());
      if (d.is_zero()) return true;
      d = fq_div(d, ideal_generator(ext, alpha).fq());
      for (const auto& q : ext.s_polys)
        if (vq_poly(d.den, q) > 0) return false;
      return true;
    }
    case ExtDesc::Kind::Product: {
      for (size_t b = 0; b < ext.parts.size(); ++b) {
        LElem part;
        part.group = lambda_group(ext.parts[b]);
        for (const auto& [k, v] : alpha.e)
          if (k.block == static_cast<int>(b)) part.e[Idx{0, k.pos}] = v;
        if (!eq_mod(ext.parts[b], x.tuple()[b], y.tuple()[b], part)) return false;
      }
      return true;
    }
  }
  fail(ErrKind::Internal, "eq_mod: bad kind");
}

FieldElem mod_inverse_ideal(const ExtDesc& ext, const FieldElem& u,
                            const LElem& alpha) {
  if (!l_nonneg(alpha)) fail(ErrKind::BadArgument, "mod_inverse_ideal: alpha < eps");
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ:
    case ExtDesc::Kind::ZlocS: {
      Int q = rat_num(lelem_rat(alpha));
      return FieldElem(rat_mod_inverse(u.rat(), q));
    }
    case ExtDesc::Kind::FpTlocS: {
      FpRat q = ideal_generator(ext, alpha).fq();
      if (q.den.is_one() && q.num.is_one())
        return FieldElem(FpRat::of(FpPoly::constant(ext.p, 0)));
      FpPoly m = q.num;
      FpPoly g, a, b;
      fp_xgcd(fp_mod(u.fq().num, m), m, g, a, b);
      if (!g.is_one()) fail(ErrKind::BadArgument, "mod_inverse_ideal: not a unit");
      // u^{-1} mod m = (num^{-1} mod m) * den
      return FieldElem(FpRat::of(fp_mod(fp_mul(a, fp_mod(u.fq().den, m)), m)));
    }
    case ExtDesc::Kind::Product: {
      std::vector<FieldElem> t;
      for (size_t b = 0; b < ext.parts.size(); ++b) {
        LElem part;
        part.group = lambda_group(ext.parts[b]);
        for (const auto& [k, v] : alpha.e)
          if (k.block == static_cast<int>(b)) part.e[Idx{0, k.pos}] = v;
        t.push_back(mod_inverse_ideal(ext.parts[b], u.tuple()[b], part));
      }
      return FieldElem(std::move(t));
    }
  }
  fail(ErrKind::Internal, "mod_inverse_ideal: bad kind");
}

std::optional<std::pair<FieldElem, LElem>> crt_pair(const ExtDesc& ext,
                                                    const FieldElem& x,
                                                    const LElem& alpha,
                                                    const FieldElem& y,
                                                    const LElem& beta) {
  LElem g = l_meet(alpha, beta);
  if (!eq_mod(ext, x, y, g)) return std::nullopt;
  LElem join = l_join(alpha, beta);
  // z = x + qa*k with k = a^{-1} * (y-x)/qg modulo the ideal b,
  // a = alpha/g, b = beta/g coprime nonnegative ideals.
  LElem a = l_div(alpha, g), b = l_div(beta, g);
  FieldElem qg = ideal_generator(ext, g);
  FieldElem qa = ideal_generator(ext, alpha);
  FieldElem diff = fe_mul(ext, fe_sub(ext, y, x), fe_inv(ext, qg));
  FieldElem ainv = mod_inverse_ideal(ext, ideal_generator(ext, a), b);
  FieldElem k = canon_rep(ext, fe_mul(ext, diff, ainv), b);
  FieldElem z = fe_add(ext, x, fe_mul(ext, qa, k));
  return std::make_pair(canon_rep(ext, z, join), join);
}

FieldElem p2_witness(const ExtDesc& ext, const FieldElem& x) {
  fe_check(ext, x);
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ:
    case ExtDesc::Kind::ZlocS: {
      std::vector<long long> s = ext.s_primes;
      Int ds, d1;
      if (ext.kind == ExtDesc::Kind::ZinQ) {
        ds = rat_den(x.rat());
      } else {
        split_den_rat(x.rat(), s, ds, d1);
      }
      if (ds == 1) return FieldElem(Rat(0));
      Int dd = ds * ds;
      // y = n^{-1} * ds mod ds^2 where n = x*ds has no S-denominator
      Rat n = x.rat() * Rat(ds);
      Rat y = rat_mod(rat_mod_inverse(n, dd) * Rat(ds), dd);
      return FieldElem(y);
    }
    case ExtDesc::Kind::FpTlocS: {
      FpPoly ds, d1;
      split_den_fq(x.fq(), ext.s_polys, ds, d1);
      if (ds.is_one()) return FieldElem(FpRat::of(FpPoly::constant(ext.p, 0)));
      FpPoly dd = fp_mul(ds, ds);
      FpRat n = fq_mul(x.fq(), FpRat::of(ds));
      // n^{-1} mod dd = (num^{-1} mod dd) * den
      FpPoly g, a, b;
      fp_xgcd(fp_mod(n.num, dd), dd, g, a, b);
      if (!g.is_one()) fail(ErrKind::Internal, "p2_witness: unit inversion failed");
      FpPoly ninv = fp_mod(fp_mul(a, fp_mod(n.den, dd)), dd);
      FpPoly y = fp_mod(fp_mul(ninv, ds), dd);
      return FieldElem(FpRat::of(y));
    }
    case ExtDesc::Kind::Product: {
      std::vector<FieldElem> t;
      for (size_t b = 0; b < ext.parts.size(); ++b)
        t.push_back(p2_witness(ext.parts[b], x.tuple()[b]));
      return FieldElem(std::move(t));
    }
  }
  fail(ErrKind::Internal, "p2_witness: bad kind");
}

ManisReport is_manis_report(const ExtDesc& ext,
                            const std::vector<FieldElem>& sample) {
  ManisReport rep;
  for (const auto& x : sample) {
    if (fe_is_zero(x)) continue;
    LMonElem w = pm_valuation(ext, x);
    LMonParts parts = lmon_decompose(w);
    // only x in B \ A contribute: w(x)_- != eps
    for (const auto& [k, v] : parts.minus.e) rep.covered.insert(k);
  }
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ:
      rep.basis_finite = false;
      break;
    case ExtDesc::Kind::ZlocS:
      rep.basis_finite = true;
      rep.full = rep.covered.size() == ext.s_primes.size();
      break;
    case ExtDesc::Kind::FpTlocS:
      rep.basis_finite = true;
      rep.full = rep.covered.size() == ext.s_polys.size();
      break;
    case ExtDesc::Kind::Product: {
      rep.basis_finite = true;
      size_t total = 0;
      for (const auto& p : ext.parts) {
        if (p.kind == ExtDesc::Kind::ZinQ) rep.basis_finite = false;
        total += p.kind == ExtDesc::Kind::ZlocS    ? p.s_primes.size()
                 : p.kind == ExtDesc::Kind::FpTlocS ? p.s_polys.size()
                                                     : 0;
      }
      rep.full = rep.basis_finite && rep.covered.size() == total;
      break;
    }
  }
  return rep;
}

}  // namespace residua
