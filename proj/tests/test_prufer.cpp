#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "residua/prufer.hpp"

using namespace residua;
using residua::testing::of_rat;

namespace {

const ExtDesc ZQ = ExtDesc::zinq();
const LGroupDesc Q = lambda_group(ZQ);

FieldElem fr(long n, long d = 1) { return FieldElem(make_rat(n, d)); }

Rat sample_rat(Rng& rng, long long h) {
  long long n = rng.range(-h, h);
  long long d = rng.range(1, h);
  return make_rat(n, d);
}

}  // namespace

TEST_CASE("module_reduce") {
  CHECK(module_reduce({ZQ, {fr(4, 3), fr(6)}}) == of_rat(Q, 2, 3));
  CHECK(module_reduce({ZQ, {fr(0)}}) == std::nullopt);
  CHECK(module_reduce({ZQ, {fr(1)}}) == l_eps(Q));
}

TEST_CASE("pm_valuation") {
  LMonElem w12 = pm_valuation(ZQ, fr(12));
  CHECK(lmon_as_lelem(w12) == of_rat(Q, 12));
  CHECK(lmon_is_omega(pm_valuation(ZQ, fr(0))));
  CHECK(lmon_as_lelem(pm_valuation(ZQ, fr(1))) == l_eps(Q));

  ExtDesc zz = ExtDesc::product({ExtDesc::zinq(), ExtDesc::zinq()});
  FieldElem x(std::vector<FieldElem>{fr(5), fr(0)});
  LMonElem w = pm_valuation(zz, x);
  CHECK_FALSE(w.block_inf[0]);
  CHECK(w.block_inf[1]);
  CHECK(w.at(Idx{0, 5}) == ExtInt::of(1));
}

TEST_CASE("pm_valuation respects the trial division bound") {
  ExtDesc small = ExtDesc::zinq(10);
  CHECK_THROWS_AS((void)pm_valuation(small, fr(101 * 103)), Error);
}

TEST_CASE("what_hat") {
  CHECK(lmon_as_lelem(what_hat({ZQ, {fr(4, 3), fr(6)}})) == of_rat(Q, 2, 3));
  CHECK(lmon_is_omega(what_hat({ZQ, {fr(0), fr(0)}})));
  CHECK(lmon_as_lelem(what_hat({ZQ, {fr(1), fr(12)}})) == l_eps(Q));
}

TEST_CASE("what_hat is a morphism of sl-monoids on sampled generator lists") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    std::vector<FieldElem> gi, gj, prod, sum;
    int ni = 1 + static_cast<int>(rng.below(3));
    int nj = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < ni; ++k) gi.push_back(FieldElem(sample_rat(rng, 30)));
    for (int k = 0; k < nj; ++k) gj.push_back(FieldElem(sample_rat(rng, 30)));
    for (const auto& a : gi)
      for (const auto& b : gj) prod.push_back(fe_mul(ZQ, a, b));
    sum = gi;
    sum.insert(sum.end(), gj.begin(), gj.end());
    LMonElem wi = what_hat({ZQ, gi}), wj = what_hat({ZQ, gj});
    CHECK(what_hat({ZQ, prod}) == lmon_mul(wi, wj));
    CHECK(what_hat({ZQ, sum}) == lmon_meet(wi, wj));
  }
}

TEST_CASE("P2 witness") {
  CHECK(p2_witness(ZQ, fr(1, 2)) == fr(2));
  CHECK(p2_witness(ZQ, fr(5)) == fr(0));
  // x = 3/4: the two memberships hold exactly
  FieldElem x = fr(3, 4);
  FieldElem y = p2_witness(ZQ, x);
  FieldElem xy = fe_mul(ZQ, x, y);
  CHECK(rat_den(xy.rat()) == 1);
  FieldElem r = fe_mul(ZQ, x, fe_sub(ZQ, fe_one(ZQ), xy));
  CHECK(rat_den(r.rat()) == 1);
}

TEST_CASE("P2 witnesses verify on samples across kinds") {
  Rng rng(23);
  ExtDesc z23 = ExtDesc::zloc({2, 3});
  for (int t = 0; t < 500; ++t) {
    Rat x = sample_rat(rng, 60);
    for (const ExtDesc& ext : {ZQ, z23}) {
      FieldElem xe{x};
      FieldElem y = p2_witness(ext, xe);
      // y, x*y, x*(1-x*y) all in A
      auto in_a = [&](const FieldElem& v) {
        return l_nonneg(lmon_decompose(pm_valuation(ext, v)).minus) &&
               lmon_decompose(pm_valuation(ext, v)).minus.is_eps();
      };
      CHECK(in_a(y));
      CHECK(in_a(fe_mul(ext, xe, y)));
      CHECK(in_a(fe_mul(ext, xe, fe_sub(ext, fe_one(ext), fe_mul(ext, xe, y)))));
    }
  }
}

TEST_CASE("Manis coverage") {
  std::vector<FieldElem> sample;
  for (long p = 2; p <= 100; ++p) {
    bool prime = p >= 2;
    for (long q = 2; q * q <= p; ++q) prime = prime && (p % q != 0);
    if (prime) sample.push_back(fr(1, p));
  }
  ManisReport rep = is_manis_report(ZQ, sample);
  CHECK(rep.covered.size() == 25);  // primes up to 100
  CHECK(rep.covered.contains(Idx{0, 97}));

  CHECK(is_manis_report(ZQ, {}).covered.empty());

  ExtDesc z23 = ExtDesc::zloc({2, 3});
  ManisReport r2 = is_manis_report(z23, {fr(1, 2), fr(1, 3)});
  CHECK(r2.full);
}

TEST_CASE("B minus A multiplicatively closed iff Lambda totally ordered") {
  // witness for ZinQ: (3/2)*(2/3) = 1 in A
  FieldElem a = fr(3, 2), b = fr(2, 3);
  auto outside_a = [&](const ExtDesc& e, const FieldElem& v) {
    return !lmon_decompose(pm_valuation(e, v)).minus.is_eps();
  };
  CHECK(outside_a(ZQ, a));
  CHECK(outside_a(ZQ, b));
  CHECK_FALSE(outside_a(ZQ, fe_mul(ZQ, a, b)));
  // Zloc{2}: closed on samples
  ExtDesc z2 = ExtDesc::zloc({2});
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    Rat x = sample_rat(rng, 40), y = sample_rat(rng, 40);
    if (x == 0 || y == 0) continue;
    if (outside_a(z2, FieldElem(x)) && outside_a(z2, FieldElem(y)))
      CHECK(outside_a(z2, FieldElem(Rat(x * y))));
  }
}

TEST_CASE("support of the valuation") {
  Rng rng(37);
  for (int t = 0; t < 200; ++t) {
    Rat x = sample_rat(rng, 50);
    CHECK(lmon_is_omega(pm_valuation(ZQ, FieldElem(x))) == (x == 0));
  }
}

TEST_CASE("canonical representatives") {
  CHECK(canon_rep(ZQ, fr(9), of_rat(Q, 4)) == fr(1));
  CHECK(canon_rep(ZQ, fr(-1, 2), of_rat(Q, 2)) == fr(3, 2));
  CHECK(canon_rep(ZQ, fr(0), of_rat(Q, 7)) == fr(0));
  // idempotent
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    Rat x = sample_rat(rng, 40);
    LElem al = of_rat(Q, make_rat(rng.range(1, 50), rng.range(1, 8)));
    FieldElem c = canon_rep(ZQ, FieldElem(x), al);
    CHECK(canon_rep(ZQ, c, al) == c);
    CHECK(eq_mod(ZQ, FieldElem(x), c, al));
  }
}

TEST_CASE("canonical representatives in localized kinds") {
  ExtDesc z2 = ExtDesc::zloc({2});
  LGroupDesc g2 = lambda_group(z2);
  LElem four = lelem(g2, {{Idx{0, 2}, 2}});
  // 1/3 is a 2-adic unit: reduces into the window with 2-power denominator
  FieldElem c = canon_rep(z2, fr(1, 3), four);
  CHECK(eq_mod(z2, fr(1, 3), c, four));
  CHECK(rat_den(c.rat()) == 1);  // S-supported denominator, here none
  CHECK(c == fr(3));             // 1/3 = 3 mod 4 in Z_(2)
  // and 5 mod 4 reduces to 1
  CHECK(canon_rep(z2, fr(5), four) == fr(1));
}

TEST_CASE("crt_pair") {
  auto z = crt_pair(ZQ, fr(1), of_rat(Q, 4), fr(2), of_rat(Q, 9));
  REQUIRE(z.has_value());
  CHECK(z->first == fr(29));
  CHECK(z->second == of_rat(Q, 36));
  CHECK_FALSE(crt_pair(ZQ, fr(1), of_rat(Q, 4), fr(3), of_rat(Q, 4)).has_value());
  // fractional moduli
  auto w = crt_pair(ZQ, fr(1, 2), of_rat(Q, 3, 2), fr(1, 3), of_rat(Q, 4, 3));
  REQUIRE(w.has_value());
  CHECK(eq_mod(ZQ, w->first, fr(1, 2), of_rat(Q, 3, 2)));
  CHECK(eq_mod(ZQ, w->first, fr(1, 3), of_rat(Q, 4, 3)));
}

TEST_CASE("F_p(t) localized kind") {
  FpPoly t = FpPoly::t(3);
  FpPoly t1 = fp_poly_parse(3, "t+1");
  ExtDesc f3 = ExtDesc::fptloc(3, {t, t1});
  LGroupDesc g = lambda_group(f3);
  CHECK(g.labels.size() == 2);

  FieldElem x{FpRat(fp_mul(t, t), t1)};  // t^2/(t+1)
  LMonElem w = pm_valuation(f3, x);
  CHECK(w.at(Idx{0, 0}) == ExtInt::of(2));
  CHECK(w.at(Idx{0, 1}) == ExtInt::of(-1));

  // P2 witness memberships
  FieldElem y = p2_witness(f3, x);
  auto in_a = [&](const FieldElem& v) {
    return lmon_decompose(pm_valuation(f3, v)).minus.is_eps();
  };
  CHECK(in_a(y));
  CHECK(in_a(fe_mul(f3, x, y)));
  CHECK(in_a(fe_mul(f3, x, fe_sub(f3, fe_one(f3), fe_mul(f3, x, y)))));

  // canonical representative mod t^2
  LElem t2 = lelem(g, {{Idx{0, 0}, 2}});
  FieldElem c = canon_rep(f3, x, t2);
  CHECK(eq_mod(f3, x, c, t2));
  CHECK(canon_rep(f3, c, t2) == c);

  // crt over coprime irreducibles
  LElem i0 = lelem(g, {{Idx{0, 0}, 1}});
  LElem i1 = lelem(g, {{Idx{0, 1}, 1}});
  auto z = crt_pair(f3, FieldElem(FpRat::of(FpPoly::constant(3, 1))), i0,
                    FieldElem(FpRat::of(FpPoly::constant(3, 2))), i1);
  REQUIRE(z.has_value());
  CHECK(eq_mod(f3, z->first, FieldElem(FpRat::of(FpPoly::constant(3, 1))), i0));
  CHECK(eq_mod(f3, z->first, FieldElem(FpRat::of(FpPoly::constant(3, 2))), i1));
}

TEST_CASE("fp factorization") {
  FpPoly f = fp_poly_parse(2, "t^6+t^5+t^4+t^3+t^2+t+1");
  auto fac = fp_factor(f);
  FpPoly back = FpPoly::constant(2, 1);
  for (const auto& [q, e] : fac) {
    CHECK(fp_irreducible(q));
    for (long long i = 0; i < e; ++i) back = fp_mul(back, q);
  }
  CHECK(back == f);
  CHECK_THROWS_AS((void)fp_factor(fp_poly_parse(2, "t^7+t+1")), Error);
  CHECK(fp_irreducible(fp_poly_parse(2, "t^2+t+1")));
  CHECK_FALSE(fp_irreducible(fp_poly_parse(2, "t^2+1")));
}
