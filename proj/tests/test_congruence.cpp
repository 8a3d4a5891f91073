#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "residua/congruence.hpp"

using namespace residua;
using residua::testing::of_rat;
using residua::testing::res;

namespace {

const ModelDesc RQ = build_model(ExtDesc::zinq());
const LGroupDesc Q = RQ.group;

QsElem sample_res(Rng& rng) {
  Rat mod(1);
  for (long long p : {2LL, 3LL, 5LL})
    if (rng.coin()) {
      long long e = rng.range(-2, 2);
      for (int i = 0; i < std::abs(e); ++i)
        mod *= e > 0 ? Rat(static_cast<long>(p)) : Rat(1, static_cast<long>(p));
    }
  return res(RQ, make_rat(rng.range(-30, 30), rng.range(1, 9)), mod);
}

}  // namespace

TEST_CASE("cong_equal") {
  QuotientDesc q{RQ, ConvexConeDesc{Q, false, {Idx{0, 2}}}};
  CHECK(cong_equal(q, res(RQ, 1, 1, 4), res(RQ, 3, 1, 8)));
  CHECK_FALSE(cong_equal(q, res(RQ, 1, 1, 4), res(RQ, 2, 1, 3)));
  QuotientDesc trivial{RQ, ConvexConeDesc{Q, false, {}}};
  QsElem a = res(RQ, 5, 1, 12);
  CHECK(cong_equal(trivial, a, a));
  CHECK_FALSE(cong_equal(trivial, a, res(RQ, 5, 1, 6)));
}

TEST_CASE("cone congruences are compatible with the operations") {
  Rng rng(101);
  QuotientDesc q{RQ, ConvexConeDesc{Q, false, {Idx{0, 2}, Idx{0, 3}}}};
  int related = 0;
  for (int t = 0; t < 400; ++t) {
    QsElem x = sample_res(rng), y = sample_res(rng), z = sample_res(rng);
    CHECK(cong_equal(q, x, x));
    if (cong_equal(q, x, y)) {
      ++related;
      CHECK(cong_equal(q, y, x));
      CHECK(cong_equal(q, qs_add(x, z), qs_add(y, z)));
      CHECK(cong_equal(q, qs_mul(x, z), qs_mul(y, z)));
      CHECK(cong_equal(q, qs_neg(x), qs_neg(y)));
      CHECK(cong_equal(q, qs_qinv(x), qs_qinv(y)));
      CHECK(cong_equal(q, qs_meet(x, z), qs_meet(y, z)));
      if (cong_equal(q, y, z)) CHECK(cong_equal(q, x, z));
    }
  }
  CHECK(related > 10);
}

TEST_CASE("project_prime") {
  QsElem x = res(RQ, 5, 1, 12);
  auto p2 = project_prime(x, Idx{0, 2});
  CHECK(qs_str(p2.image) == "1 mod 4");
  auto p3 = project_prime(x, Idx{0, 3});
  CHECK(qs_str(p3.image) == "2 mod 3");
  auto p5 = project_prime(x, Idx{0, 5});
  CHECK(qs_str(p5.image) == "0 mod 1");
}

TEST_CASE("projections separate and preserve the operations") {
  Rng rng(103);
  for (int t = 0; t < 300; ++t) {
    QsElem x = sample_res(rng), y = sample_res(rng);
    if (x == y) continue;
    // some prime projection separates
    bool separated = false;
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL})
      if (!(project_prime(x, Idx{0, p}).image == project_prime(y, Idx{0, p}).image))
        separated = true;
    CHECK(separated);
    // projections are morphisms for all five operations
    long long p = std::vector<long long>{2, 3, 5}[rng.below(3)];
    Idx i{0, p};
    auto pr = [&](const QsElem& v) { return project_prime(v, i).image; };
    CHECK(pr(qs_add(x, y)) == qs_add(pr(x), pr(y)));
    CHECK(pr(qs_mul(x, y)) == qs_mul(pr(x), pr(y)));
    CHECK(pr(qs_neg(x)) == qs_neg(pr(x)));
    CHECK(pr(qs_qinv(x)) == qs_qinv(pr(x)));
    CHECK(pr(qs_meet(x, y)) == qs_meet(pr(x), pr(y)));
  }
}

TEST_CASE("r_theta membership") {
  LMonElem t2 = lmon_make(Q, {false}, {{Idx{0, 2}, ExtInt::infinity()}});
  CHECK(r_theta_member(res(RQ, 2, 1, 3), t2));
  CHECK_FALSE(r_theta_member(res(RQ, 5, 1, 12), t2));
  LMonElem eps = lmon_eps(Q);
  Rng rng(107);
  for (int t = 0; t < 100; ++t) CHECK(r_theta_member(sample_res(rng), eps));
}

TEST_CASE("R^theta is closed under the operations and 1_alpha") {
  LMonElem t2 = lmon_make(Q, {false}, {{Idx{0, 2}, ExtInt::infinity()}});
  Rng rng(109);
  int used = 0;
  for (int t = 0; t < 500; ++t) {
    QsElem x = sample_res(rng), y = sample_res(rng);
    if (!r_theta_member(x, t2) || !r_theta_member(y, t2)) continue;
    ++used;
    CHECK(r_theta_member(qs_add(x, y), t2));
    CHECK(r_theta_member(qs_mul(x, y), t2));
    CHECK(r_theta_member(qs_neg(x), t2));
    CHECK(r_theta_member(qs_qinv(x), t2));
    CHECK(r_theta_member(qs_meet(x, y), t2));
  }
  CHECK(used > 20);
  // 1_alpha for alpha in Ker(theta~)_+
  for (long a : {1L, 3L, 9L, 15L, 35L}) {
    QsElem one = one_alpha(RQ, of_rat(Q, a));
    CHECK(r_theta_member(one, t2));
  }
}

TEST_CASE("Lemma 4.7(2): E-bullet congruence matches the group closure") {
  // for our models the smallest convex submonoid containing e+(E-bullet) is
  // all of Lambda_+: every alpha >= eps is e+(1_alpha)
  Rng rng(113);
  ConvexConeDesc full{Q, true, {}};
  for (int t = 0; t < 200; ++t) {
    QsElem x = sample_res(rng), y = sample_res(rng);
    CHECK(cone_member(full, qs_eplus(qs_ebullet(x))));
    // v(x*y^{-1}) in G = Lambda always, matching x == y under the full cone
    CHECK(cone_group_member(full, qs_v(qs_mul(x, qs_qinv(y)))));
    CHECK(cong_equal({RQ, full}, x, y));
  }
}

TEST_CASE("rigidity report") {
  Rng rng(127);
  std::vector<QsElem> sample;
  for (int t = 0; t < 50; ++t) sample.push_back(sample_res(rng));
  std::vector<LElem> alphas = {l_eps(Q), of_rat(Q, 6), of_rat(Q, 12), of_rat(Q, 30)};
  RigidityReport r = rigidity_report(RQ, sample, alphas);
  CHECK(r.superrigid);
  CHECK(r.eplus_injective_on_sample);

  ModelDesc lf = model_lfl(2, 0);
  std::vector<QsElem> lfs = {make_lfl_lattice(lf, 2), make_lfl_group(lf, 0, 1)};
  RigidityReport rl = rigidity_report(lf, lfs, {});
  CHECK(rl.rigid);
  CHECK_FALSE(rl.superrigid);

  ModelDesc rl1 = model_rlambda(LGroupDesc::pointwise({0}));
  LElem a2 = lelem(rl1.group, {{Idx{0, 0}, 2}});
  RigidityReport rr = rigidity_report(rl1, {}, {a2});
  CHECK(rr.superrigid);
}
