#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "residua/checker.hpp"

using namespace residua;
using residua::testing::of_rat;
using residua::testing::res;

namespace {
const ModelDesc RQ = build_model(ExtDesc::zinq());
const LGroupDesc Q = RQ.group;
}  // namespace

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 10);
  CHECK_THROWS_AS((void)suite_by_name("nope"), Error);
  CHECK(suite_applicable(suite_by_name("crq_axioms"), RQ));
  CHECK_FALSE(suite_applicable(suite_by_name("locally_linear"), RQ));
  CHECK(suite_applicable(suite_by_name("locally_linear"),
                         build_model(ExtDesc::zloc({2}))));
  CHECK_FALSE(suite_applicable(suite_by_name("salpha_median"), model_salpha(true)));
  CHECK(suite_applicable(suite_by_name("salpha_median"), model_salpha(false)));
}

TEST_CASE("runs are deterministic in the seed") {
  SuiteReport a = run_suite(RQ, suite_by_name("crq_axioms"), 50, 42);
  SuiteReport b = run_suite(RQ, suite_by_name("crq_axioms"), 50, 42);
  REQUIRE(a.axioms.size() == b.axioms.size());
  for (size_t i = 0; i < a.axioms.size(); ++i) {
    CHECK(a.axioms[i].passed == b.axioms[i].passed);
    CHECK(a.axioms[i].failed == b.axioms[i].failed);
  }
  CHECK(a.ok);
  SuiteReport c = run_suite(RQ, suite_by_name("crq_axioms"), 0, 42);
  CHECK(c.ok);
  CHECK(c.axioms[0].passed == 0);
}

TEST_CASE("axiom suites pass on the primary models") {
  std::vector<ModelDesc> models = {
      RQ,
      build_model(ExtDesc::zloc({2})),
      model_rlambda(LGroupDesc::pointwise({0})),
      model_rlambda(LGroupDesc::pointwise({0, 1})),
      model_lfl(2, 0),
      model_lfl(3, 1),
      model_salpha(true),
      model_salpha(false),
      build_model(ExtDesc::product({ExtDesc::zloc({2}), ExtDesc::zloc({3})})),
      build_model(ExtDesc::fptloc(3, {FpPoly::t(3), fp_poly_parse(3, "t+1")})),
  };
  for (const auto& m : models) {
    for (const char* name : {"crq_axioms", "derived_ids", "metric_axioms"}) {
      SuiteReport r = run_suite(m, suite_by_name(name), 120, 7);
      INFO(m.str(), " / ", name, ": ",
           r.axioms.empty() ? "" : r.axioms[0].first_counterexample);
      for (const auto& ax : r.axioms) {
        INFO(ax.name, " -> ", ax.first_counterexample);
        CHECK(ax.failed == 0);
      }
      CHECK(r.ok);
    }
    if (m.flags.median) CHECK(run_suite(m, suite_by_name("median_suite"), 80, 7).ok);
    if (m.flags.lff) CHECK(run_suite(m, suite_by_name("lff_suite"), 80, 7).ok);
    if (m.flags.locally_linear)
      CHECK(run_suite(m, suite_by_name("locally_linear"), 120, 7).ok);
  }
}

TEST_CASE("expected failures fire on the pinned witnesses") {
  SuiteReport med = run_suite(model_salpha(false), suite_by_name("salpha_median"), 5, 1);
  CHECK(med.ok);
  CHECK_FALSE(med.all_passed);
  CHECK(med.axioms[0].first_counterexample.find("witness") != std::string::npos);
  SuiteReport lff1 = run_suite(model_salpha(true), suite_by_name("salpha_lff"), 5, 1);
  CHECK(lff1.ok);
  CHECK_FALSE(lff1.all_passed);
  SuiteReport lff2 = run_suite(model_salpha(false), suite_by_name("salpha_lff"), 5, 1);
  CHECK(lff2.ok);
}

TEST_CASE("ball model isomorphism window") {
  SuiteReport r =
      run_suite(model_rlambda(LGroupDesc::pointwise({0})),
                suite_by_name("rlambda_ball_iso"), 1, 0);
  INFO(r.axioms[0].first_counterexample);
  CHECK(r.ok);
}

TEST_CASE("oracle median") {
  QsElem x = res(RQ, 1, 1, 8), y = res(RQ, 5, 1, 8), z = res(RQ, 3, 1, 4);
  CHECK(oracle_median(x, y, z) == res(RQ, 1, 1, 4));
  CHECK(oracle_median(x, x, y) == x);
  QsElem a = res(RQ, 0, 1, 2), b = res(RQ, 1, 1, 3), c = res(RQ, 0, 1, 5);
  CHECK(oracle_median(a, b, c) == res(RQ, 0, 1, 1));
  // fractional instance
  QsElem f1 = res(RQ, make_rat(1, 2), make_rat(3, 2));
  QsElem f2 = res(RQ, make_rat(5, 2), make_rat(9, 2));
  QsElem f3 = res(RQ, make_rat(1, 1), make_rat(2, 1));
  CHECK(oracle_median(f1, f2, f3) == met_median(f1, f2, f3));
}

TEST_CASE("median agrees with the oracle across seeded samples") {
  SuiteReport r = run_suite(RQ, suite_by_name("median_oracle"), 150, 99);
  INFO(r.axioms[0].first_counterexample);
  CHECK(r.ok);
  SuiteReport r2 = run_suite(build_model(ExtDesc::zloc({2, 5})),
                             suite_by_name("median_oracle"), 150, 99);
  CHECK(r2.ok);
}

TEST_CASE("divisor interval") {
  auto divs = divisor_interval(of_rat(Q, 12));
  CHECK(divs.size() == 6);  // divisors of 12
  CHECK_THROWS_AS((void)divisor_interval(of_rat(Q, 1, 2)), Error);
}
