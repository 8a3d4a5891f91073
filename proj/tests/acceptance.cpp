// Acceptance suite: runs every criterion with exact (zero-tolerance)
// arithmetic and prints one pass/fail line per criterion.
#include <array>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "golden_cases.hpp"
#include "residua/checker.hpp"
#include "residua/parser.hpp"
#include "residua/ringbuild.hpp"

using namespace residua;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool pass,
            const std::string& detail = "") {
  std::cout << "criterion " << num << " [" << name << "]: "
            << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

std::vector<ModelDesc> primary_models() {
  return {build_model(ExtDesc::zinq()),
          build_model(ExtDesc::zloc({2})),
          model_rlambda(LGroupDesc::pointwise({0})),
          model_rlambda(LGroupDesc::pointwise({0, 1})),
          model_lfl(2, 0),
          model_lfl(3, 1)};
}

bool suite_clean(const ModelDesc& m, const std::string& suite, long long trials,
                 uint64_t seed, std::string& why) {
  SuiteReport r = run_suite(m, suite_by_name(suite), trials, seed);
  for (const auto& a : r.axioms)
    if (a.failed) {
      why = m.str() + " / " + a.name + ": " + a.first_counterexample;
      return false;
    }
  return r.ok;
}

// criterion 1: Def 2.3 axioms on >= 10^4 seeded samples per model
void criterion_1() {
  bool pass = true;
  std::string why;
  for (const auto& m : primary_models())
    pass = pass && suite_clean(m, "crq_axioms", 1200, 20260810, why);
  report(1, "Def 2.3 axiom suites, 6 models, >=10^4 samples each", pass, why);
}

// criterion 2: derived identity suites on the same samples
void criterion_2() {
  bool pass = true;
  std::string why;
  for (const auto& m : primary_models())
    pass = pass && suite_clean(m, "derived_ids", 1300, 20260810, why);
  report(2, "derived identities (2.6(4), 2.6(2), 3.4(1), 3.5(4), 3.6(5), 4.4(2), 4.14(2))",
         pass, why);
}

// criterion 3: RLambda(Z) against the F2 power-series ball model
void criterion_3() {
  std::string why;
  bool pass = suite_clean(model_rlambda(LGroupDesc::pointwise({0})),
                          "rlambda_ball_iso", 1, 0, why);
  report(3, "RLambda(Z) = F2 power-series ball model on |gamma|<=6, delta<=6",
         pass, why);
}

// criterion 4: median equals the brute-force oracle on >= 10^3 triples
void criterion_4() {
  std::string why;
  bool pass = suite_clean(build_model(ExtDesc::zinq()), "median_oracle", 1000,
                          424242, why);
  report(4, "median vs enumeration oracle, 10^3 residue triples", pass, why);
}

// criterion 5: the paper's counterexamples, bit for bit
void criterion_5() {
  bool pass = true;
  std::string why;

  ModelDesc plain = model_salpha(false);
  SuiteReport med = run_suite(plain, suite_by_name("salpha_median"), 1, 0);
  pass = pass && med.ok && !med.all_passed;

  // ambient median is exactly (eps, alpha)
  ModelDesc amb = model_rlambda(plain.group);
  auto wit = [&](const ModelDesc& m, int i) {
    return make_rpair(m, l_eps(m.group),
                      lelem(m.group, {{Idx{0, i}, -1},
                                      {Idx{0, m.group.lex_base}, 1}}));
  };
  QsElem am = met_median(wit(amb, 0), wit(amb, 1), wit(amb, 2));
  pass = pass && am == make_rpair(amb, l_eps(amb.group), plain.alpha);
  if (!pass) why = "ambient median is " + qs_str(am);

  ModelDesc lffm = model_salpha(true);
  SuiteReport lff1 = run_suite(lffm, suite_by_name("salpha_lff"), 1, 0);
  pass = pass && lff1.ok && !lff1.all_passed;
  ModelDesc amb3 = model_rlambda(lffm.group);
  auto aj = qs_join(wit(amb3, 0), wit(amb3, 1));
  pass = pass && aj.has_value() &&
         *aj == make_rpair(amb3, l_eps(amb3.group), lffm.alpha);
  if (!pass && why.empty()) why = "ambient join mismatch";

  report(5, "Remark 5.3(6) and 5.6(5) witnesses reproduce (eps, alpha)", pass, why);
}

// criterion 6: locally linear dichotomies on 10^4 triples per prime
void criterion_6() {
  bool pass = true;
  std::string why;
  for (long long p : {2LL, 3LL, 5LL})
    pass = pass &&
           suite_clean(build_model(ExtDesc::zloc({p})), "locally_linear", 10000,
                       1234, why);
  report(6, "Cor 4.10(4)(5) for Zloc{2},{3},{5} on 10^4 triples", pass, why);
}

// criterion 7: T_{nZ} is Z/n by full tables for every n <= 200
void criterion_7() {
  ExtDesc ext = ExtDesc::zinq();
  ModelDesc m = build_model(ext);
  bool pass = true;
  std::string why;
  for (long long n = 1; n <= 200 && pass; ++n) {
    LElem lvl = level_of_int(ext, n);
    std::vector<QsElem> elems = trunc_ring_elements(m, lvl);
    pass = pass && static_cast<long long>(elems.size()) == n;
    pass = pass && trunc_one(m, lvl) == elems[1 % n];
    for (long long i = 0; i < n && pass; ++i)
      for (long long j = 0; j < n && pass; ++j) {
        pass = pass && trunc_ring_op(lvl, TruncOp::Add, elems[i], elems[j]) ==
                           elems[(i + j) % n];
        pass = pass && trunc_ring_op(lvl, TruncOp::Mul, elems[i], elems[j]) ==
                           elems[(i * j) % n];
      }
    if (!pass) why = "n = " + std::to_string(n);
  }
  report(7, "T_nZ unital-ring-isomorphic to Z/n, full tables, n <= 200", pass, why);
}

// criterion 8: eta over every idempotent on the prime factors of n
void criterion_8() {
  ExtDesc ext = ExtDesc::zinq();
  ModelDesc m = build_model(ext);
  bool pass = true;
  std::string why;
  for (long long n : {12LL, 30LL, 210LL}) {
    LElem lvl = level_of_int(ext, n);
    std::vector<long long> primes;
    for (const auto& [k, e] : lvl.e) primes.push_back(k.pos);
    size_t count = 1u << primes.size();
    std::vector<LMonElem> thetas;
    for (size_t mask = 0; mask < count; ++mask) {
      std::map<Idx, ExtInt> entries;
      for (size_t i = 0; i < primes.size(); ++i)
        if (mask & (1u << i)) entries[Idx{0, primes[i]}] = ExtInt::infinity();
      thetas.push_back(lmon_make(m.group, {false}, std::move(entries)));
    }
    auto ring_mul = [&](const QsElem& a, const QsElem& b) {
      return trunc_ring_op(lvl, TruncOp::Mul, a, b);
    };
    for (const auto& th : thetas) {
      QsElem e = eta(m, th, lvl);
      pass = pass && ring_mul(e, e) == e;                  // idempotent of T_n
      pass = pass && qs_v(e) == lmon_eval(th, lvl);        // w(eta(th))(n) = th(n)
      QsElem c = qs_sub(trunc_one(m, lvl), e);
      pass = pass && eta(m, lmon_complement(th), lvl) == c;  // complements reverse
    }
    for (const auto& t1 : thetas)
      for (const auto& t2 : thetas) {
        QsElem e1 = eta(m, t1, lvl), e2 = eta(m, t2, lvl);
        // products reverse: eta(t1 v t2) = eta(t1) * eta(t2)
        pass = pass && eta(m, lmon_mul(t1, t2), lvl) == ring_mul(e1, e2);
        // meets go to boolean joins in the ring
        QsElem bj = qs_sub(qs_add(e1, e2), ring_mul(e1, e2));
        pass = pass && eta(m, lmon_meet(t1, t2), lvl) == bj;
      }
    if (!pass && why.empty()) why = "n = " + std::to_string(n);
  }
  report(8, "eta anti-isomorphism exhaustive over 2^k idempotents, n = 12, 30, 210",
         pass, why);
}

// criterion 9: Prufer criterion and P2 witnesses
void criterion_9() {
  ExtDesc ext = ExtDesc::zinq();
  ModelDesc m = build_model(ext);
  bool pass = true;
  std::string why;
  Rng rng(987);
  for (int t = 0; t < 1000 && pass; ++t) {
    Rat y = make_rat(rng.range(-1000, 1000), rng.range(1, 1000));
    PruferWitness w = prufer_witness(b_from_field(m, FieldElem(y)));
    if (!w.ok()) {
      pass = false;
      why = "witness failed for phi_" + rat_str(y);
    }
  }
  for (int t = 0; t < 1000 && pass; ++t) {
    Rat x = make_rat(rng.range(-1000, 1000), rng.range(1, 1000));
    FieldElem xe{x};
    FieldElem yw = p2_witness(ext, xe);
    auto in_a = [&](const FieldElem& v) {
      return lmon_decompose(pm_valuation(ext, v)).minus.is_eps();
    };
    FieldElem xy = fe_mul(ext, xe, yw);
    if (!in_a(yw) || !in_a(xy) ||
        !in_a(fe_mul(ext, xe, fe_sub(ext, fe_one(ext), xy)))) {
      pass = false;
      why = "P2 failed for x = " + rat_str(x);
    }
  }
  report(9, "prufer_witness and P2 memberships on 10^3 samples of height <= 10^3",
         pass, why);
}

// criterion 10: round-trip at truncation levels 2..100
void criterion_10() {
  bool pass = true;
  std::string why;
  for (const ExtDesc& ext :
       {ExtDesc::zinq(), ExtDesc::product({ExtDesc::zloc({2}), ExtDesc::zloc({3})})}) {
    std::vector<LElem> levels;
    for (long long n = 2; n <= 100; ++n) levels.push_back(level_of_int(ext, n));
    RoundtripReport r = roundtrip_check(ext, levels);
    if (!r.pass) {
      pass = false;
      for (const auto& lr : r.levels)
        if (!lr.pass) why = ext.str() + " level " + lelem_str(lr.level);
    }
  }
  report(10, "roundtrip_check exact at levels 2..100 for ZinQ and prod(Zloc2, Zloc3)",
         pass, why);
}

// criterion 11: subdirect separation and projection homomorphisms
void criterion_11() {
  ModelDesc m = build_model(ExtDesc::zinq());
  bool pass = true;
  std::string why;
  Rng rng(555);
  int done = 0;
  while (done < 1000 && pass) {
    QsElem x = sample_elem(m, rng), y = sample_elem(m, rng);
    if (x == y) continue;
    ++done;
    bool separated = false;
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
      Idx i{0, p};
      auto px = project_prime(x, i), py = project_prime(y, i);
      if (!(px.image == py.image)) separated = true;
    }
    if (!separated) {
      pass = false;
      why = "no projection separates " + qs_str(x) + " and " + qs_str(y);
      break;
    }
    long long p = std::array<long long, 4>{2, 3, 5, 7}[rng.below(4)];
    Idx i{0, p};
    auto pr = [&](const QsElem& v) { return project_prime(v, i).image; };
    bool hom = pr(qs_add(x, y)) == qs_add(pr(x), pr(y)) &&
               pr(qs_mul(x, y)) == qs_mul(pr(x), pr(y)) &&
               pr(qs_neg(x)) == qs_neg(pr(x)) &&
               pr(qs_qinv(x)) == qs_qinv(pr(x)) &&
               pr(qs_meet(x, y)) == qs_meet(pr(x), pr(y));
    if (!hom) {
      pass = false;
      why = "projection at " + std::to_string(p) + " not a homomorphism on " +
            qs_str(x) + ", " + qs_str(y);
    }
  }
  report(11, "subdirect separation and 5-operation projections, 10^3 pairs", pass, why);
}

// criterion 12: pinned CLI invocations
void criterion_12() {
#ifdef RESIDUA_BIN
  bool pass = true;
  std::string why;
  const auto& cases = residua::testing::golden_cases();
  pass = cases.size() == 20;
  for (const auto& c : cases) {
    std::string cmd = std::string(RESIDUA_BIN) + " " + c.args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      pass = false;
      break;
    }
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
      out.append(buf.data(), n);
    int code = WEXITSTATUS(pclose(pipe));
    if (out != c.expected || code != c.exit_code) {
      pass = false;
      why = c.args;
      break;
    }
  }
  report(12, "20 golden CLI invocations, byte-identical output and exit codes",
         pass, why);
#else
  report(12, "20 golden CLI invocations", false, "RESIDUA_BIN not configured");
#endif
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: FAILURES: " +
                                      std::to_string(g_failures))
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
