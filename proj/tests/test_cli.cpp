#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>

#include "golden_cases.hpp"
#include "residua/parser.hpp"

#ifndef RESIDUA_BIN
#error "RESIDUA_BIN must point at the CLI binary"
#endif

using namespace residua;

namespace {

std::pair<std::string, int> run_cli(const std::string& args) {
  std::string cmd = std::string(RESIDUA_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {out, WEXITSTATUS(status)};
}

}  // namespace

TEST_CASE("golden invocations reproduce byte-identical output") {
  const auto& cases = residua::testing::golden_cases();
  CHECK(cases.size() == 20);
  for (const auto& c : cases) {
    auto [out, code] = run_cli(c.args);
    INFO("invocation: ", c.args);
    CHECK(out == c.expected);
    CHECK(code == c.exit_code);
  }
}

TEST_CASE("parse/print round trip on canonical forms") {
  ModelDesc rq = parse_model("res:Z⊂Q");
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    // random canonical residues through the printer and back
    long long num = rng.range(-40, 40), den = rng.range(1, 10);
    long long mn = rng.range(1, 60), md = rng.range(1, 8);
    QsElem x = make_residue(rq, FieldElem(make_rat(num, den)),
                            [&] {
                              LElem r = l_eps(rq.group);
                              for (const auto& [p, e] :
                                   factor_int(to_int(mn), 1000))
                                r.e[Idx{0, p}] += e;
                              for (const auto& [p, e] :
                                   factor_int(to_int(md), 1000)) {
                                r.e[Idx{0, p}] -= e;
                                if (!r.e[Idx{0, p}]) r.e.erase(Idx{0, p});
                              }
                              return r;
                            }());
    Value v = eval_expr(parse_expr(qs_str(x), rq), rq);
    CHECK(v.elem() == x);
  }
  ModelDesc rl = parse_model("rlambda:Z^2");
  for (int t = 0; t < 100; ++t) {
    LElem g = l_eps(rl.group), d = l_eps(rl.group);
    for (long long lab : {0LL, 1LL}) {
      long long e = rng.range(-3, 3);
      if (!e) continue;
      if (rng.coin())
        g.e[Idx{0, lab}] = e;
      else
        d.e[Idx{0, lab}] = std::abs(e);
    }
    QsElem x = make_rpair(rl, g, d);
    CHECK(eval_expr(parse_expr(qs_str(x), rl), rl).elem() == x);
  }
  ModelDesc lf = parse_model("lfl:5,2");
  for (int t = 0; t < 100; ++t) {
    QsElem x = rng.coin() ? make_lfl_lattice(lf, rng.range(-4, 4))
                          : make_lfl_group(lf, rng.range(-3, 3), rng.range(1, 4));
    CHECK(eval_expr(parse_expr(qs_str(x), lf), lf).elem() == x);
  }
}

TEST_CASE("expression grammar") {
  ModelDesc rq = parse_model("res:ZinQ");
  // left associativity and precedence
  Value v = eval_expr(parse_expr("1 mod 4 + 3 mod 6 * 1 mod 6", rq), rq);
  QsElem a = eval_expr(parse_expr("1 mod 4", rq), rq).elem();
  QsElem b = eval_expr(parse_expr("3 mod 6", rq), rq).elem();
  QsElem c = eval_expr(parse_expr("1 mod 6", rq), rq).elem();
  CHECK(v.elem() == qs_add(a, qs_mul(b, c)));
  // unary minus binds to the literal
  CHECK(eval_expr(parse_expr("-1 mod 4", rq), rq).elem() == qs_neg(a));
  // bad arity
  CHECK_THROWS_AS((void)parse_expr("d(1 mod 4)", rq), Error);
  CHECK_THROWS_AS((void)parse_expr("join(1 mod 4, 2 mod 9, 1 mod 2)", rq), Error);
  // unknown token
  CHECK_THROWS_AS((void)parse_expr("frob(1 mod 4)", rq), Error);
  // trailing input
  CHECK_THROWS_AS((void)parse_expr("1 mod 4 stuff", rq), Error);
}

TEST_CASE("extension and model descriptors") {
  CHECK(parse_ext("Z⊂Q") == ExtDesc::zinq());
  CHECK(parse_ext("Zloc{2,3}") == ExtDesc::zloc({2, 3}));
  CHECK(parse_ext("prod(Z⊂Q, Zloc{2})") ==
        ExtDesc::product({ExtDesc::zinq(), ExtDesc::zloc({2})}));
  ExtDesc f3 = parse_ext("F3[t]loc{t,t+1}");
  CHECK(f3.kind == ExtDesc::Kind::FpTlocS);
  CHECK(f3.s_polys.size() == 2);
  CHECK_THROWS_AS((void)parse_ext("Qloc{2}"), Error);
  CHECK(parse_model("salpha:nonlff").salpha_median);
  CHECK_THROWS_AS((void)parse_model("res"), Error);
}

TEST_CASE("idempotent literals") {
  LGroupDesc q = LGroupDesc::primes();
  CHECK(lmon_is_omega(parse_idempotent(q, "omega")));
  CHECK(parse_idempotent(q, "eps") == lmon_eps(q));
  LMonElem t = parse_idempotent(q, "2^inf*3^inf");
  CHECK(t.at(Idx{0, 2}).inf);
  CHECK(t.at(Idx{0, 3}).inf);
  CHECK(parse_idempotent(q, "default=inf*2^0") == lmon_complement(
            parse_idempotent(q, "2^inf")));
  CHECK_THROWS_AS((void)parse_idempotent(q, "2^3"), Error);
}

TEST_CASE("level_of_int") {
  ExtDesc pr = ExtDesc::product({ExtDesc::zloc({2}), ExtDesc::zloc({3})});
  LElem lvl = level_of_int(pr, 12);
  CHECK(lvl.at(Idx{0, 2}) == 2);
  CHECK(lvl.at(Idx{1, 3}) == 1);
  CHECK_THROWS_AS((void)level_of_int(pr, 0), Error);
}

TEST_CASE("field element literals") {
  CHECK(parse_field_elem(ExtDesc::zinq(), "-4/3") == FieldElem(make_rat(-4, 3)));
  ExtDesc f3 = parse_ext("F3[t]loc{t}");
  FieldElem x = parse_field_elem(f3, "(t^2+1)/(t)");
  CHECK(x.fq().num == fp_poly_parse(3, "t^2+1"));
  CHECK(x.fq().den == FpPoly::t(3));
  ExtDesc pr = ExtDesc::product({ExtDesc::zinq(), ExtDesc::zinq()});
  FieldElem tup = parse_field_elem(pr, "(1/2 | 3)");
  CHECK(tup.tuple()[0] == FieldElem(make_rat(1, 2)));
}
