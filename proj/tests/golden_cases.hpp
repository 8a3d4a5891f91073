#pragma once

#include <string>
#include <vector>

namespace residua::testing {

struct GoldenCase {
  std::string args;      // appended to the binary path
  std::string expected;  // exact stdout bytes
  int exit_code;
};

// Pinned CLI invocations; outputs are byte-exact.
inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"eval --model \"res:Z⊂Q\" \"join(1 mod 4, 2 mod 9)\"",
       "29 mod 36\n", 0},
      {"eval --model \"res:Z⊂Q\" \"join(1 mod 4, 3 mod 4)\"",
       "error: not incident\n", 2},
      {"eval --model \"res:Z⊂Q\" \"1 mod\"",
       "error: expected integer at offset 5\n", 1},
      {"eval --model \"res:Z⊂Q\" \"inv(2 mod 8)\"", "1/2 mod 2\n", 0},
      {"eval --model \"res:Z⊂Q\" --json \"inv(2 mod 8)\"",
       "{\"eplus\":\"2\",\"result\":\"1/2 mod 2\",\"v\":\"1/2\"}\n", 0},
      {"dist --model \"res:Z⊂Q\" \"1 mod 4\" \"3 mod 8\"", "8\n", 0},
      {"median --model \"res:Z⊂Q\" \"1 mod 8\" \"5 mod 8\" \"3 mod 4\"",
       "1 mod 4\n", 0},
      {"eval --model \"res:Z⊂Q\" \"d(5 mod 12, 0 mod 1)\"", "12\n", 0},
      {"eval --model \"res:Z⊂Q\" \"meet(1 mod 4, 3 mod 8)\"", "1 mod 2\n", 0},
      {"eval --model \"res:Z⊂Q\" \"one(6)\"", "1 mod 6\n", 0},
      {"eval --model \"res:Z⊂Q\" \"eplus(2 mod 8)\"", "8\n", 0},
      {"eval --model \"res:Z⊂Q\" \"v(2 mod 8) \"", "2\n", 0},
      {"eval --model rlambda:Z \"[(0);(2)] + [(0);(3)]\"", "[(2);(0)]\n", 0},
      {"eval --model rlambda:Z \"inv([(3);(0)])\"", "[(-3);(0)]\n", 0},
      {"eval --model lfl:3,1 \"(0,1) + (0,2)\"", "g^1\n", 0},
      {"eval --model \"res:prod(Zloc{2},Zloc{3})\" "
       "\"(1 mod 4 | 2 mod 3) + (3 mod 2 | 1 mod 9)\"",
       "(0 mod 2 | 0 mod 3)\n", 0},
      {"median --model salpha:nonmedian \"[(0,0,0,0);(-1,0,0,1)]\" "
       "\"[(0,0,0,0);(0,-1,0,1)]\" \"[(0,0,0,0);(0,0,-1,1)]\"",
       "error: median leaves S_alpha: ambient median [(0,0,0,0);(0,0,0,1)]\n",
       2},
      {"check --model \"res:Zloc{2}\" --suite locally_linear --trials 50 --seed 3",
       "axiom median-dichotomy [Cor 4.10(5)]: passed 50 failed 0\n"
       "axiom comparability [Cor 4.10(4)]: passed 50 failed 0\n"
       "outcome: PASS (expected PASS)\n",
       0},
      {"ring --ext \"Z⊂Q\" --level 6",
       "check unit is 1 mod alpha: ok\n"
       "check T_alpha tables match B/alpha arithmetic: ok\n"
       "check every slice element generator-backed and monotone: ok\n"
       "check slice canonical forms distinct: ok\n"
       "pass: true\n",
       0},
      {"ring --ext \"Z⊂Q\" --level 12 --op eta 2^inf", "4 mod 12\n", 0},
  };
  return cases;
}

}  // namespace residua::testing
