#pragma once

#include <vector>

#include "residua/lmonoid.hpp"
#include "residua/numeric.hpp"
#include "residua/qsring.hpp"

namespace residua::testing {

// Exponent vector of a positive rational over the prime-indexed group.
inline LElem of_rat(const LGroupDesc& g, const Rat& x) {
  LElem r;
  r.group = g;
  if (x == 1) return r;
  for (const auto& [p, e] : factor_int(rat_num(x), 100000)) r.e[Idx{0, p}] += e;
  for (const auto& [p, e] : factor_int(rat_den(x), 100000)) {
    r.e[Idx{0, p}] -= e;
    if (r.e[Idx{0, p}] == 0) r.e.erase(Idx{0, p});
  }
  return r;
}

inline LElem of_rat(const LGroupDesc& g, long num, long den = 1) {
  return of_rat(g, make_rat(num, den));
}

inline QsElem res(const ModelDesc& m, long num, long den, long mnum, long mden = 1) {
  return make_residue(m, FieldElem(make_rat(num, den)),
                      of_rat(m.group, make_rat(mnum, mden)));
}

inline QsElem res(const ModelDesc& m, const Rat& rep, const Rat& mod) {
  return make_residue(m, FieldElem(rep), of_rat(m.group, mod));
}

}  // namespace residua::testing
