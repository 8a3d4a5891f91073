#pragma once

#include <optional>

#include "residua/lgroup.hpp"

namespace residua {

// Entry of the l-monoid extension: an integer exponent or infinity.
struct ExtInt {
  bool inf = false;
  long long v = 0;

  static ExtInt of(long long x) { return ExtInt{false, x}; }
  static ExtInt infinity() { return ExtInt{true, 0}; }
  bool operator==(const ExtInt&) const = default;
};

ExtInt ei_add(ExtInt a, ExtInt b);   // infinity absorbing
ExtInt ei_min(ExtInt a, ExtInt b);
ExtInt ei_max(ExtInt a, ExtInt b);

// Element of the commutative l-monoid extension of an Abelian l-group:
// exponent map into Z u {inf} stored as per-block defaults (0 or inf) plus a
// finite exception map. Lambda embeds with all defaults 0; omega is all
// defaults inf with no exceptions. Finitely many negative entries always.
struct LMonElem {
  LGroupDesc group;
  std::vector<bool> block_inf;   // per-block default: false -> 0, true -> inf
  std::map<Idx, ExtInt> exc;     // entries differing from their block default

  bool default_inf(int block) const { return block_inf[block]; }
  ExtInt at(const Idx& i) const {
    auto it = exc.find(i);
    if (it != exc.end()) return it->second;
    return block_inf[i.block] ? ExtInt::infinity() : ExtInt::of(0);
  }
  bool operator==(const LMonElem&) const = default;
};

LMonElem lmon_eps(const LGroupDesc& g);
LMonElem lmon_omega(const LGroupDesc& g);
LMonElem lmon_embed(const LElem& a);  // iota
LMonElem lmon_make(const LGroupDesc& g, std::vector<bool> block_inf,
                   std::map<Idx, ExtInt> entries);

bool lmon_is_omega(const LMonElem& f);
// f lies in the embedded copy of Lambda (all finite, defaults 0).
std::optional<LElem> lmon_as_lelem(const LMonElem& f);

LMonElem lmon_mul(const LMonElem& f, const LMonElem& g);
LMonElem lmon_meet(const LMonElem& f, const LMonElem& g);
LMonElem lmon_join(const LMonElem& f, const LMonElem& g);
bool lmon_leq(const LMonElem& f, const LMonElem& g);

// Section evaluation phi(a) = phi /\ a for a >= eps; lands in Lambda.
LElem lmon_eval(const LMonElem& f, const LElem& a);

// Unique representation f = plus * minus^{-1} with plus >= eps, minus in
// Lambda_+, plus /\ minus = eps.
struct LMonParts {
  LMonElem plus;
  LElem minus;
};
LMonParts lmon_decompose(const LMonElem& f);

bool lmon_idempotent(const LMonElem& f);
LMonElem lmon_complement(const LMonElem& t);

// Idempotent action on Lambda: keep coordinates where t is inf.
LElem theta_action(const LMonElem& t, const LElem& g);

// Quasi-inverse in the regular submonoid of elements g*t, g in Ker(theta~):
// (g*t)^{-1} = g^{-1}*t, returned as an LMonElem.
LMonElem bar_elem(const LElem& g, const LMonElem& t);
LMonElem bar_qinv(const LElem& g, const LMonElem& t);

// Totally ordered coordinate projection: entry inf -> omega, n -> n.
struct CoordProj {
  bool omega = false;
  long long v = 0;
  bool operator==(const CoordProj&) const = default;
};
CoordProj lmon_coord(const LMonElem& f, const Idx& i);

std::string lmon_str(const LMonElem& f);

}  // namespace residua
