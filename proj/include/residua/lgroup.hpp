#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "residua/numeric.hpp"

namespace residua {

// Coordinate of an exponent vector. block = 0 except inside direct products,
// where it selects the component. pos is the coordinate label within the
// block (the prime itself for prime-indexed groups).
struct Idx {
  int block = 0;
  long long pos = 0;
  auto operator<=>(const Idx&) const = default;
};

std::string idx_str(const Idx& i);

// Shape of an Abelian l-group, written additively as integer exponent
// vectors over a basis index set.
//
//   Trivial    only the neutral element
//   Primes     free over all primes, componentwise order (Q_{>0})
//   Pointwise  free over a finite labelled set, componentwise order
//   Lex        lex_base pointwise coordinates (pos 0..lex_base-1) plus one
//              top coordinate (pos = lex_base) which decides comparisons
//              first; within equal top, componentwise
//   Product    direct product of pointwise-like parts, block-indexed
struct LGroupDesc {
  enum class Kind { Trivial, Primes, Pointwise, Lex, Product };

  Kind kind = Kind::Trivial;
  std::vector<long long> labels;      // Pointwise coordinate labels
  std::vector<std::string> names;     // optional coordinate display names
  int lex_base = 0;                   // Lex only
  std::vector<LGroupDesc> parts;      // Product only

  bool operator==(const LGroupDesc&) const = default;

  static LGroupDesc trivial();
  static LGroupDesc primes();
  static LGroupDesc pointwise(std::vector<long long> labels,
                              std::vector<std::string> names = {});
  static LGroupDesc lex(int base_coords, std::vector<std::string> names = {});
  static LGroupDesc product(std::vector<LGroupDesc> parts);

  bool totally_ordered() const;
  int block_count() const {
    return kind == Kind::Product ? static_cast<int>(parts.size()) : 1;
  }
  std::string str() const;
};

// Element of an Abelian l-group: finitely supported exponent vector.
// Canonical: no zero entries stored; equality is map equality.
struct LElem {
  LGroupDesc group;
  std::map<Idx, long long> e;

  bool is_eps() const { return e.empty(); }
  long long at(const Idx& i) const {
    auto it = e.find(i);
    return it == e.end() ? 0 : it->second;
  }
  bool operator==(const LElem&) const = default;
};

LElem lelem(const LGroupDesc& g, std::map<Idx, long long> exps);
LElem l_eps(const LGroupDesc& g);

// Group operation (paper's multiplication) is exponent addition.
LElem l_mul(const LElem& a, const LElem& b);
LElem l_inv(const LElem& a);
LElem l_div(const LElem& a, const LElem& b);
LElem l_meet(const LElem& a, const LElem& b);
LElem l_join(const LElem& a, const LElem& b);
bool l_leq(const LElem& a, const LElem& b);
bool l_nonneg(const LElem& a);

struct LParts {
  LElem plus;
  LElem minus;
  LElem abs;
};
LParts l_parts(const LElem& a);

LElem l_pow(const LElem& a, long long n);

// Convex submonoid of Lambda_+ described by a coordinate subset (or all of
// Lambda_+). Membership: a >= eps with support inside the subset. For lex
// groups a subset of base coordinates describes a lower block segment.
struct ConvexConeDesc {
  LGroupDesc group;
  bool full = false;
  std::set<Idx> coords;
};

bool cone_member(const ConvexConeDesc& c, const LElem& a);
// Membership of a in the group closure G of the cone: |a| in the cone.
bool cone_group_member(const ConvexConeDesc& c, const LElem& a);

std::string lelem_str(const LElem& a);
Rat lelem_rat(const LElem& a);  // Primes / prime-labelled groups only

}  // namespace residua
