#include "residua/lgroup.hpp"

#include <algorithm>

namespace residua {

std::string idx_str(const Idx& i) {
  if (i.block == 0) return std::to_string(i.pos);
  return std::to_string(i.block) + ":" + std::to_string(i.pos);
}

LGroupDesc LGroupDesc::trivial() { return LGroupDesc{}; }

LGroupDesc LGroupDesc::primes() {
  LGroupDesc g;
  g.kind = Kind::Primes;
  return g;
}

LGroupDesc LGroupDesc::pointwise(std::vector<long long> labels,
                                 std::vector<std::string> names) {
  LGroupDesc g;
  g.kind = Kind::Pointwise;
  g.labels = std::move(labels);
  g.names = std::move(names);
  return g;
}

LGroupDesc LGroupDesc::lex(int base_coords, std::vector<std::string> names) {
  LGroupDesc g;
  g.kind = Kind::Lex;
  g.lex_base = base_coords;
  g.names = std::move(names);
  return g;
}

LGroupDesc LGroupDesc::product(std::vector<LGroupDesc> parts) {
  for (const auto& p : parts)
    if (p.kind == Kind::Lex || p.kind == Kind::Product)
      fail(ErrKind::Unsupported, "product groups support pointwise-like parts only");
  LGroupDesc g;
  g.kind = Kind::Product;
  g.parts = std::move(parts);
  return g;
}

bool LGroupDesc::totally_ordered() const {
  switch (kind) {
    case Kind::Trivial: return true;
    case Kind::Primes: return false;
    case Kind::Pointwise: return labels.size() <= 1;
    case Kind::Lex: return lex_base == 0;
    case Kind::Product: {
      int rank = 0;
      for (const auto& p : parts) {
        if (p.kind == Kind::Primes) return false;
        rank += static_cast<int>(p.labels.size());
      }
      return rank <= 1;
    }
  }
  return false;
}

std::string LGroupDesc::str() const {
  switch (kind) {
    case Kind::Trivial: return "1";
    case Kind::Primes: return "Q+";
    case Kind::Pointwise: return "Z^" + std::to_string(labels.size());
    case Kind::Lex: return "lexZ^" + std::to_string(lex_base + 1);
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

namespace {

void check_same_group(const LElem& a, const LElem& b) {
  if (!(a.group == b.group)) fail(ErrKind::GroupMismatch, "l-group mismatch");
}

void check_index(const LGroupDesc& g, const Idx& i) {
  switch (g.kind) {
    case LGroupDesc::Kind::Trivial:
      fail(ErrKind::BadArgument, "trivial group has no coordinates");
    case LGroupDesc::Kind::Primes:
      if (i.block != 0 || i.pos < 2)
        fail(ErrKind::BadArgument, "bad prime index");
      return;
    case LGroupDesc::Kind::Pointwise:
      if (i.block != 0 ||
          std::find(g.labels.begin(), g.labels.end(), i.pos) == g.labels.end())
        fail(ErrKind::BadArgument, "coordinate not in group");
      return;
    case LGroupDesc::Kind::Lex:
      if (i.block != 0 || i.pos < 0 || i.pos > g.lex_base)
        fail(ErrKind::BadArgument, "coordinate not in lex group");
      return;
    case LGroupDesc::Kind::Product: {
      if (i.block < 0 || i.block >= static_cast<int>(g.parts.size()))
        fail(ErrKind::BadArgument, "block out of range");
      Idx inner{0, i.pos};
      check_index(g.parts[i.block], inner);
      return;
    }
  }
}

// Entrywise combine over the union of supports, dropping zeros.
template <typename F>
LElem zip(const LElem& a, const LElem& b, F f) {
  LElem r;
  r.group = a.group;
  auto ia = a.e.begin(), ib = b.e.begin();
  while (ia != a.e.end() || ib != b.e.end()) {
    Idx k;
    long long va = 0, vb = 0;
    if (ib == b.e.end() || (ia != a.e.end() && ia->first < ib->first)) {
      k = ia->first; va = ia->second; ++ia;
    } else if (ia == a.e.end() || ib->first < ia->first) {
      k = ib->first; vb = ib->second; ++ib;
    } else {
      k = ia->first; va = ia->second; vb = ib->second; ++ia; ++ib;
    }
    long long v = f(va, vb);
    if (v != 0) r.e[k] = v;
  }
  return r;
}

long long lex_top(const LElem& a) {
  return a.at(Idx{0, a.group.lex_base});
}

// Meet/join for the lex order: the strictly smaller top wins; on equal tops
// the base coordinates combine componentwise.
LElem lex_meet(const LElem& a, const LElem& b, bool join) {
  long long ta = lex_top(a), tb = lex_top(b);
  if (ta != tb) {
    bool a_less = ta < tb;
    if (join) a_less = !a_less;
    return a_less ? a : b;
  }
  return zip(a, b, [&](long long x, long long y) {
    return join ? std::max(x, y) : std::min(x, y);
  });
}

}  // namespace

LElem lelem(const LGroupDesc& g, std::map<Idx, long long> exps) {
  LElem r;
  r.group = g;
  for (auto& [k, v] : exps) {
    if (v == 0) continue;
    check_index(g, k);
    r.e[k] = v;
  }
  return r;
}

LElem l_eps(const LGroupDesc& g) {
  LElem r;
  r.group = g;
  return r;
}

LElem l_mul(const LElem& a, const LElem& b) {
  check_same_group(a, b);
  return zip(a, b, [](long long x, long long y) { return x + y; });
}

LElem l_inv(const LElem& a) {
  LElem r;
  r.group = a.group;
  for (const auto& [k, v] : a.e) r.e[k] = -v;
  return r;
}

LElem l_div(const LElem& a, const LElem& b) { return l_mul(a, l_inv(b)); }

LElem l_meet(const LElem& a, const LElem& b) {
  check_same_group(a, b);
  if (a.group.kind == LGroupDesc::Kind::Lex) return lex_meet(a, b, false);
  return zip(a, b, [](long long x, long long y) { return std::min(x, y); });
}

LElem l_join(const LElem& a, const LElem& b) {
  check_same_group(a, b);
  if (a.group.kind == LGroupDesc::Kind::Lex) return lex_meet(a, b, true);
  return zip(a, b, [](long long x, long long y) { return std::max(x, y); });
}

bool l_leq(const LElem& a, const LElem& b) { return l_meet(a, b) == a; }

bool l_nonneg(const LElem& a) {
  if (a.group.kind == LGroupDesc::Kind::Lex) {
    long long t = lex_top(a);
    if (t != 0) return t > 0;
  }
  for (const auto& [k, v] : a.e) {
    if (a.group.kind == LGroupDesc::Kind::Lex && k.pos == a.group.lex_base)
      continue;
    if (v < 0) return false;
  }
  return true;
}

LParts l_parts(const LElem& a) {
  LParts p;
  p.plus = l_join(a, l_eps(a.group));
  p.minus = l_join(l_inv(a), l_eps(a.group));
  p.abs = l_mul(p.plus, p.minus);
  return p;
}

LElem l_pow(const LElem& a, long long n) {
  LElem r;
  r.group = a.group;
  if (n == 0) return r;
  for (const auto& [k, v] : a.e) r.e[k] = v * n;
  return r;
}

bool cone_member(const ConvexConeDesc& c, const LElem& a) {
  if (!(c.group == a.group)) fail(ErrKind::GroupMismatch, "cone group mismatch");
  if (!l_nonneg(a)) return false;
  if (c.full) return true;
  for (const auto& [k, v] : a.e)
    if (!c.coords.contains(k)) return false;
  return true;
}

bool cone_group_member(const ConvexConeDesc& c, const LElem& a) {
  return cone_member(c, l_parts(a).abs);
}

Rat lelem_rat(const LElem& a) {
  const auto k = a.group.kind;
  if (k != LGroupDesc::Kind::Primes && k != LGroupDesc::Kind::Pointwise)
    fail(ErrKind::Unsupported, "lelem_rat: group is not prime-indexed");
  Rat r(1);
  for (const auto& [i, v] : a.e) {
    Rat p(Int(static_cast<long>(i.pos)));
    for (long long j = 0; j < (v > 0 ? v : -v); ++j) r *= (v > 0) ? p : 1 / p;
  }
  return r;
}

std::string lelem_str(const LElem& a) {
  switch (a.group.kind) {
    case LGroupDesc::Kind::Trivial:
      return "1";
    case LGroupDesc::Kind::Primes:
      return rat_str(lelem_rat(a));
    case LGroupDesc::Kind::Pointwise: {
      // rational form when labels are primes, else coordinate tuple
      bool primey = !a.group.labels.empty();
      for (auto l : a.group.labels) primey = primey && l >= 2;
      if (primey && a.group.names.empty()) return rat_str(lelem_rat(a));
      std::string s = "(";
      for (size_t i = 0; i < a.group.labels.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.at(Idx{0, a.group.labels[i]}));
      }
      return s + ")";
    }
    case LGroupDesc::Kind::Lex: {
      std::string s = "(";
      for (int i = 0; i < a.group.lex_base; ++i) {
        if (i) s += ",";
        s += std::to_string(a.at(Idx{0, i}));
      }
      s += ";" + std::to_string(lex_top(a)) + ")";
      return s;
    }
    case LGroupDesc::Kind::Product: {
      std::string s = "(";
      for (size_t b = 0; b < a.group.parts.size(); ++b) {
        if (b) s += "|";
        LElem part;
        part.group = a.group.parts[b];
        for (const auto& [k, v] : a.e)
          if (k.block == static_cast<int>(b)) part.e[Idx{0, k.pos}] = v;
        s += lelem_str(part);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace residua
