#include "residua/lmonoid.hpp"

#include <algorithm>

namespace residua {

ExtInt ei_add(ExtInt a, ExtInt b) {
  if (a.inf || b.inf) return ExtInt::infinity();
  return ExtInt::of(a.v + b.v);
}

ExtInt ei_min(ExtInt a, ExtInt b) {
  if (a.inf) return b;
  if (b.inf) return a;
  return ExtInt::of(std::min(a.v, b.v));
}

ExtInt ei_max(ExtInt a, ExtInt b) {
  if (a.inf || b.inf) return ExtInt::infinity();
  return ExtInt::of(std::max(a.v, b.v));
}

namespace {

void check_same_group(const LMonElem& f, const LMonElem& g) {
  if (!(f.group == g.group)) fail(ErrKind::GroupMismatch, "l-monoid group mismatch");
}

void check_monoid_group(const LGroupDesc& g) {
  if (g.kind == LGroupDesc::Kind::Lex)
    fail(ErrKind::Unsupported, "l-monoid extension over lex groups not supported");
}

LMonElem canonical(LMonElem f) {
  for (auto it = f.exc.begin(); it != f.exc.end();) {
    ExtInt def = f.block_inf[it->first.block] ? ExtInt::infinity() : ExtInt::of(0);
    if (it->second == def)
      it = f.exc.erase(it);
    else
      ++it;
  }
  return f;
}

template <typename F>
LMonElem zip(const LMonElem& f, const LMonElem& g, F op) {
  LMonElem r;
  r.group = f.group;
  r.block_inf.resize(f.block_inf.size());
  for (size_t b = 0; b < f.block_inf.size(); ++b) {
    ExtInt d = op(f.block_inf[b] ? ExtInt::infinity() : ExtInt::of(0),
                  g.block_inf[b] ? ExtInt::infinity() : ExtInt::of(0));
    r.block_inf[b] = d.inf;
  }
  auto add_key = [&](const Idx& k) {
    if (!r.exc.contains(k)) r.exc[k] = op(f.at(k), g.at(k));
  };
  for (const auto& [k, v] : f.exc) add_key(k);
  for (const auto& [k, v] : g.exc) add_key(k);
  return canonical(std::move(r));
}

}  // namespace

LMonElem lmon_eps(const LGroupDesc& g) {
  check_monoid_group(g);
  LMonElem r;
  r.group = g;
  r.block_inf.assign(g.block_count(), false);
  return r;
}

LMonElem lmon_omega(const LGroupDesc& g) {
  check_monoid_group(g);
  LMonElem r;
  r.group = g;
  r.block_inf.assign(g.block_count(), true);
  return r;
}

LMonElem lmon_embed(const LElem& a) {
  LMonElem r = lmon_eps(a.group);
  for (const auto& [k, v] : a.e) r.exc[k] = ExtInt::of(v);
  return r;
}

LMonElem lmon_make(const LGroupDesc& g, std::vector<bool> block_inf,
                   std::map<Idx, ExtInt> entries) {
  check_monoid_group(g);
  LMonElem r;
  r.group = g;
  if (block_inf.empty()) block_inf.assign(g.block_count(), false);
  if (static_cast<int>(block_inf.size()) != g.block_count())
    fail(ErrKind::BadArgument, "lmon_make: block default count mismatch");
  r.block_inf = std::move(block_inf);
  r.exc = std::move(entries);
  return canonical(std::move(r));
}

bool lmon_is_omega(const LMonElem& f) {
  if (!f.exc.empty()) return false;
  for (bool b : f.block_inf)
    if (!b) return false;
  return true;
}

std::optional<LElem> lmon_as_lelem(const LMonElem& f) {
  for (bool b : f.block_inf)
    if (b) return std::nullopt;
  LElem a;
  a.group = f.group;
  for (const auto& [k, v] : f.exc) {
    if (v.inf) return std::nullopt;
    a.e[k] = v.v;
  }
  return a;
}

LMonElem lmon_mul(const LMonElem& f, const LMonElem& g) {
  check_same_group(f, g);
  return zip(f, g, ei_add);
}

LMonElem lmon_meet(const LMonElem& f, const LMonElem& g) {
  check_same_group(f, g);
  return zip(f, g, ei_min);
}

LMonElem lmon_join(const LMonElem& f, const LMonElem& g) {
  check_same_group(f, g);
  return zip(f, g, ei_max);
}

bool lmon_leq(const LMonElem& f, const LMonElem& g) {
  return lmon_meet(f, g) == f;
}

LElem lmon_eval(const LMonElem& f, const LElem& a) {
  if (!(f.group == a.group)) fail(ErrKind::GroupMismatch, "lmon_eval: group mismatch");
  if (!l_nonneg(a)) fail(ErrKind::NotNonnegative, "lmon_eval: level not nonnegative");
  LElem r;
  r.group = a.group;
  auto put = [&](const Idx& k) {
    if (r.e.contains(k)) return;
    ExtInt m = ei_min(f.at(k), ExtInt::of(a.at(k)));
    if (m.v != 0) r.e[k] = m.v;
  };
  for (const auto& [k, v] : a.e) put(k);
  for (const auto& [k, v] : f.exc) put(k);
  return r;
}

LMonParts lmon_decompose(const LMonElem& f) {
  LMonParts p;
  p.minus.group = f.group;
  for (const auto& [k, v] : f.exc)
    if (!v.inf && v.v < 0) p.minus.e[k] = -v.v;
  p.plus = lmon_mul(f, lmon_embed(p.minus));
  return p;
}

bool lmon_idempotent(const LMonElem& f) {
  for (const auto& [k, v] : f.exc)
    if (!v.inf && v.v != 0) return false;
  return true;
}

LMonElem lmon_complement(const LMonElem& t) {
  if (!lmon_idempotent(t)) fail(ErrKind::NonIdempotent, "complement: not idempotent");
  LMonElem r;
  r.group = t.group;
  r.block_inf.resize(t.block_inf.size());
  for (size_t b = 0; b < t.block_inf.size(); ++b) r.block_inf[b] = !t.block_inf[b];
  for (const auto& [k, v] : t.exc)
    r.exc[k] = v.inf ? ExtInt::of(0) : ExtInt::infinity();
  return canonical(std::move(r));
}

LElem theta_action(const LMonElem& t, const LElem& g) {
  if (!lmon_idempotent(t)) fail(ErrKind::NonIdempotent, "theta_action: not idempotent");
  if (!(t.group == g.group)) fail(ErrKind::GroupMismatch, "theta_action: group mismatch");
  LElem r;
  r.group = g.group;
  for (const auto& [k, v] : g.e)
    if (t.at(k).inf) r.e[k] = v;
  return r;
}

LMonElem bar_elem(const LElem& g, const LMonElem& t) {
  if (!lmon_idempotent(t)) fail(ErrKind::NonIdempotent, "bar_elem: not idempotent");
  for (const auto& [k, v] : g.e)
    if (t.at(k).inf)
      fail(ErrKind::BadArgument, "bar_elem: support meets the idempotent");
  return lmon_mul(lmon_embed(g), t);
}

LMonElem bar_qinv(const LElem& g, const LMonElem& t) {
  return bar_elem(l_inv(g), t);
}

CoordProj lmon_coord(const LMonElem& f, const Idx& i) {
  ExtInt v = f.at(i);
  if (v.inf) return CoordProj{true, 0};
  return CoordProj{false, v.v};
}

std::string lmon_str(const LMonElem& f) {
  if (lmon_is_omega(f)) return "omega";
  std::string s;
  bool any_inf_default = false;
  for (bool b : f.block_inf) any_inf_default = any_inf_default || b;
  if (any_inf_default) s += "default=inf";
  for (const auto& [k, v] : f.exc) {
    if (!s.empty()) s += "*";
    s += idx_str(k) + "^" + (v.inf ? "inf" : std::to_string(v.v));
  }
  if (s.empty()) return "eps";
  return s;
}

}  // namespace residua
