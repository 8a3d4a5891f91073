#include "residua/qsring.hpp"

#include <algorithm>

namespace residua {

std::string ModelDesc::str() const {
  switch (kind) {
    case Kind::Residue: return "res:" + ext.str();
    case Kind::RLambda: return "rlambda:" + group.str();
    case Kind::LFl:
      return "lfl:" + std::to_string(p) + "," + std::to_string(l);
    case Kind::SAlpha: return salpha_median ? "salpha:nonlff" : "salpha:nonmedian";
  }
  return "?";
}

ModelDesc model_rlambda(const LGroupDesc& group) {
  ModelDesc m;
  m.kind = ModelDesc::Kind::RLambda;
  m.group = group;
  m.flags.rigid = m.flags.superrigid = true;
  m.flags.median = m.flags.lff = true;
  m.flags.complete = true;
  m.flags.locally_linear = group.totally_ordered();
  return m;
}

ModelDesc model_lfl(long long p, long long l) {
  if (p < 2 || l < 0) fail(ErrKind::BadArgument, "model_lfl: bad parameters");
  ModelDesc m;
  m.kind = ModelDesc::Kind::LFl;
  m.group = LGroupDesc::pointwise({0});
  m.p = p;
  m.l = l;
  m.flags.rigid = true;
  m.flags.superrigid = false;
  m.flags.median = m.flags.lff = m.flags.locally_linear = true;
  m.flags.complete = false;
  return m;
}

ModelDesc model_salpha(bool median_flavor) {
  ModelDesc m;
  m.kind = ModelDesc::Kind::SAlpha;
  m.salpha_median = median_flavor;
  int base = median_flavor ? 2 : 3;
  std::vector<std::string> names;
  for (int i = 1; i <= base; ++i) names.push_back("s" + std::to_string(i));
  names.push_back("a");
  m.group = LGroupDesc::lex(base, std::move(names));
  m.alpha = lelem(m.group, {{Idx{0, base}, 1}});
  m.flags.median = median_flavor;
  m.flags.lff = false;
  return m;
}

namespace {

void check_same_model(const QsElem& a, const QsElem& b) {
  if (!(a.model == b.model)) fail(ErrKind::ModelMismatch, "model mismatch");
}

bool strictly_below(const LElem& d, const LElem& alpha) {
  return l_leq(d, alpha) && !(d == alpha);
}

// v of a residue class: exponentwise min of the modulus and the valuation
// of the representative (omega when the representative is zero). Only the
// modulus support and the denominator primes can contribute: outside them
// v_p(rep) >= 0 meets 0.
LElem res_v(const ExtDesc& ext, const FieldElem& rep, const LElem& modulus) {
  if (ext.kind == ExtDesc::Kind::ZinQ || ext.kind == ExtDesc::Kind::ZlocS) {
    const Rat& x = rep.rat();
    if (x == 0) return modulus;
    std::set<long long> primes;
    for (const auto& [k, e] : modulus.e) primes.insert(k.pos);
    if (ext.kind == ExtDesc::Kind::ZinQ) {
      for (const auto& [p, e] : factor_int(rat_den(x), ext.factor_bound))
        primes.insert(p);
    }
    LElem v;
    v.group = modulus.group;
    for (long long p : primes) {
      long long m = std::min(modulus.at(Idx{0, p}), vp_rat(x, to_int(p)));
      if (m) v.e[Idx{0, p}] = m;
    }
    return v;
  }
  LMonElem w = pm_valuation(ext, rep);
  auto v = lmon_as_lelem(lmon_meet(lmon_embed(modulus), w));
  if (!v) fail(ErrKind::Internal, "res_v: non-finite meet");
  return *v;
}

}  // namespace

QsElem make_residue(const ModelDesc& model, const FieldElem& rep, const LElem& modulus) {
  if (model.kind != ModelDesc::Kind::Residue)
    fail(ErrKind::ModelMismatch, "make_residue: not a residue model");
  if (!(modulus.group == model.group))
    fail(ErrKind::GroupMismatch, "make_residue: modulus group mismatch");
  QsElem r;
  r.model = model;
  r.pay = ResiduePayload{modulus, canon_rep(model.ext, rep, modulus)};
  return r;
}

QsElem make_rpair(const ModelDesc& model, const LElem& gamma, const LElem& delta) {
  if (model.kind != ModelDesc::Kind::RLambda && model.kind != ModelDesc::Kind::SAlpha)
    fail(ErrKind::ModelMismatch, "make_rpair: not a pair model");
  if (!(gamma.group == model.group) || !(delta.group == model.group))
    fail(ErrKind::GroupMismatch, "make_rpair: group mismatch");
  if (!l_nonneg(delta)) fail(ErrKind::BadArgument, "make_rpair: delta < eps");
  if (!l_meet(l_parts(gamma).abs, delta).is_eps())
    fail(ErrKind::BadArgument, "make_rpair: |gamma| /\\ delta != eps");
  if (model.kind == ModelDesc::Kind::SAlpha && !strictly_below(delta, model.alpha))
    fail(ErrKind::BadArgument, "make_rpair: delta not below alpha");
  QsElem r;
  r.model = model;
  r.pay = RPairPayload{gamma, delta};
  return r;
}

QsElem make_lfl_group(const ModelDesc& model, long long n, long long x) {
  if (model.kind != ModelDesc::Kind::LFl)
    fail(ErrKind::ModelMismatch, "make_lfl_group: not an LFl model");
  x %= model.p;
  if (x < 0) x += model.p;
  if (x == 0) fail(ErrKind::BadArgument, "make_lfl_group: unit part is zero");
  if (model.l == 0 && n != 0)
    fail(ErrKind::BadArgument, "make_lfl_group: l = 0 forces n = 0");
  QsElem r;
  r.model = model;
  r.pay = LFlPayload{false, 0, n, x};
  return r;
}

QsElem make_lfl_lattice(const ModelDesc& model, long long m) {
  if (model.kind != ModelDesc::Kind::LFl)
    fail(ErrKind::ModelMismatch, "make_lfl_lattice: not an LFl model");
  QsElem r;
  r.model = model;
  r.pay = LFlPayload{true, m, 0, 1};
  return r;
}

QsElem qs_eps(const ModelDesc& model) {
  return lattice_elem(model, l_eps(model.group));
}

QsElem lattice_elem(const ModelDesc& model, const LElem& gamma) {
  switch (model.kind) {
    case ModelDesc::Kind::Residue:
      return make_residue(model, fe_zero(model.ext), gamma);
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha:
      return make_rpair(model, gamma, l_eps(model.group));
    case ModelDesc::Kind::LFl:
      return make_lfl_lattice(model, gamma.at(Idx{0, 0}));
  }
  fail(ErrKind::Internal, "lattice_elem: bad kind");
}

bool qs_is_lattice(const QsElem& a) {
  switch (a.model.kind) {
    case ModelDesc::Kind::Residue:
      return fe_is_zero(a.res().rep);
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha:
      return a.rp().delta.is_eps();
    case ModelDesc::Kind::LFl:
      return a.lf().lattice;
  }
  return false;
}

LElem qs_lattice_of(const QsElem& a) {
  if (!qs_is_lattice(a)) fail(ErrKind::BadArgument, "qs_lattice_of: not a lattice point");
  return qs_eplus(a);
}

LElem qs_eplus(const QsElem& a) {
  switch (a.model.kind) {
    case ModelDesc::Kind::Residue:
      return a.res().modulus;
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha:
      return l_mul(a.rp().gamma, a.rp().delta);
    case ModelDesc::Kind::LFl: {
      const auto& p = a.lf();
      return lelem(a.model.group,
                   {{Idx{0, 0}, p.lattice ? p.m : a.model.l * p.n + 1}});
    }
  }
  fail(ErrKind::Internal, "qs_eplus: bad kind");
}

LElem qs_v(const QsElem& a) {
  switch (a.model.kind) {
    case ModelDesc::Kind::Residue:
      return res_v(a.model.ext, a.res().rep, a.res().modulus);
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha:
      return a.rp().gamma;
    case ModelDesc::Kind::LFl: {
      const auto& p = a.lf();
      return lelem(a.model.group,
                   {{Idx{0, 0}, p.lattice ? p.m : a.model.l * p.n}});
    }
  }
  fail(ErrKind::Internal, "qs_v: bad kind");
}

QsElem qs_ebullet(const QsElem& a) {
  switch (a.model.kind) {
    case ModelDesc::Kind::Residue:
      return make_residue(a.model, fe_one(a.model.ext),
                          l_div(a.res().modulus, qs_v(a)));
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha:
      return make_rpair(a.model, l_eps(a.model.group), a.rp().delta);
    case ModelDesc::Kind::LFl:
      return a.lf().lattice ? make_lfl_lattice(a.model, 0)
                            : make_lfl_group(a.model, 0, 1);
  }
  fail(ErrKind::Internal, "qs_ebullet: bad kind");
}

Derived qs_derived(const QsElem& a) {
  return Derived{qs_eplus(a), qs_ebullet(a), qs_v(a)};
}

QsElem qs_add(const QsElem& a, const QsElem& b) {
  check_same_model(a, b);
  switch (a.model.kind) {
    case ModelDesc::Kind::Residue: {
      LElem mod = l_meet(a.res().modulus, b.res().modulus);
      return make_residue(a.model, fe_add(a.model.ext, a.res().rep, b.res().rep), mod);
    }
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha: {
      const LElem &g = a.rp().gamma, &d = a.rp().delta;
      const LElem &g2 = b.rp().gamma, &d2 = b.rp().delta;
      LElem rho = l_div(g, g2);
      LParts rp = l_parts(rho);
      LElem dd = l_meet(l_meet(rp.abs, l_mul(rp.plus, d)), l_mul(rp.minus, d2));
      LElem num = l_meet(l_mul(g, d), l_mul(g2, d2));
      return make_rpair(a.model, l_div(num, dd), dd);
    }
    case ModelDesc::Kind::LFl: {
      const auto &x = a.lf(), &y = b.lf();
      long long l = a.model.l, p = a.model.p;
      if (x.lattice && y.lattice)
        return make_lfl_lattice(a.model, std::min(x.m, y.m));
      if (x.lattice || y.lattice) {
        const auto& gp = x.lattice ? y : x;
        long long m = x.lattice ? x.m : y.m;
        if (m > l * gp.n) return make_lfl_group(a.model, gp.n, gp.x);
        return make_lfl_lattice(a.model, m);
      }
      if (x.n == y.n) {
        long long s = (x.x + y.x) % p;
        if (s != 0) return make_lfl_group(a.model, x.n, s);
        return make_lfl_lattice(a.model, l * x.n + 1);
      }
      return x.n < y.n ? a : b;
    }
  }
  fail(ErrKind::Internal, "qs_add: bad kind");
}

QsElem qs_neg(const QsElem& a) {
  switch (a.model.kind) {
    case ModelDesc::Kind::Residue:
      return make_residue(a.model, fe_neg(a.model.ext, a.res().rep), a.res().modulus);
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha:
      return a;
    case ModelDesc::Kind::LFl: {
      const auto& x = a.lf();
      if (x.lattice) return a;
      return make_lfl_group(a.model, x.n, a.model.p - x.x);
    }
  }
  fail(ErrKind::Internal, "qs_neg: bad kind");
}

QsElem qs_sub(const QsElem& a, const QsElem& b) { return qs_add(a, qs_neg(b)); }

QsElem qs_mul(const QsElem& a, const QsElem& b) {
  check_same_model(a, b);
  switch (a.model.kind) {
    case ModelDesc::Kind::Residue: {
      LElem va = qs_v(a), vb = qs_v(b);
      LElem mod = l_meet(l_mul(a.res().modulus, vb), l_mul(b.res().modulus, va));
      return make_residue(a.model, fe_mul(a.model.ext, a.res().rep, b.res().rep), mod);
    }
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha:
      return make_rpair(a.model, l_mul(a.rp().gamma, b.rp().gamma),
                        l_meet(a.rp().delta, b.rp().delta));
    case ModelDesc::Kind::LFl: {
      const auto &x = a.lf(), &y = b.lf();
      long long l = a.model.l, p = a.model.p;
      if (x.lattice && y.lattice) return make_lfl_lattice(a.model, x.m + y.m);
      if (x.lattice || y.lattice) {
        const auto& gp = x.lattice ? y : x;
        long long m = x.lattice ? x.m : y.m;
        return make_lfl_lattice(a.model, l * gp.n + m);
      }
      return make_lfl_group(a.model, x.n + y.n, (x.x * y.x) % p);
    }
  }
  fail(ErrKind::Internal, "qs_mul: bad kind");
}

QsElem qs_qinv(const QsElem& a) {
  switch (a.model.kind) {
    case ModelDesc::Kind::Residue: {
      const ExtDesc& ext = a.model.ext;
      LElem v = qs_v(a);
      LElem mod = l_div(a.res().modulus, l_pow(v, 2));
      FieldElem vg = ideal_generator(ext, v);
      FieldElem u = fe_mul(ext, a.res().rep, fe_inv(ext, vg));
      FieldElem t = mod_inverse_ideal(ext, u, l_div(a.res().modulus, v));
      FieldElem z = fe_mul(ext, t, fe_inv(ext, vg));
      return make_residue(a.model, z, mod);
    }
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha:
      return make_rpair(a.model, l_inv(a.rp().gamma), a.rp().delta);
    case ModelDesc::Kind::LFl: {
      const auto& x = a.lf();
      if (x.lattice) return make_lfl_lattice(a.model, -x.m);
      long long p = a.model.p;
      long long inv = 1, base = x.x % p, e = p - 2;
      while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      return make_lfl_group(a.model, -x.n, inv);
    }
  }
  fail(ErrKind::Internal, "qs_qinv: bad kind");
}

QsElem qs_meet(const QsElem& a, const QsElem& b) {
  check_same_model(a, b);
  LElem vdiff = qs_v(qs_sub(a, b));
  return qs_add(a, lattice_elem(a.model, vdiff));
}

bool qs_leq(const QsElem& a, const QsElem& b) { return qs_meet(a, b) == a; }

std::optional<QsElem> qs_join(const QsElem& a, const QsElem& b) {
  check_same_model(a, b);
  switch (a.model.kind) {
    case ModelDesc::Kind::Residue: {
      auto z = crt_pair(a.model.ext, a.res().rep, a.res().modulus, b.res().rep,
                        b.res().modulus);
      if (!z) return std::nullopt;
      return make_residue(a.model, z->first, z->second);
    }
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha: {
      if (!qs_is_lattice(qs_sub(a, b))) return std::nullopt;
      LElem jg = l_join(a.rp().gamma, b.rp().gamma);
      LElem jd = l_join(a.rp().delta, b.rp().delta);
      if (a.model.kind == ModelDesc::Kind::SAlpha &&
          !strictly_below(jd, a.model.alpha))
        return std::nullopt;  // ambient join leaves S_alpha
      return make_rpair(a.model, jg, jd);
    }
    case ModelDesc::Kind::LFl: {
      if (qs_leq(a, b)) return b;
      if (qs_leq(b, a)) return a;
      return std::nullopt;
    }
  }
  fail(ErrKind::Internal, "qs_join: bad kind");
}

QsElem one_alpha(const ModelDesc& model, const LElem& alpha) {
  if (!model.flags.superrigid)
    fail(ErrKind::Unsupported, "one_alpha: model is not superrigid");
  switch (model.kind) {
    case ModelDesc::Kind::Residue:
      return make_residue(model, fe_one(model.ext), alpha);
    case ModelDesc::Kind::RLambda: {
      LParts p = l_parts(alpha);
      return make_rpair(model, l_inv(p.minus), p.plus);
    }
    default:
      fail(ErrKind::Internal, "one_alpha: bad kind");
  }
}

std::string qs_str(const QsElem& a) {
  switch (a.model.kind) {
    case ModelDesc::Kind::Residue: {
      std::string mod;
      if (a.model.ext.kind == ExtDesc::Kind::Product) {
        const auto& parts = a.model.ext.parts;
        std::string s = "(";
        for (size_t b = 0; b < parts.size(); ++b) {
          if (b) s += " | ";
          LElem pm;
          pm.group = lambda_group(parts[b]);
          for (const auto& [k, v] : a.res().modulus.e)
            if (k.block == static_cast<int>(b)) pm.e[Idx{0, k.pos}] = v;
          s += fe_str(a.res().rep.tuple()[b]) + " mod " +
               fe_str(ideal_generator(parts[b], pm));
        }
        return s + ")";
      }
      return fe_str(a.res().rep) + " mod " +
             fe_str(ideal_generator(a.model.ext, a.res().modulus));
    }
    case ModelDesc::Kind::RLambda:
    case ModelDesc::Kind::SAlpha: {
      auto vec = [&](const LElem& x) {
        std::string s = "(";
        if (a.model.group.kind == LGroupDesc::Kind::Lex) {
          for (int i = 0; i <= a.model.group.lex_base; ++i) {
            if (i) s += ",";
            s += std::to_string(x.at(Idx{0, i}));
          }
        } else {
          for (size_t i = 0; i < a.model.group.labels.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(x.at(Idx{0, a.model.group.labels[i]}));
          }
        }
        return s + ")";
      };
      return "[" + vec(a.rp().gamma) + ";" + vec(a.rp().delta) + "]";
    }
    case ModelDesc::Kind::LFl: {
      const auto& x = a.lf();
      if (x.lattice) return "g^" + std::to_string(x.m);
      return "(" + std::to_string(x.n) + "," + std::to_string(x.x) + ")";
    }
  }
  return "?";
}

}  // namespace residua
