#include "residua/congruence.hpp"

namespace residua {

bool cong_equal(const QuotientDesc& q, const QsElem& x, const QsElem& y) {
  if (!(x.model == q.model) || !(y.model == q.model))
    fail(ErrKind::ModelMismatch, "cong_equal: model mismatch");
  return cone_member(q.cone, met_dist(x, y));
}

ModelDesc prime_factor_model(const ModelDesc& model, const Idx& coord) {
  switch (model.kind) {
    case ModelDesc::Kind::Residue: {
      const ExtDesc& ext = model.ext;
      switch (ext.kind) {
        case ExtDesc::Kind::ZinQ:
          return build_model(ExtDesc::zloc({coord.pos}));
        case ExtDesc::Kind::ZlocS: {
          for (long long p : ext.s_primes)
            if (p == coord.pos) return build_model(ExtDesc::zloc({coord.pos}));
          fail(ErrKind::BadArgument, "project_prime: coordinate not in S");
        }
        case ExtDesc::Kind::FpTlocS:
          return build_model(ExtDesc::fptloc(
              ext.p, {ext.s_polys.at(static_cast<size_t>(coord.pos))}));
        case ExtDesc::Kind::Product: {
          const ExtDesc& part = ext.parts.at(static_cast<size_t>(coord.block));
          ModelDesc inner = prime_factor_model(build_model(part), Idx{0, coord.pos});
          return inner;
        }
      }
      fail(ErrKind::Internal, "prime_factor_model: bad ext");
    }
    case ModelDesc::Kind::RLambda: {
      if (model.group.kind == LGroupDesc::Kind::Lex)
        fail(ErrKind::Unsupported, "project_prime: pointwise groups only");
      return model_rlambda(LGroupDesc::pointwise({coord.pos}));
    }
    default:
      fail(ErrKind::Unsupported, "project_prime: unsupported model");
  }
}

namespace {

LElem restrict_coord(const LElem& a, const Idx& coord, const LGroupDesc& target) {
  LElem r;
  r.group = target;
  long long v = a.at(coord);
  if (v) r.e[Idx{0, target.kind == LGroupDesc::Kind::Pointwise
                        ? target.labels[0]
                        : coord.pos}] = v;
  return r;
}

}  // namespace

PrimeProjection project_prime(const QsElem& x, const Idx& coord) {
  ModelDesc factor = prime_factor_model(x.model, coord);
  switch (x.model.kind) {
    case ModelDesc::Kind::Residue: {
      LElem mod = restrict_coord(x.res().modulus, coord, factor.group);
      FieldElem rep = x.res().rep;
      if (x.model.ext.kind == ExtDesc::Kind::Product)
        rep = rep.tuple().at(static_cast<size_t>(coord.block));
      return PrimeProjection{factor, make_residue(factor, rep, mod)};
    }
    case ModelDesc::Kind::RLambda: {
      LElem g = restrict_coord(x.rp().gamma, coord, factor.group);
      LElem d = restrict_coord(x.rp().delta, coord, factor.group);
      return PrimeProjection{factor, make_rpair(factor, g, d)};
    }
    default:
      fail(ErrKind::Unsupported, "project_prime: unsupported model");
  }
}

bool r_theta_member(const QsElem& x, const LMonElem& theta) {
  if (!x.model.flags.superrigid)
    fail(ErrKind::Unsupported, "r_theta_member: superrigid models only");
  if (!lmon_idempotent(theta))
    fail(ErrKind::NonIdempotent, "r_theta_member: theta not idempotent");
  return theta_action(theta, qs_eplus(x)).is_eps() &&
         theta_action(theta, qs_v(x)).is_eps();
}

RigidityReport rigidity_report(const ModelDesc& model,
                               const std::vector<QsElem>& sample,
                               const std::vector<LElem>& alphas) {
  RigidityReport rep;
  // e+ restricted to sampled multiplicative idempotents is injective
  std::vector<QsElem> idems;
  for (const auto& x : sample) idems.push_back(qs_ebullet(x));
  for (size_t i = 0; i < idems.size(); ++i)
    for (size_t j = i + 1; j < idems.size(); ++j)
      if (qs_eplus(idems[i]) == qs_eplus(idems[j]) && !(idems[i] == idems[j]))
        rep.eplus_injective_on_sample = false;

  if (model.flags.superrigid) {
    rep.superrigid_witnessed = true;
    for (const auto& a : alphas) {
      QsElem one = one_alpha(model, a);
      if (!(qs_eplus(one) == a) || !(qs_mul(one, one) == one))
        rep.superrigid_witnessed = false;
    }
  } else if (model.kind == ModelDesc::Kind::LFl) {
    // E-bullet = {eps, delta}: two idempotents against an infinite Lambda_+
    rep.superrigid_witnessed = false;
    rep.note = "E-bullet has two elements; Lambda_+ is infinite";
  }
  rep.rigid = model.flags.rigid;
  rep.superrigid = model.flags.superrigid && rep.superrigid_witnessed &&
                   rep.eplus_injective_on_sample;
  return rep;
}

}  // namespace residua
