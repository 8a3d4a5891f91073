#include "residua/residue.hpp"

namespace residua {

ModelDesc build_model(const ExtDesc& ext) {
  ModelDesc m;
  m.kind = ModelDesc::Kind::Residue;
  m.ext = ext;
  m.group = lambda_group(ext);
  m.flags.rigid = m.flags.superrigid = true;
  m.flags.median = m.flags.lff = true;
  m.flags.complete = true;
  m.flags.locally_linear = m.group.totally_ordered();
  return m;
}

QsElem res_canon(const ModelDesc& model, const FieldElem& raw, const LElem& alpha) {
  return make_residue(model, raw, alpha);
}

QsElem coherent_family(const QsElem& x, const LElem& beta) {
  if (x.model.kind != ModelDesc::Kind::Residue)
    fail(ErrKind::Unsupported, "coherent_family: residue models only");
  return make_residue(x.model, x.res().rep, beta);
}

LElem dist_formula(const QsElem& x, const QsElem& y) {
  if (x.model.kind != ModelDesc::Kind::Residue || !(x.model == y.model))
    fail(ErrKind::ModelMismatch, "dist_formula: residue models only");
  const LElem &a = x.res().modulus, &b = y.res().modulus;
  FieldElem diff = fe_sub(x.model.ext, x.res().rep, y.res().rep);
  LMonElem w = pm_valuation(x.model.ext, diff);
  auto meet = lmon_as_lelem(lmon_meet(lmon_meet(lmon_embed(a), lmon_embed(b)), w));
  if (!meet) fail(ErrKind::Internal, "dist_formula: non-finite meet");
  return l_div(l_mul(a, b), l_pow(*meet, 2));
}

}  // namespace residua
