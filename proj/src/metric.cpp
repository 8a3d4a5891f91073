#include "residua/metric.hpp"

namespace residua {

namespace {

void check_same_model(const QsElem& a, const QsElem& b) {
  if (!(a.model == b.model)) fail(ErrKind::ModelMismatch, "model mismatch");
}

// Ambient RLambda model over the same l-group, for SAlpha computations.
ModelDesc ambient_of(const ModelDesc& m) {
  return model_rlambda(m.group);
}

QsElem to_ambient(const QsElem& a) {
  return make_rpair(ambient_of(a.model), a.rp().gamma, a.rp().delta);
}

}  // namespace

LElem met_lam(const QsElem& x, const QsElem& y) {
  check_same_model(x, y);
  return l_div(qs_eplus(x), qs_eplus(qs_meet(x, y)));
}

LElem met_dist(const QsElem& x, const QsElem& y) {
  check_same_model(x, y);
  LElem m = qs_eplus(qs_meet(x, y));
  return l_div(l_mul(qs_eplus(x), qs_eplus(y)), l_pow(m, 2));
}

LElem met_gromov(const QsElem& x, const QsElem& y, const QsElem& z) {
  check_same_model(x, y);
  check_same_model(x, z);
  LElem num = l_mul(qs_eplus(z), qs_eplus(qs_meet(x, y)));
  LElem den = l_mul(qs_eplus(qs_meet(x, z)), qs_eplus(qs_meet(y, z)));
  return l_div(num, den);
}

bool in_cell(const QsElem& z, const QsElem& x, const QsElem& y) {
  return l_mul(met_dist(x, z), met_dist(z, y)) == met_dist(x, y);
}

QsElem met_median(const QsElem& x, const QsElem& y, const QsElem& z) {
  check_same_model(x, y);
  check_same_model(x, z);
  const ModelDesc& m = x.model;
  if (m.kind == ModelDesc::Kind::SAlpha) {
    QsElem ax = to_ambient(x), ay = to_ambient(y), az = to_ambient(z);
    QsElem am = met_median(ax, ay, az);
    if (!l_nonneg(l_div(m.alpha, am.rp().delta)) || am.rp().delta == m.alpha)
      fail(ErrKind::NotMedian,
           "median leaves S_alpha: ambient median " + qs_str(am));
    return make_rpair(m, am.rp().gamma, am.rp().delta);
  }
  if (!m.flags.median) fail(ErrKind::Unsupported, "median: model not median");
  QsElem xy = qs_meet(x, y), yz = qs_meet(y, z), zx = qs_meet(z, x);
  auto j1 = qs_join(xy, yz);
  if (!j1) fail(ErrKind::Internal, "median: pairwise meets not incident");
  auto j2 = qs_join(*j1, zx);
  if (!j2) fail(ErrKind::Internal, "median: pairwise meets not incident");
  return *j2;
}

QsElem lff_join(const QsElem& x, const QsElem& y) {
  check_same_model(x, y);
  if (!x.model.flags.lff) fail(ErrKind::Unsupported, "lff_join: model not lff");
  // z = (x truncated to lam(x,y) /\ lam(y,x)) v (y truncated likewise);
  // the two truncations differ by a lattice point, so the join exists.
  LElem low = l_meet(met_lam(x, y), met_lam(y, x));
  QsElem z1 = met_below(x, low);
  QsElem z2 = met_below(y, low);
  auto z = qs_join(z1, z2);
  if (!z) fail(ErrKind::Internal, "lff_join: bound construction not incident");
  return *z;
}

QsElem met_below(const QsElem& a, const LElem& alpha) {
  if (!l_nonneg(alpha)) fail(ErrKind::NotNonnegative, "below: alpha < eps");
  LElem gamma = l_div(qs_eplus(a), alpha);
  return qs_add(a, lattice_elem(a.model, gamma));
}

}  // namespace residua
