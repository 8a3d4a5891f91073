#include "residua/ringbuild.hpp"

#include <functional>
#include <set>

namespace residua {

namespace {

void check_b_model(const ModelDesc& m) {
  if (!m.flags.superrigid)
    fail(ErrKind::Unsupported, "B(R) requires a superrigid model");
}

void check_same_model(const BElem& a, const BElem& b) {
  if (!(a.model == b.model)) fail(ErrKind::ModelMismatch, "BElem model mismatch");
}

}  // namespace

BElem b_from_field(const ModelDesc& model, const FieldElem& y) {
  check_b_model(model);
  if (model.kind != ModelDesc::Kind::Residue)
    fail(ErrKind::Unsupported, "b_from_field: residue-backed models only");
  fe_check(model.ext, y);
  return BElem{model, y};
}

BElem b_from_theta(const ModelDesc& model, const LMonElem& theta) {
  check_b_model(model);
  if (model.kind != ModelDesc::Kind::RLambda)
    fail(ErrKind::Unsupported, "b_from_theta: RLambda models only");
  if (!lmon_idempotent(theta))
    fail(ErrKind::NonIdempotent, "b_from_theta: generator not idempotent");
  return BElem{model, theta};
}

BElem b_zero(const ModelDesc& model) {
  if (model.kind == ModelDesc::Kind::RLambda)
    return b_from_theta(model, lmon_omega(model.group));
  return b_from_field(model, fe_zero(model.ext));
}

BElem b_unit(const ModelDesc& model) {
  if (model.kind == ModelDesc::Kind::RLambda)
    return b_from_theta(model, lmon_eps(model.group));
  return b_from_field(model, fe_one(model.ext));
}

QsElem b_eval(const BElem& phi, const LElem& alpha) {
  if (phi.residue_backed())
    return make_residue(phi.model, phi.field(), alpha);
  // phi_theta(alpha) = (theta(alpha), alpha/theta(alpha)), extended to
  // general levels by phi~(alpha) = phi(alpha_+) + alpha
  LElem ap = l_parts(alpha).plus;
  LElem g = lmon_eval(phi.theta(), ap);
  QsElem at_plus = make_rpair(phi.model, g, l_div(ap, g));
  if (alpha == ap) return at_plus;
  return qs_add(at_plus, lattice_elem(phi.model, alpha));
}

LMonElem w_of(const BElem& phi) {
  if (phi.residue_backed()) return pm_valuation(phi.model.ext, phi.field());
  return phi.theta();
}

bool b_in_a(const BElem& phi) {
  return lmon_eval(w_of(phi), l_eps(phi.model.group)).is_eps();
}

BElem b_add_gen(const BElem& phi, const BElem& psi) {
  check_same_model(phi, psi);
  if (phi.residue_backed())
    return b_from_field(phi.model, fe_add(phi.model.ext, phi.field(), psi.field()));
  // boolean-ring addition is the symmetric difference in the opposite
  // algebra (zero of B is omega): (t v ~z) /\ (~t v z)
  const LMonElem &t = phi.theta(), &z = psi.theta();
  return b_from_theta(phi.model,
                      lmon_meet(lmon_join(t, lmon_complement(z)),
                                lmon_join(lmon_complement(t), z)));
}

BElem b_neg_gen(const BElem& phi) {
  if (phi.residue_backed())
    return b_from_field(phi.model, fe_neg(phi.model.ext, phi.field()));
  return phi;  // boolean ring: -x = x
}

BElem b_mul_gen(const BElem& phi, const BElem& psi) {
  check_same_model(phi, psi);
  if (phi.residue_backed())
    return b_from_field(phi.model, fe_mul(phi.model.ext, phi.field(), psi.field()));
  return b_from_theta(phi.model, lmon_mul(phi.theta(), psi.theta()));
}

QsElem b_mul(const BElem& phi, const BElem& psi, const LElem& alpha) {
  check_same_model(phi, psi);
  if (!l_nonneg(alpha)) fail(ErrKind::NotNonnegative, "b_mul: level < eps");
  LElem eps = l_eps(phi.model.group);
  LElem vphi = qs_v(b_eval(phi, eps));
  LElem vpsi = qs_v(b_eval(psi, eps));
  QsElem a = b_eval(phi, l_div(alpha, vpsi));
  QsElem b = b_eval(psi, l_div(alpha, vphi));
  return qs_add(qs_mul(a, b), lattice_elem(phi.model, alpha));
}

bool in_trunc_ring(const QsElem& a, const LElem& alpha) {
  return qs_eplus(a) == alpha && l_nonneg(qs_v(a));
}

QsElem trunc_ring_op(const LElem& alpha, TruncOp op, const QsElem& a, const QsElem& b) {
  if (!in_trunc_ring(a, alpha) || !in_trunc_ring(b, alpha))
    fail(ErrKind::BadArgument, "trunc_ring_op: operand not in T_alpha");
  if (op == TruncOp::Add) return qs_add(a, b);
  return qs_add(qs_mul(a, b), lattice_elem(a.model, alpha));
}

QsElem trunc_one(const ModelDesc& model, const LElem& alpha) {
  return one_alpha(model, alpha);
}

QsElem trunc_zero(const ModelDesc& model, const LElem& alpha) {
  return lattice_elem(model, alpha);
}

QsElem eta(const ModelDesc& model, const LMonElem& theta, const LElem& alpha) {
  check_b_model(model);
  if (!lmon_idempotent(theta)) fail(ErrKind::NonIdempotent, "eta: not idempotent");
  if (!l_nonneg(alpha)) fail(ErrKind::NotNonnegative, "eta: level < eps");
  LElem ta = lmon_eval(theta, alpha);
  auto j = qs_join(lattice_elem(model, ta), one_alpha(model, l_div(alpha, ta)));
  if (!j) fail(ErrKind::Internal, "eta: orthogonal join failed");
  return *j;
}

PruferWitness prufer_witness(const BElem& phi) {
  const ModelDesc& model = phi.model;
  if (!model.flags.complete)
    fail(ErrKind::Unsupported, "prufer_witness: complete models only");
  LElem eps = l_eps(model.group);
  LElem gamma = l_inv(qs_v(b_eval(phi, eps)));

  PruferWitness out{b_unit(model)};
  if (!gamma.is_eps()) {
    // psi from the canonical representative of phi(gamma)^{-1}
    QsElem inv = qs_qinv(b_eval(phi, gamma));
    if (model.kind == ModelDesc::Kind::Residue) {
      out.psi = b_from_field(model, inv.res().rep);
    } else {
      fail(ErrKind::Unsupported, "prufer_witness: non-residue complete model");
    }
    QsElem lhs = b_eval(out.psi, l_pow(gamma, 2));
    out.inequality = qs_leq(lhs, inv);
  } else {
    out.inequality = true;  // psi = unit, phi in A
  }

  out.psi_in_a = b_in_a(out.psi);
  // phi*psi in A: v((phi*psi)(eps)) = eps
  QsElem pp = b_mul(phi, out.psi, eps);
  out.phi_psi_in_a = qs_v(pp).is_eps();
  // chi = 1 - phi*psi as a family; phi*(1 - phi*psi) in A iff
  // v((phi*chi)(eps)) = eps with the product formula at level eps:
  // phi(v(chi(eps))^{-1}) * chi(v(phi(eps))^{-1} = gamma) + eps.
  QsElem chi_eps = qs_sub(qs_eps(model), pp);
  QsElem chi_gamma = qs_sub(one_alpha(model, gamma), b_mul(phi, out.psi, gamma));
  QsElem prod = qs_add(qs_mul(b_eval(phi, l_inv(qs_v(chi_eps))), chi_gamma),
                       qs_eps(model));
  out.phi_one_minus_in_a = qs_v(prod).is_eps();
  return out;
}

std::vector<QsElem> trunc_ring_elements(const ModelDesc& model, const LElem& alpha) {
  if (model.kind != ModelDesc::Kind::Residue)
    fail(ErrKind::Unsupported, "trunc_ring_elements: residue models only");
  if (!l_nonneg(alpha))
    fail(ErrKind::BadArgument, "trunc_ring_elements: level < eps");
  Rat q(1);
  std::function<void(const ExtDesc&, const LElem&)> mul_in =
      [&](const ExtDesc& ext, const LElem& a) {
        if (ext.kind == ExtDesc::Kind::Product) {
          for (size_t b = 0; b < ext.parts.size(); ++b) {
            LElem part;
            part.group = lambda_group(ext.parts[b]);
            for (const auto& [k, v] : a.e)
              if (k.block == static_cast<int>(b)) part.e[Idx{0, k.pos}] = v;
            mul_in(ext.parts[b], part);
          }
          return;
        }
        if (ext.kind == ExtDesc::Kind::FpTlocS)
          fail(ErrKind::Unsupported, "trunc_ring_elements: integer levels only");
        q *= lelem_rat(a);
      };
  mul_in(model.ext, alpha);
  if (rat_den(q) != 1 || !rat_num(q).fits_slong_p())
    fail(ErrKind::BadArgument, "trunc_ring_elements: level too large");
  long long n = rat_num(q).get_si();
  std::vector<QsElem> out;
  for (long long r = 0; r < n; ++r)
    out.push_back(make_residue(model, fe_of_int(model.ext, r), alpha));
  return out;
}

RoundtripReport roundtrip_check(const ExtDesc& ext, const std::vector<LElem>& levels) {
  RoundtripReport report;
  ModelDesc model = build_model(ext);
  for (const LElem& alpha : levels) {
    LevelReport lr;
    lr.level = alpha;
    auto record = [&](const std::string& name, bool ok) {
      lr.checks.emplace_back(name, ok);
      lr.pass = lr.pass && ok;
    };

    std::vector<QsElem> slice = trunc_ring_elements(model, alpha);
    // (a) slice carries the induced unital commutative ring structure and
    // matches residue arithmetic element by element
    bool unit_ok = trunc_one(model, alpha) == make_residue(model, fe_one(ext), alpha);
    record("unit is 1 mod alpha", unit_ok);

    bool tables_ok = true;
    for (const auto& x : slice) {
      for (const auto& y : slice) {
        QsElem s = trunc_ring_op(alpha, TruncOp::Add, x, y);
        QsElem p = trunc_ring_op(alpha, TruncOp::Mul, x, y);
        FieldElem sum = fe_add(ext, x.res().rep, y.res().rep);
        FieldElem prod = fe_mul(ext, x.res().rep, y.res().rep);
        tables_ok = tables_ok && s == make_residue(model, sum, alpha) &&
                    p == make_residue(model, prod, alpha);
      }
      if (!tables_ok) break;
    }
    record("T_alpha tables match B/alpha arithmetic", tables_ok);

    // (b) counit surjectivity: every slice element comes from a coherent
    // generator family, monotone in the level
    bool hit_ok = true;
    for (const auto& x : slice) {
      BElem gen = b_from_field(model, x.res().rep);
      hit_ok = hit_ok && b_eval(gen, alpha) == x;
      hit_ok = hit_ok && qs_leq(b_eval(gen, l_eps(model.group)), b_eval(gen, alpha));
    }
    record("every slice element generator-backed and monotone", hit_ok);

    // unit of the adjunction at this level: the B(R(ext)) slice equals the
    // residue slice (no extra elements at integer windows)
    bool size_ok = true;
    {
      std::set<std::string> seen;
      for (const auto& x : slice) seen.insert(qs_str(x));
      size_ok = seen.size() == slice.size();
    }
    record("slice canonical forms distinct", size_ok);

    report.levels.push_back(std::move(lr));
    report.pass = report.pass && report.levels.back().pass;
  }
  return report;
}

}  // namespace residua
