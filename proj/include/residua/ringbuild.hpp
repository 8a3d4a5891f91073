#pragma once

#include "residua/metric.hpp"
#include "residua/residue.hpp"

namespace residua {

// Element of B(R) at truncation level, held as a global generator: an exact
// B-element for residue-backed models, an idempotent of the l-monoid for
// RLambda models (whose B is the boolean ring on the idempotent algebra).
struct BElem {
  ModelDesc model;
  std::variant<FieldElem, LMonElem> gen;

  bool residue_backed() const { return std::holds_alternative<FieldElem>(gen); }
  const FieldElem& field() const { return std::get<FieldElem>(gen); }
  const LMonElem& theta() const { return std::get<LMonElem>(gen); }
};

BElem b_from_field(const ModelDesc& model, const FieldElem& y);
BElem b_from_theta(const ModelDesc& model, const LMonElem& theta);
BElem b_zero(const ModelDesc& model);
BElem b_unit(const ModelDesc& model);

// pi_alpha: the level-alpha slice of the coherent family.
QsElem b_eval(const BElem& phi, const LElem& alpha);

// Generator-level ring operations.
BElem b_add_gen(const BElem& phi, const BElem& psi);
BElem b_neg_gen(const BElem& phi);
BElem b_mul_gen(const BElem& phi, const BElem& psi);

// The level-alpha product evaluated through the deformation formula
// (phi*psi)(alpha) = phi(alpha*v(psi(eps))^{-1}) * psi(alpha*v(phi(eps))^{-1}) + alpha.
QsElem b_mul(const BElem& phi, const BElem& psi, const LElem& alpha);

// w(phi) = v o phi as an element of the l-monoid extension.
LMonElem w_of(const BElem& phi);
bool b_in_a(const BElem& phi);  // w(phi)(eps) = eps

// Ring T_alpha = {x : e+(x) = alpha, v(x) >= eps} with x*y := x rq-mul y + alpha.
enum class TruncOp { Add, Mul };
QsElem trunc_ring_op(const LElem& alpha, TruncOp op, const QsElem& a, const QsElem& b);
QsElem trunc_one(const ModelDesc& model, const LElem& alpha);
QsElem trunc_zero(const ModelDesc& model, const LElem& alpha);
bool in_trunc_ring(const QsElem& a, const LElem& alpha);

// Idempotent correspondence eta at a level: eta(theta)(alpha) =
// theta(alpha) v 1_{alpha/theta(alpha)}, the idempotent of T_alpha over theta.
QsElem eta(const ModelDesc& model, const LMonElem& theta, const LElem& alpha);

// P2-style witness for phi: psi with psi(gamma^2) <= phi(gamma)^{-1},
// gamma = v(phi(eps))^{-1}; the three memberships psi, phi*psi,
// phi*(1 - phi*psi) in A are verified at the stabilization levels.
struct PruferWitness {
  BElem psi;
  bool inequality = false;      // psi(gamma^2) <= phi(gamma)^{-1}
  bool psi_in_a = false;
  bool phi_psi_in_a = false;
  bool phi_one_minus_in_a = false;
  bool ok() const {
    return inequality && psi_in_a && phi_psi_in_a && phi_one_minus_in_a;
  }
};
PruferWitness prufer_witness(const BElem& phi);

struct LevelReport {
  LElem level;
  std::vector<std::pair<std::string, bool>> checks;
  bool pass = true;
};
struct RoundtripReport {
  std::vector<LevelReport> levels;
  bool pass = true;
};
// Theorem-7.2-at-truncation checks: for each level, the slice of B(R(ext))
// is the full residue slice with its induced unital ring structure, and
// every slice element is hit by a generator-backed family.
RoundtripReport roundtrip_check(const ExtDesc& ext, const std::vector<LElem>& levels);

// All canonical elements of T_alpha for integer-like levels (used by the
// roundtrip and table checks). Enumerates representatives 0..N-1.
std::vector<QsElem> trunc_ring_elements(const ModelDesc& model, const LElem& alpha);

}  // namespace residua
