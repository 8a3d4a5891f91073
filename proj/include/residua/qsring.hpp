#pragma once

#include <optional>

#include "residua/prufer.hpp"

namespace residua {

struct ModelFlags {
  bool directed = true;
  bool rigid = false;
  bool superrigid = false;
  bool median = false;
  bool lff = false;
  bool locally_linear = false;
  bool complete = false;
  bool operator==(const ModelFlags&) const = default;
};

// A concrete directed cr-qsring model.
//   Residue   R_{B/A} over an extension descriptor
//   RLambda   pairs (gamma, delta), |gamma| /\ delta = eps, over any l-group
//   LFl       locally linear model classified by (F_p, l)
//   SAlpha    substructure {delta < alpha} of RLambda over a lex group,
//             pinned to the two counterexample configurations
struct ModelDesc {
  enum class Kind { Residue, RLambda, LFl, SAlpha };

  Kind kind = Kind::RLambda;
  ExtDesc ext;                  // Residue
  LGroupDesc group;             // the model's Lambda (ambient for SAlpha)
  long long p = 0, l = 0;       // LFl
  LElem alpha;                  // SAlpha bound
  bool salpha_median = false;   // true: lex Z^3 flavor (median, not lff)
  ModelFlags flags;

  bool operator==(const ModelDesc&) const = default;
  std::string str() const;
};

ModelDesc model_rlambda(const LGroupDesc& group);
ModelDesc model_lfl(long long p, long long l);
// median_flavor true: lex Z^3 configuration (median but not lff);
// false: lex Z^4 configuration (not median).
ModelDesc model_salpha(bool median_flavor);

struct ResiduePayload {
  LElem modulus;
  FieldElem rep;  // canonical
  bool operator==(const ResiduePayload&) const = default;
};

struct RPairPayload {
  LElem gamma;
  LElem delta;
  bool operator==(const RPairPayload&) const = default;
};

struct LFlPayload {
  bool lattice = true;
  long long m = 0;       // lattice exponent
  long long n = 0;       // group point level
  long long x = 1;       // group point unit, in [1, p)
  bool operator==(const LFlPayload&) const = default;
};

struct QsElem {
  ModelDesc model;
  std::variant<ResiduePayload, RPairPayload, LFlPayload> pay;

  const ResiduePayload& res() const { return std::get<ResiduePayload>(pay); }
  const RPairPayload& rp() const { return std::get<RPairPayload>(pay); }
  const LFlPayload& lf() const { return std::get<LFlPayload>(pay); }
  bool operator==(const QsElem&) const = default;
};

QsElem make_residue(const ModelDesc& model, const FieldElem& rep, const LElem& modulus);
QsElem make_rpair(const ModelDesc& model, const LElem& gamma, const LElem& delta);
QsElem make_lfl_group(const ModelDesc& model, long long n, long long x);
QsElem make_lfl_lattice(const ModelDesc& model, long long m);

QsElem qs_eps(const ModelDesc& model);
// Embedding of Lambda = E^+ into the model.
QsElem lattice_elem(const ModelDesc& model, const LElem& gamma);
bool qs_is_lattice(const QsElem& a);
LElem qs_lattice_of(const QsElem& a);  // requires qs_is_lattice

QsElem qs_add(const QsElem& a, const QsElem& b);
QsElem qs_neg(const QsElem& a);
QsElem qs_sub(const QsElem& a, const QsElem& b);
QsElem qs_mul(const QsElem& a, const QsElem& b);
QsElem qs_qinv(const QsElem& a);

LElem qs_eplus(const QsElem& a);
LElem qs_v(const QsElem& a);
QsElem qs_ebullet(const QsElem& a);

struct Derived {
  LElem eplus;
  QsElem ebullet;
  LElem v;
};
Derived qs_derived(const QsElem& a);

// Meet via the directedness identity x /\ y = x + v(x - y).
QsElem qs_meet(const QsElem& a, const QsElem& b);
bool qs_leq(const QsElem& a, const QsElem& b);
// Join; nullopt when the pair is not incident (or, for SAlpha models, when
// the ambient join leaves the substructure).
std::optional<QsElem> qs_join(const QsElem& a, const QsElem& b);

// Unique multiplicative idempotent over alpha_+, shifted by alpha:
// 1_alpha = 1_{alpha_+} + alpha. Superrigid models only.
QsElem one_alpha(const ModelDesc& model, const LElem& alpha);

std::string qs_str(const QsElem& a);

}  // namespace residua
