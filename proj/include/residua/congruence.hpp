#pragma once

#include "residua/metric.hpp"
#include "residua/residue.hpp"

namespace residua {

// Congruence indexed by a convex submonoid of Lambda_+: x == y iff
// d(x, y) lies in the cone.
struct QuotientDesc {
  ModelDesc model;
  ConvexConeDesc cone;
};

bool cong_equal(const QuotientDesc& q, const QsElem& x, const QsElem& y);

// Projection onto the locally linear factor at a single coordinate;
// materialized as a Residue/RLambda model over the rank-one subgroup.
struct PrimeProjection {
  ModelDesc factor;
  QsElem image;
};
PrimeProjection project_prime(const QsElem& x, const Idx& coord);
ModelDesc prime_factor_model(const ModelDesc& model, const Idx& coord);

// Membership in the substructure R^theta induced by an idempotent theta:
// theta~(e+(x)) = theta~(v(x)) = eps.
bool r_theta_member(const QsElem& x, const LMonElem& theta);

struct RigidityReport {
  bool eplus_injective_on_sample = true;
  bool superrigid_witnessed = false;  // every sampled alpha in Lambda_+ has 1_alpha
  bool rigid = false;
  bool superrigid = false;
  std::string note;
};
RigidityReport rigidity_report(const ModelDesc& model,
                               const std::vector<QsElem>& sample,
                               const std::vector<LElem>& alphas);

}  // namespace residua
