#pragma once

#include "residua/qsring.hpp"

namespace residua {

// The functor R: residue model R_{B/A} over an extension descriptor.
ModelDesc build_model(const ExtDesc& ext);

// Reduce a raw representative mod alpha into the canonical window.
QsElem res_canon(const ModelDesc& model, const FieldElem& raw, const LElem& alpha);

// Lift x along its canonical representative to level beta; for beta <= e+(x)
// this is the truncation x + beta. The family over all beta is the
// completeness witness of the model.
QsElem coherent_family(const QsElem& x, const LElem& beta);

// Distance evaluated directly from the alpha*beta*(alpha+beta+A(x-y))^{-2}
// formula; cross-checks metric::dist.
LElem dist_formula(const QsElem& x, const QsElem& y);

}  // namespace residua
