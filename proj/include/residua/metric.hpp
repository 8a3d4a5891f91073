#pragma once

#include "residua/qsring.hpp"

namespace residua {

// Lambda-metric layer over any model: lam, d, Gromov-style product, cells,
// median, the lff join, and downward ball construction.

LElem met_lam(const QsElem& x, const QsElem& y);   // e+(x)/e+(x /\ y)
LElem met_dist(const QsElem& x, const QsElem& y);  // lam(x,y)*lam(y,x)

// (x,y)_z = e+(z)*e+(x/\y) / (e+(x/\z)*e+(y/\z)); eps iff z in [x,y].
LElem met_gromov(const QsElem& x, const QsElem& y, const QsElem& z);

// z in [x,y] iff d(x,z)*d(z,y) = d(x,y) exactly.
bool in_cell(const QsElem& z, const QsElem& x, const QsElem& y);

// Unique element of [x,y] n [y,z] n [z,x]. Median-flagged models; for the
// SAlpha counterexample configuration throws NotMedian when the ambient
// median leaves the substructure.
QsElem met_median(const QsElem& x, const QsElem& y, const QsElem& z);

// The lff join v': unique z in [x,y] with d(x,z) = d(y, x/\y) and
// d(y,z) = d(x, x/\y); equals x v y exactly when x - y is in E+.
QsElem lff_join(const QsElem& x, const QsElem& y);

// y = a + e+(a)/alpha: the unique element below a at distance alpha.
QsElem met_below(const QsElem& a, const LElem& alpha);

}  // namespace residua
