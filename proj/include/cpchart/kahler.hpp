#pragma once

#include "cpchart/geometry.hpp"
#include "cpchart/point.hpp"
#include "cpchart/verdict.hpp"

namespace cpchart {

// h = g + i*omega with g = (h + conj(h))/2 symmetric J-invariant and
// omega(X,Y) = g(X, JY), i.e. omega = -(i/2) sum h_jk dz_j ^ dzb_k in
// components. (The sign is forced by requiring the recomposition h = g + iw
// to hold exactly together with omega(X,Y) = g(X,JY); see README.)
struct Decomposition {
    RiemannMetric g;
    TwoForm omega;
};

Decomposition decompose(const HermitianMetric& h);

// Hermitianity of the coefficient matrix: conj(h_jk) = h_kj.
Verdict hermitian_check(const HermitianMetric& h);

// h(JX,JY) = h(X,Y) with generic symbolic vector components.
Verdict j_invariance_h(const HermitianMetric& h);

// Recomposition residual h(X,Y) - g(X,Y) - i*omega(X,Y) on generic vectors.
Verdict recompose_check(const HermitianMetric& h, const Decomposition& dec);

// The Prop 4.1 compatible-triple identities:
//   g(X,Y) = omega(JX,Y),  omega(X,Y) = g(X,JY),  G^{-1} W = J.
Verdict compatibility_triple(const RiemannMetric& g, const TwoForm& omega);

// d(omega) = 0, exact.
Verdict is_closed(const TwoForm& omega);

// Separate nondegeneracy evidence: symbolic determinant not identically zero
// plus sampled numeric invertibility.
Verdict nondegeneracy_evidence(const TwoForm& omega, PointSampler& sampler, int samples,
                               double tol = 1e-9);

// Generic vector field whose 2n components are fresh symbolic constants
// (zero-derivative), over an extended chart; used to turn quantified tensor
// identities into decidable polynomial identities.
struct GenericVectorSpace {
    ChartPtr ext;                     // original chart with extra constants
    std::vector<VectorField> fields;  // one per requested generic vector

    static GenericVectorSpace make(const ChartPtr& chart, int count);
};

Expr apply_hermitian(const HermitianMetric& h, const ChartPtr& ext, const VectorField& X,
                     const VectorField& Y);

}  // namespace cpchart
