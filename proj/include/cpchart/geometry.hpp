#pragma once

#include "cpchart/tensors.hpp"

namespace cpchart {

// Commutator of vector fields: [X,Y]^a = sum_b (X^b d_b Y^a - Y^b d_b X^a).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// Exterior derivative in the coordinate coframe.
OneForm d(const Expr& f, const ChartPtr& chart);
TwoForm d(const OneForm& a);
ThreeForm d(const TwoForm& w);

// Natural pairing <alpha, X>.
Expr pair(const OneForm& a, const VectorField& X);

// pi(alpha, beta) = sum_ab alpha_a beta_b pi^{ab}.
Expr pi_apply(const GeneralBivector& pi, const OneForm& a, const OneForm& b);

// Anchor map: pi_sharp(alpha)^b = sum_a alpha_a pi^{ab}, so that
// pair(beta, pi_sharp(alpha)) = pi(alpha, beta).
VectorField pi_sharp(const GeneralBivector& pi, const OneForm& a);

// The integrable complex structure in the Wirtinger frame: multiplication by
// i on holomorphic slots, by -i on antiholomorphic ones.
Expr j_factor(const ChartPtr& chart, int a);
VectorField apply_J(const VectorField& X);
OneForm apply_J(const OneForm& a);
GeneralBivector apply_J(const GeneralBivector& pi);
TwoForm apply_J(const TwoForm& w);

// Nijenhuis tensor of J evaluated on a pair of vector fields:
// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y].
VectorField nijenhuis(const VectorField& X, const VectorField& Y);

// J as a 2n x 2n matrix acting on the frame (diagonal +-i).
ExprMatrix j_matrix(const ChartPtr& chart);

}  // namespace cpchart
