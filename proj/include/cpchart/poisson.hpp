#pragma once

#include "cpchart/geometry.hpp"
#include "cpchart/verdict.hpp"

namespace cpchart {

// {f,g} = sum_jk B_jk (dz_j f dzb_k g - dzb_k f dz_j g).
Expr bracket(const Bivector11& pi, const Expr& f, const Expr& g);

// X_f = pi_sharp(df), so X_f(g) = {f,g}.
VectorField hamiltonian_field(const Bivector11& pi, const Expr& f);

// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
Expr jacobiator(const Bivector11& pi, const Expr& f, const Expr& g, const Expr& h);

// Coordinate function of realified index a (z_{a+1} or zb_{a-n+1}).
Expr coordinate_function(const ChartPtr& chart, int a);

// Jacobiator on all triples of coordinate functions; identically zero iff pi
// is Poisson.
AntiSym3 jacobi_tensor(const Bivector11& pi);

// Independent route: the coordinate Schouten expression
// T^{abc} = sum_d (pi^{ad} d_d pi^{bc} + pi^{bd} d_d pi^{ca} + pi^{cd} d_d pi^{ab}).
AntiSym3 schouten_tensor(const Bivector11& pi);

Verdict is_poisson(const Bivector11& pi);

// (L_X pi)^{ab} = sum_d (X^d d_d pi^{ab} - pi^{db} d_d X^a - pi^{ad} d_d X^b).
// The result is a general bivector: Lie derivatives need not stay (1,1).
GeneralBivector lie_derivative_bivector(const VectorField& X, const Bivector11& pi);

Verdict is_poisson_vector_field(const VectorField& X, const Bivector11& pi);

// Per-pair test of dz_j(X_j / pi_jk) + dzb_k(Xb_k / pi_jk) = 0. Pairs with
// pi_jk identically zero come back indeterminate; violated holomorphy
// hypotheses are reported as notes without failing the verdict.
Verdict xp1_check(const VectorField& X, const Bivector11& pi);

// conjugate(B_jk) + B_kj = 0 for all j,k, i.e. B is i times a Hermitian
// matrix; exactly the condition for conjugate(pi) = pi.
Verdict reality_check(const Bivector11& pi);

// J-invariance apply_J(pi) = pi.
Verdict j_invariance_check(const Bivector11& pi);

// Numeric jacobiator: cyclic sum of brackets where every derivative comes
// from fd_derive (inner brackets at the pinned fd step, outer derivatives by
// Richardson-extrapolated central differences). Oracle for jacobiator().
std::complex<double> numeric_jacobiator(const Bivector11& pi, const Expr& f, const Expr& g,
                                        const Expr& h, const EvalPoint& p);

}  // namespace cpchart
