#pragma once

#include <complex>
#include <string>

#include "cpchart/errors.hpp"
#include "cpchart/point.hpp"
#include "cpchart/polynomial.hpp"
#include "cpchart/varset.hpp"

namespace cpchart {

// Exact rational function over a VarSet. Representation is a numerator /
// denominator pair of polynomials, normalized so that the denominator is monic
// in the graded-lex order, shared monomial content is cancelled, and exact
// polynomial cancellation is applied when the denominator divides the
// numerator. The pair need not be fully reduced; equality is decided by
// cross-multiplication, which is exact regardless.
class Expr {
public:
    explicit Expr(VarSetPtr vars);
    Expr(VarSetPtr vars, Polynomial num, Polynomial den);

    static Expr zero(const VarSetPtr& vars) { return Expr(vars); }
    static Expr one(const VarSetPtr& vars) { return constant(vars, GaussRational(1)); }
    static Expr constant(const VarSetPtr& vars, const GaussRational& c);
    static Expr imaginary_unit(const VarSetPtr& vars) { return constant(vars, GaussRational::i()); }
    static Expr variable(const VarSetPtr& vars, int index);
    static Expr z(const VarSetPtr& vars, int j) { return variable(vars, vars->z(j)); }
    static Expr zb(const VarSetPtr& vars, int j) { return variable(vars, vars->zb(j)); }

    const VarSetPtr& vars() const { return vars_; }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    Expr operator-() const;
    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    Expr& operator+=(const Expr& o) { return *this = *this + o; }
    Expr& operator-=(const Expr& o) { return *this = *this - o; }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }
    Expr& operator/=(const Expr& o) { return *this = *this / o; }

    Expr pow(int k) const;

    // Wirtinger derivative with respect to chart variable `var` (z_j or zb_j
    // index); declared constants have derivative zero by construction and are
    // not valid arguments here.
    Expr wirtinger(int var) const;

    // Syntactic conjugation involution: swaps z_j with zb_j, each constant
    // with its partner, and conjugates coefficients.
    Expr conjugate() const;

    // Lift into an extended VarSet (same chart dimension, superset constants).
    Expr lifted(const VarSetPtr& bigger) const;

    std::complex<double> eval(const EvalPoint& p, double pole_tol = 1e-12) const;

    std::string str() const;

private:
    void normalize();

    VarSetPtr vars_;
    Polynomial num_;
    Polynomial den_;
};

// Exact equality of rational functions by cross-multiplication.
bool equals(const Expr& a, const Expr& b);

// Central finite-difference Wirtinger derivative: independent x / y
// differences at step h combined into d/dz or d/dzb. The numeric oracle for
// wirtinger().
std::complex<double> fd_derive(const Expr& e, int var, const EvalPoint& p, double h = 1e-5);

}  // namespace cpchart
