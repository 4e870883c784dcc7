#pragma once

#include "cpchart/tensors.hpp"

namespace cpchart {

// Exact inverse of a square Expr matrix by Gauss-Jordan elimination over the
// rational-function field, with symbolic-nonzero pivoting. Throws
// DegenerateMetricError when the determinant is identically zero.
class LinearSolver {
public:
    LinearSolver(const ChartPtr& chart, const ExprMatrix& A);

    std::vector<Expr> solve(const std::vector<Expr>& rhs) const;
    const ExprMatrix& inverse() const { return inv_; }
    const Expr& det() const { return det_; }

private:
    ChartPtr chart_;
    ExprMatrix inv_;
    Expr det_;
};

}  // namespace cpchart
