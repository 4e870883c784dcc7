#include "cpchart/linalg.hpp"

#include "cpchart/errors.hpp"

namespace cpchart {

LinearSolver::LinearSolver(const ChartPtr& chart, const ExprMatrix& A)
    : chart_(chart), inv_(ExprMatrix::zeros(chart, A.rows(), A.cols())), det_(chart->one()) {
    if (A.rows() != A.cols()) throw DimensionError("solver needs a square matrix");
    int n = A.rows();
    ExprMatrix work = A;
    for (int r = 0; r < n; ++r) inv_.at(r, r) = chart->one();

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw DegenerateMetricError("matrix is symbolically singular (column " +
                                        std::to_string(col + 1) + ")");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv_.at(pivot, c), inv_.at(col, c));
            }
            det_ = -det_;
        }
        Expr p = work.at(col, col);
        det_ *= p;
        for (int c = 0; c < n; ++c) {
            work.at(col, c) /= p;
            inv_.at(col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Expr factor = work.at(r, col);
            if (factor.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                work.at(r, c) -= factor * work.at(col, c);
                inv_.at(r, c) -= factor * inv_.at(col, c);
            }
        }
    }
}

std::vector<Expr> LinearSolver::solve(const std::vector<Expr>& rhs) const {
    int n = inv_.rows();
    if (static_cast<int>(rhs.size()) != n) throw DimensionError("rhs size mismatch");
    std::vector<Expr> x(static_cast<size_t>(n), chart_->zero());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) x[r] += inv_.at(r, c) * rhs[c];
    return x;
}

}  // namespace cpchart
