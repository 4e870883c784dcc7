#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cpchart/chart.hpp"

namespace cpchart {

// Dense matrix of expressions; rows/cols are realified frame indices unless
// stated otherwise.
class ExprMatrix {
public:
    ExprMatrix(int rows, int cols, const Expr& fill);
    static ExprMatrix zeros(const ChartPtr& chart, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Expr& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Expr& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_symmetric() const;
    bool is_skew() const;

private:
    int rows_, cols_;
    std::vector<Expr> data_;
};

struct VectorField {
    ChartPtr chart;
    std::vector<Expr> comp;  // 2n components in the realified frame

    VectorField(ChartPtr c, std::vector<Expr> comps);
    static VectorField zero(const ChartPtr& c);
    static VectorField basis(const ChartPtr& c, int a);

    // Directional derivative X(f) = sum_a X^a d_a f.
    Expr apply(const Expr& f) const;

    VectorField operator-() const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    VectorField scaled(const Expr& f) const;

    bool is_zero() const;
};

struct OneForm {
    ChartPtr chart;
    std::vector<Expr> comp;  // 2n components against the realified coframe

    OneForm(ChartPtr c, std::vector<Expr> comps);
    static OneForm zero(const ChartPtr& c);
    static OneForm cobasis(const ChartPtr& c, int a);

    OneForm operator-() const;
    friend OneForm operator+(const OneForm& a, const OneForm& b);
    friend OneForm operator-(const OneForm& a, const OneForm& b);
    OneForm scaled(const Expr& f) const;

    bool is_zero() const;
};

// Skew 2n x 2n contravariant 2-tensor in the realified frame.
struct GeneralBivector {
    ChartPtr chart;
    ExprMatrix m;

    GeneralBivector(ChartPtr c, ExprMatrix mat);
    static GeneralBivector zero(const ChartPtr& c);

    bool is_zero() const;
};

// Poisson structure of type (1,1): pi = sum_jk B_jk d/dz_j ^ d/dzb_k. The
// realified matrix has the B block in the (holo, antiholo) corner and -B^T in
// the transpose corner; the holo-holo and antiholo-antiholo blocks vanish.
struct Bivector11 {
    ChartPtr chart;
    std::vector<std::vector<Expr>> B;  // n x n

    Bivector11(ChartPtr c, std::vector<std::vector<Expr>> b);
    static Bivector11 zero(const ChartPtr& c);

    GeneralBivector realified() const;
};

// Skew 2n x 2n covariant 2-tensor (component matrix W_ab = w(e_a, e_b)).
struct TwoForm {
    ChartPtr chart;
    ExprMatrix m;

    TwoForm(ChartPtr c, ExprMatrix mat);
    static TwoForm zero(const ChartPtr& c);

    Expr apply(const VectorField& X, const VectorField& Y) const;
    bool is_zero() const;
    // True when only the (holo, antiholo) blocks are populated.
    bool is_one_one() const;
};

// Fully antisymmetric covariant 3-tensor, stored on strictly increasing index
// triples. Also reused for the contravariant Jacobi tensor, whose symmetry
// type is the same.
struct AntiSym3 {
    ChartPtr chart;
    std::vector<std::array<int, 3>> triples;  // all a<b<c, lexicographic
    std::vector<Expr> comp;

    explicit AntiSym3(ChartPtr c);
    static AntiSym3 build(const ChartPtr& c, const std::function<Expr(int, int, int)>& f);

    Expr component(int a, int b, int c) const;  // signed, any index order
    void set(int a, int b, int c, const Expr& e);
    bool is_zero() const;

private:
    int slot(int a, int b, int c) const;
};

using ThreeForm = AntiSym3;

// Hermitian metric h = sum_jk h_jk dz_j (x) dzb_k. Hermitianity
// (conj(h_jk) = h_kj) is a verified property, not a construction invariant,
// so corrupted inputs can be diagnosed rather than rejected.
struct HermitianMetric {
    ChartPtr chart;
    std::vector<std::vector<Expr>> H;  // n x n

    HermitianMetric(ChartPtr c, std::vector<std::vector<Expr>> h);

    bool is_hermitian_pointwise(int* bad_j = nullptr, int* bad_k = nullptr) const;
};

// Symmetric cotangent metric g*(e^a, e^b) on the realified coframe.
struct CotangentMetric {
    ChartPtr chart;
    ExprMatrix G;

    CotangentMetric(ChartPtr c, ExprMatrix g);

    Expr apply(const OneForm& a, const OneForm& b) const;
};

// Symmetric covariant metric g(e_a, e_b) on the realified frame.
struct RiemannMetric {
    ChartPtr chart;
    ExprMatrix G;

    RiemannMetric(ChartPtr c, ExprMatrix g);

    Expr apply(const VectorField& X, const VectorField& Y) const;
};

}  // namespace cpchart
