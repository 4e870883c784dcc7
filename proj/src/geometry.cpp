#include "cpchart/geometry.hpp"

namespace cpchart {

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    const ChartPtr& chart = X.chart;
    VectorField r = VectorField::zero(chart);
    for (int a = 0; a < chart->dim(); ++a) {
        Expr acc = chart->zero();
        for (int b = 0; b < chart->dim(); ++b)
            acc += X.comp[b] * Y.comp[a].wirtinger(b) - Y.comp[b] * X.comp[a].wirtinger(b);
        r.comp[a] = acc;
    }
    return r;
}

OneForm d(const Expr& f, const ChartPtr& chart) {
    OneForm r = OneForm::zero(chart);
    for (int a = 0; a < chart->dim(); ++a) r.comp[a] = f.wirtinger(a);
    return r;
}

TwoForm d(const OneForm& a) {
    const ChartPtr& chart = a.chart;
    ExprMatrix m = ExprMatrix::zeros(chart, chart->dim(), chart->dim());
    for (int r = 0; r < chart->dim(); ++r)
        for (int c = 0; c < chart->dim(); ++c) m.at(r, c) = a.comp[c].wirtinger(r) - a.comp[r].wirtinger(c);
    return TwoForm(chart, std::move(m));
}

ThreeForm d(const TwoForm& w) {
    return AntiSym3::build(w.chart, [&](int a, int b, int c) {
        return w.m.at(b, c).wirtinger(a) - w.m.at(a, c).wirtinger(b) + w.m.at(a, b).wirtinger(c);
    });
}

Expr pair(const OneForm& a, const VectorField& X) {
    Expr acc = a.chart->zero();
    for (int k = 0; k < a.chart->dim(); ++k) acc += a.comp[k] * X.comp[k];
    return acc;
}

Expr pi_apply(const GeneralBivector& pi, const OneForm& a, const OneForm& b) {
    Expr acc = pi.chart->zero();
    for (int r = 0; r < pi.chart->dim(); ++r)
        for (int c = 0; c < pi.chart->dim(); ++c) acc += a.comp[r] * b.comp[c] * pi.m.at(r, c);
    return acc;
}

VectorField pi_sharp(const GeneralBivector& pi, const OneForm& a) {
    VectorField r = VectorField::zero(pi.chart);
    for (int b = 0; b < pi.chart->dim(); ++b) {
        Expr acc = pi.chart->zero();
        for (int c = 0; c < pi.chart->dim(); ++c) acc += a.comp[c] * pi.m.at(c, b);
        r.comp[b] = acc;
    }
    return r;
}

Expr j_factor(const ChartPtr& chart, int a) {
    Expr i = Expr::imaginary_unit(chart->vars);
    return a < chart->n ? i : -i;
}

VectorField apply_J(const VectorField& X) {
    VectorField r = X;
    for (int a = 0; a < X.chart->dim(); ++a) r.comp[a] *= j_factor(X.chart, a);
    return r;
}

OneForm apply_J(const OneForm& a) {
    OneForm r = a;
    for (int k = 0; k < a.chart->dim(); ++k) r.comp[k] *= j_factor(a.chart, k);
    return r;
}

GeneralBivector apply_J(const GeneralBivector& pi) {
    ExprMatrix m = pi.m;
    for (int a = 0; a < pi.chart->dim(); ++a)
        for (int b = 0; b < pi.chart->dim(); ++b)
            m.at(a, b) = pi.m.at(a, b) * j_factor(pi.chart, a) * j_factor(pi.chart, b);
    return GeneralBivector(pi.chart, std::move(m));
}

TwoForm apply_J(const TwoForm& w) {
    ExprMatrix m = w.m;
    for (int a = 0; a < w.chart->dim(); ++a)
        for (int b = 0; b < w.chart->dim(); ++b)
            m.at(a, b) = w.m.at(a, b) * j_factor(w.chart, a) * j_factor(w.chart, b);
    return TwoForm(w.chart, std::move(m));
}

VectorField nijenhuis(const VectorField& X, const VectorField& Y) {
    VectorField jx = apply_J(X), jy = apply_J(Y);
    return lie_bracket(jx, jy) - apply_J(lie_bracket(jx, Y)) - apply_J(lie_bracket(X, jy)) -
           lie_bracket(X, Y);
}

ExprMatrix j_matrix(const ChartPtr& chart) {
    ExprMatrix m = ExprMatrix::zeros(chart, chart->dim(), chart->dim());
    for (int a = 0; a < chart->dim(); ++a) m.at(a, a) = j_factor(chart, a);
    return m;
}

}  // namespace cpchart
