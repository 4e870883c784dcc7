#include "cpchart/kahler.hpp"

#include "cpchart/errors.hpp"
#include "cpchart/linalg.hpp"

namespace cpchart {

GenericVectorSpace GenericVectorSpace::make(const ChartPtr& chart, int count) {
    std::vector<std::string> names;
    for (int v = 0; v < count; ++v)
        for (int a = 0; a < chart->dim(); ++a) {
            std::string base = "_u" + std::to_string(v + 1) + "_" + std::to_string(a + 1);
            while (chart->vars->index_of(base)) base += "_";
            names.push_back(base);
        }
    auto ext_vars = chart->vars->extended(names);
    Chart ec{chart->n, chart->origin_excluded, ext_vars};
    ChartPtr ext = std::make_shared<const Chart>(std::move(ec));

    GenericVectorSpace s;
    s.ext = ext;
    for (int v = 0; v < count; ++v) {
        std::vector<Expr> comps;
        for (int a = 0; a < chart->dim(); ++a) {
            auto idx = ext_vars->index_of(names[static_cast<size_t>(v) * chart->dim() + a]);
            comps.push_back(Expr::variable(ext_vars, *idx));
        }
        s.fields.emplace_back(ext, std::move(comps));
    }
    return s;
}

Expr apply_hermitian(const HermitianMetric& h, const ChartPtr& ext, const VectorField& X,
                     const VectorField& Y) {
    int n = h.chart->n;
    Expr acc = ext->zero();
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            acc += h.H[j][k].lifted(ext->vars) * X.comp[j] * Y.comp[n + k];
    return acc;
}

Verdict hermitian_check(const HermitianMetric& h) {
    Verdict v;
    for (int j = 0; j < h.chart->n; ++j)
        for (int k = 0; k < h.chart->n; ++k) {
            Expr r = h.H[j][k].conjugate() - h.H[k][j];
            if (!r.is_zero())
                v.fail_with("conj(h_" + std::to_string(j + 1) + std::to_string(k + 1) + ") - h_" +
                                std::to_string(k + 1) + std::to_string(j + 1),
                            r.str());
        }
    return v;
}

Decomposition decompose(const HermitianMetric& h) {
    if (!h.is_hermitian_pointwise())
        throw std::invalid_argument("decompose needs a Hermitian coefficient matrix");
    const ChartPtr& chart = h.chart;
    int n = chart->n;
    Expr half = Expr::constant(chart->vars, GaussRational(make_rational(1, 2)));
    Expr half_i = Expr::constant(chart->vars, GaussRational(Rational(0), make_rational(1, 2)));

    ExprMatrix G = ExprMatrix::zeros(chart, 2 * n, 2 * n);
    ExprMatrix W = ExprMatrix::zeros(chart, 2 * n, 2 * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            G.at(j, n + k) = half * h.H[j][k];
            G.at(n + k, j) = half * h.H[j][k];
            W.at(j, n + k) = -half_i * h.H[j][k];
            W.at(n + k, j) = half_i * h.H[j][k];
        }
    return Decomposition{RiemannMetric(chart, std::move(G)), TwoForm(chart, std::move(W))};
}

namespace {

VectorField lift_field_J(const VectorField& X) { return apply_J(X); }

Expr bilinear_lifted(const ExprMatrix& M, const ChartPtr& ext, const VectorField& X,
                     const VectorField& Y) {
    Expr acc = ext->zero();
    for (int a = 0; a < M.rows(); ++a)
        for (int b = 0; b < M.cols(); ++b) {
            if (M.at(a, b).is_zero()) continue;
            acc += M.at(a, b).lifted(ext->vars) * X.comp[a] * Y.comp[b];
        }
    return acc;
}

}  // namespace

Verdict j_invariance_h(const HermitianMetric& h) {
    auto gen = GenericVectorSpace::make(h.chart, 2);
    const VectorField& X = gen.fields[0];
    const VectorField& Y = gen.fields[1];
    Expr r = apply_hermitian(h, gen.ext, lift_field_J(X), lift_field_J(Y)) -
             apply_hermitian(h, gen.ext, X, Y);
    Verdict v;
    if (!r.is_zero()) v.fail_with("h(JX,JY) - h(X,Y)", r.str());
    return v;
}

Verdict recompose_check(const HermitianMetric& h, const Decomposition& dec) {
    auto gen = GenericVectorSpace::make(h.chart, 2);
    const VectorField& X = gen.fields[0];
    const VectorField& Y = gen.fields[1];
    Expr i = Expr::imaginary_unit(gen.ext->vars);
    Expr r = apply_hermitian(h, gen.ext, X, Y) - bilinear_lifted(dec.g.G, gen.ext, X, Y) -
             i * bilinear_lifted(dec.omega.m, gen.ext, X, Y);
    Verdict v;
    if (!r.is_zero()) v.fail_with("h(X,Y) - g(X,Y) - i*omega(X,Y)", r.str());
    return v;
}

Verdict compatibility_triple(const RiemannMetric& g, const TwoForm& omega) {
    const ChartPtr& chart = g.chart;
    Verdict v;

    auto gen = GenericVectorSpace::make(chart, 2);
    const VectorField& X = gen.fields[0];
    const VectorField& Y = gen.fields[1];
    Expr r1 = bilinear_lifted(g.G, gen.ext, X, Y) - bilinear_lifted(omega.m, gen.ext, apply_J(X), Y);
    if (!r1.is_zero()) v.fail_with("g(X,Y) - omega(JX,Y)", r1.str());
    Expr r2 = bilinear_lifted(omega.m, gen.ext, X, Y) - bilinear_lifted(g.G, gen.ext, X, apply_J(Y));
    if (!r2.is_zero()) v.fail_with("omega(X,Y) - g(X,JY)", r2.str());

    try {
        LinearSolver ginv(chart, g.G);
        ExprMatrix J = j_matrix(chart);
        for (int a = 0; a < chart->dim(); ++a)
            for (int b = 0; b < chart->dim(); ++b) {
                Expr acc = chart->zero();
                for (int c = 0; c < chart->dim(); ++c) acc += ginv.inverse().at(a, c) * omega.m.at(c, b);
                Expr res = acc - J.at(a, b);
                if (!res.is_zero())
                    v.fail_with("(G^-1 W - J)[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]",
                                res.str());
            }
    } catch (const DegenerateMetricError& e) {
        v.mark_indeterminate(std::string("metric not invertible: ") + e.what());
    }
    return v;
}

Verdict is_closed(const TwoForm& omega) {
    ThreeForm dw = d(omega);
    const ChartPtr& chart = omega.chart;
    Verdict v;
    for (size_t k = 0; k < dw.triples.size(); ++k) {
        if (dw.comp[k].is_zero()) continue;
        auto [a, b, c] = dw.triples[k];
        v.fail_with("d(omega)(" + chart->cobasis_name(a) + "," + chart->cobasis_name(b) + "," +
                        chart->cobasis_name(c) + ")",
                    dw.comp[k].str());
    }
    return v;
}

Verdict nondegeneracy_evidence(const TwoForm& omega, PointSampler& sampler, int samples, double tol) {
    const ChartPtr& chart = omega.chart;
    Verdict v;
    Expr det = chart->one();
    try {
        LinearSolver s(chart, omega.m);
        det = s.det();
        v.notes.push_back("symbolic determinant nonzero: det = " + det.str());
    } catch (const DegenerateMetricError&) {
        v.fail_with("det(omega)", "identically zero");
        return v;
    }
    int ok = 0, poles = 0;
    for (int k = 0; k < samples; ++k) {
        EvalPoint p = sampler.sample_point(*chart->vars);
        try {
            if (std::abs(det.eval(p)) > tol) ++ok;
        } catch (const PoleError&) {
            ++poles;
        }
    }
    v.notes.push_back("sampled invertibility: " + std::to_string(ok) + "/" + std::to_string(samples) +
                      " points nondegenerate" + (poles ? (", " + std::to_string(poles) + " at poles") : ""));
    if (ok == 0) v.mark_indeterminate("no sample point confirmed nondegeneracy");
    return v;
}

}  // namespace cpchart
