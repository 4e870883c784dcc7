#include "cpchart/poisson.hpp"

namespace cpchart {

Expr bracket(const Bivector11& pi, const Expr& f, const Expr& g) {
    const ChartPtr& chart = pi.chart;
    int n = chart->n;
    Expr acc = chart->zero();
    // pi(df, dg) expanded: the antiholomorphic derivative of f carries the
    // *second* index (Remark 3.1 prints dzb_j, a typo against pi(df,dg)).
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (pi.B[j][k].is_zero()) continue;
            acc += pi.B[j][k] * (f.wirtinger(j) * g.wirtinger(n + k) - f.wirtinger(n + k) * g.wirtinger(j));
        }
    return acc;
}

VectorField hamiltonian_field(const Bivector11& pi, const Expr& f) {
    return pi_sharp(pi.realified(), d(f, pi.chart));
}

Expr jacobiator(const Bivector11& pi, const Expr& f, const Expr& g, const Expr& h) {
    return bracket(pi, f, bracket(pi, g, h)) + bracket(pi, g, bracket(pi, h, f)) +
           bracket(pi, h, bracket(pi, f, g));
}

Expr coordinate_function(const ChartPtr& chart, int a) {
    return Expr::variable(chart->vars, a);
}

AntiSym3 jacobi_tensor(const Bivector11& pi) {
    return AntiSym3::build(pi.chart, [&](int a, int b, int c) {
        return jacobiator(pi, coordinate_function(pi.chart, a), coordinate_function(pi.chart, b),
                          coordinate_function(pi.chart, c));
    });
}

AntiSym3 schouten_tensor(const Bivector11& pi) {
    GeneralBivector P = pi.realified();
    const ChartPtr& chart = pi.chart;
    auto term = [&](int a, int b, int c) {
        Expr acc = chart->zero();
        for (int dd = 0; dd < chart->dim(); ++dd) acc += P.m.at(a, dd) * P.m.at(b, c).wirtinger(dd);
        return acc;
    };
    return AntiSym3::build(chart, [&](int a, int b, int c) {
        return term(a, b, c) + term(b, c, a) + term(c, a, b);
    });
}

Verdict is_poisson(const Bivector11& pi) {
    Verdict v;
    AntiSym3 t = jacobi_tensor(pi);
    const ChartPtr& chart = pi.chart;
    for (size_t k = 0; k < t.triples.size(); ++k) {
        if (t.comp[k].is_zero()) continue;
        auto [a, b, c] = t.triples[k];
        v.fail_with("jacobiator(" + chart->vars->name(a) + ", " + chart->vars->name(b) + ", " +
                        chart->vars->name(c) + ")",
                    t.comp[k].str());
    }
    return v;
}

GeneralBivector lie_derivative_bivector(const VectorField& X, const Bivector11& pi) {
    const ChartPtr& chart = pi.chart;
    GeneralBivector P = pi.realified();
    ExprMatrix m = ExprMatrix::zeros(chart, chart->dim(), chart->dim());
    for (int a = 0; a < chart->dim(); ++a)
        for (int b = 0; b < chart->dim(); ++b) {
            Expr acc = chart->zero();
            for (int dd = 0; dd < chart->dim(); ++dd)
                acc += X.comp[dd] * P.m.at(a, b).wirtinger(dd) - P.m.at(dd, b) * X.comp[a].wirtinger(dd) -
                       P.m.at(a, dd) * X.comp[b].wirtinger(dd);
            m.at(a, b) = acc;
        }
    return GeneralBivector(chart, std::move(m));
}

Verdict is_poisson_vector_field(const VectorField& X, const Bivector11& pi) {
    Verdict v;
    GeneralBivector L = lie_derivative_bivector(X, pi);
    const ChartPtr& chart = pi.chart;
    for (int a = 0; a < chart->dim(); ++a)
        for (int b = a + 1; b < chart->dim(); ++b)
            if (!L.m.at(a, b).is_zero())
                v.fail_with("(L_X pi)(" + chart->cobasis_name(a) + ", " + chart->cobasis_name(b) + ")",
                            L.m.at(a, b).str());
    return v;
}

Verdict xp1_check(const VectorField& X, const Bivector11& pi) {
    const ChartPtr& chart = pi.chart;
    int n = chart->n;
    Verdict v;
    for (int j = 0; j < n; ++j) {
        for (int m = 0; m < n; ++m)
            if (!X.comp[j].wirtinger(n + m).is_zero()) {
                v.notes.push_back("hypothesis violated: X^" + std::to_string(j + 1) +
                                  " is not holomorphic");
                break;
            }
        for (int m = 0; m < n; ++m)
            if (!X.comp[n + j].wirtinger(m).is_zero()) {
                v.notes.push_back("hypothesis violated: X^{bar " + std::to_string(j + 1) +
                                  "} is not antiholomorphic");
                break;
            }
    }
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            std::string loc = "(j,k)=(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
            if (pi.B[j][k].is_zero()) {
                v.mark_indeterminate("pi_" + std::to_string(j + 1) + std::to_string(k + 1) +
                                     " identically zero; pair " + loc + " indeterminate");
                continue;
            }
            Expr residual =
                (X.comp[j] / pi.B[j][k]).wirtinger(j) + (X.comp[n + k] / pi.B[j][k]).wirtinger(n + k);
            if (!residual.is_zero()) v.fail_with(loc, residual.str());
        }
    return v;
}

Verdict reality_check(const Bivector11& pi) {
    Verdict v;
    int n = pi.chart->n;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Expr r = pi.B[j][k].conjugate() + pi.B[k][j];
            if (!r.is_zero())
                v.fail_with("conj(B_" + std::to_string(j + 1) + std::to_string(k + 1) + ") + B_" +
                                std::to_string(k + 1) + std::to_string(j + 1),
                            r.str());
        }
    return v;
}

Verdict j_invariance_check(const Bivector11& pi) {
    Verdict v;
    GeneralBivector P = pi.realified();
    GeneralBivector JP = apply_J(P);
    const ChartPtr& chart = pi.chart;
    for (int a = 0; a < chart->dim(); ++a)
        for (int b = a + 1; b < chart->dim(); ++b) {
            Expr r = JP.m.at(a, b) - P.m.at(a, b);
            if (!r.is_zero())
                v.fail_with("(J pi - pi)(" + chart->cobasis_name(a) + ", " + chart->cobasis_name(b) + ")",
                            r.str());
        }
    return v;
}

namespace {

// Central difference of an arbitrary complex-valued function of the point,
// assembled into a Wirtinger derivative.
template <typename F>
std::complex<double> wirt_fd(const F& func, int var, const VarSet& vars, const EvalPoint& p, double h) {
    bool holo = vars.is_holomorphic_coord(var);
    int j = holo ? var : var - vars.n();
    auto shifted = [&](double dx, double dy) {
        EvalPoint q = p;
        q.coords[j] += std::complex<double>(dx, dy);
        return func(q);
    };
    std::complex<double> fx = (shifted(h, 0) - shifted(-h, 0)) / (2 * h);
    std::complex<double> fy = (shifted(0, h) - shifted(0, -h)) / (2 * h);
    std::complex<double> i(0, 1);
    return holo ? (fx - i * fy) * 0.5 : (fx + i * fy) * 0.5;
}

template <typename F>
std::complex<double> wirt_fd_richardson(const F& func, int var, const VarSet& vars, const EvalPoint& p,
                                        double h) {
    std::complex<double> coarse = wirt_fd(func, var, vars, p, h);
    std::complex<double> fine = wirt_fd(func, var, vars, p, h / 2);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

std::complex<double> numeric_jacobiator(const Bivector11& pi, const Expr& f, const Expr& g,
                                        const Expr& h, const EvalPoint& p) {
    const VarSet& vars = *pi.chart->vars;
    int n = pi.chart->n;
    const double h_inner = 1e-5;
    const double h_outer = 1e-3;

    auto nbracket = [&](const Expr& a, const Expr& b, const EvalPoint& q) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (pi.B[j][k].is_zero()) continue;
                acc += pi.B[j][k].eval(q) * (fd_derive(a, j, q, h_inner) * fd_derive(b, n + k, q, h_inner) -
                                             fd_derive(a, n + k, q, h_inner) * fd_derive(b, j, q, h_inner));
            }
        return acc;
    };

    // {a, {b,c}} with the inner bracket available only as point evaluations.
    auto outer = [&](const Expr& a, const Expr& b, const Expr& c) {
        auto inner = [&](const EvalPoint& q) { return nbracket(b, c, q); };
        std::complex<double> acc = 0.0;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (pi.B[j][k].is_zero()) continue;
                acc += pi.B[j][k].eval(p) *
                       (fd_derive(a, j, p, h_inner) * wirt_fd_richardson(inner, n + k, vars, p, h_outer) -
                        fd_derive(a, n + k, p, h_inner) * wirt_fd_richardson(inner, j, vars, p, h_outer));
            }
        return acc;
    };

    return outer(f, g, h) + outer(g, h, f) + outer(h, f, g);
}

}  // namespace cpchart
