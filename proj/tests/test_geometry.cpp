#include "doctest.h"

#include "cpchart/geometry.hpp"
#include "cpchart/parser.hpp"

using namespace cpchart;

namespace {

VectorField field(const ChartPtr& chart, std::vector<std::string> comps) {
    std::vector<Expr> parsed;
    for (const auto& s : comps) parsed.push_back(parse_expr(s, chart->vars));
    return VectorField(chart, std::move(parsed));
}

}  // namespace

TEST_CASE("lie bracket of vector fields") {
    auto chart = make_chart(1);
    VectorField X = field(chart, {"z1", "0"});
    VectorField Y = field(chart, {"1", "0"});

    VectorField b = lie_bracket(X, Y);
    CHECK(equals(b.comp[0], parse_expr("-1", chart->vars)));
    CHECK(b.comp[1].is_zero());

    // antisymmetry and Jacobi for polynomial fields
    VectorField Z = field(chart, {"zb1", "z1^2"});
    CHECK((lie_bracket(X, Z) + lie_bracket(Z, X)).is_zero());
    VectorField jac = lie_bracket(X, lie_bracket(Y, Z)) + lie_bracket(Y, lie_bracket(Z, X)) +
                      lie_bracket(Z, lie_bracket(X, Y));
    CHECK(jac.is_zero());
}

TEST_CASE("exterior derivative squares to zero") {
    auto chart = make_chart(2);
    Expr f = parse_expr("z1^2*zb2 + z2/zb1", chart->vars);

    OneForm df = d(f, chart);
    CHECK(equals(df.comp[0], f.wirtinger(chart->vars->z(1))));
    CHECK(d(df).is_zero());

    std::vector<Expr> comps;
    for (int a = 0; a < chart->dim(); ++a)
        comps.push_back(parse_expr("z" + std::to_string(a % 2 + 1) + "*zb2", chart->vars));
    OneForm alpha(chart, comps);
    TwoForm da = d(alpha);
    CHECK(d(da).is_zero());

    VectorField X = field(chart, {"z1", "0", "zb2", "0"});
    CHECK(equals(pair(df, X), X.apply(f)));
}

TEST_CASE("pi_sharp pairs back to pi_apply") {
    auto chart = make_chart(2);
    std::vector<std::vector<Expr>> B(2, std::vector<Expr>(2, chart->zero()));
    B[0][0] = parse_expr("2i*z1*zb1", chart->vars);
    B[0][1] = parse_expr("z2", chart->vars);
    B[1][1] = parse_expr("1", chart->vars);
    Bivector11 pi(chart, B);
    GeneralBivector P = pi.realified();

    CHECK(P.m.is_skew());

    for (int a = 0; a < chart->dim(); ++a)
        for (int b = 0; b < chart->dim(); ++b) {
            OneForm ea = OneForm::cobasis(chart, a);
            OneForm eb = OneForm::cobasis(chart, b);
            CHECK(equals(pair(eb, pi_sharp(P, ea)), pi_apply(P, ea, eb)));
        }

    OneForm alpha(chart, {parse_expr("z1", chart->vars), parse_expr("zb2", chart->vars),
                          parse_expr("1", chart->vars), parse_expr("z2^2", chart->vars)});
    OneForm beta(chart, {parse_expr("zb1", chart->vars), parse_expr("0", chart->vars),
                         parse_expr("z1*z2", chart->vars), parse_expr("i", chart->vars)});
    CHECK(equals(pi_apply(P, alpha, beta), -pi_apply(P, beta, alpha)));
    CHECK(equals(pair(beta, pi_sharp(P, alpha)), pi_apply(P, alpha, beta)));
}

TEST_CASE("complex structure J") {
    auto chart = make_chart(2);
    VectorField X = field(chart, {"z1^2", "zb2", "0", "z2*zb1"});
    VectorField Y = field(chart, {"0", "1", "z1", "zb1^2"});

    VectorField JJX = apply_J(apply_J(X));
    CHECK((JJX + X).is_zero());

    CHECK(nijenhuis(X, Y).is_zero());

    ExprMatrix J = j_matrix(chart);
    Expr i = Expr::imaginary_unit(chart->vars);
    CHECK(equals(J.at(0, 0), i));
    CHECK(equals(J.at(2, 2), -i));
    CHECK(J.at(0, 1).is_zero());

    OneForm alpha = OneForm::cobasis(chart, 0);
    CHECK(equals(apply_J(alpha).comp[0], i));
}

TEST_CASE("antisymmetric 3-tensor slots") {
    auto chart = make_chart(2);
    AntiSym3 t(chart);
    Expr v = parse_expr("z1*zb2", chart->vars);
    t.set(0, 1, 2, v);

    CHECK(equals(t.component(0, 1, 2), v));
    CHECK(equals(t.component(1, 0, 2), -v));
    CHECK(equals(t.component(2, 0, 1), v));
    CHECK(t.component(0, 0, 2).is_zero());
    CHECK_FALSE(t.is_zero());
}

TEST_CASE("two-form application and (1,1) detection") {
    auto chart = make_chart(1);
    ExprMatrix w = ExprMatrix::zeros(chart, 2, 2);
    w.at(0, 1) = parse_expr("z1*zb1", chart->vars);
    w.at(1, 0) = -w.at(0, 1);
    TwoForm omega(chart, w);

    CHECK(omega.is_one_one());

    VectorField X = field(chart, {"z1", "0"});
    VectorField Y = field(chart, {"0", "zb1"});
    CHECK(equals(omega.apply(X, Y), parse_expr("z1^2*zb1^2", chart->vars)));
    CHECK(equals(omega.apply(Y, X), -omega.apply(X, Y)));
}
