#include "doctest.h"

#include "cpchart/parser.hpp"
#include "cpchart/poisson.hpp"

using namespace cpchart;

namespace {

Bivector11 from_strings(const ChartPtr& chart, std::vector<std::vector<std::string>> rows) {
    std::vector<std::vector<Expr>> B;
    for (auto& row : rows) {
        std::vector<Expr> r;
        for (auto& s : row) r.push_back(parse_expr(s, chart->vars));
        B.push_back(std::move(r));
    }
    return Bivector11(chart, std::move(B));
}

Bivector11 cstar_pi(const ChartPtr& chart) { return from_strings(chart, {{"2i*z1*zb1"}}); }

}  // namespace

TEST_CASE("bracket is an antisymmetric biderivation") {
    auto chart = make_chart(1, {true});
    Bivector11 pi = cstar_pi(chart);
    Expr z = Expr::z(chart->vars, 1);
    Expr zb = Expr::zb(chart->vars, 1);

    CHECK(equals(bracket(pi, z, zb), parse_expr("2i*z1*zb1", chart->vars)));
    CHECK(equals(bracket(pi, zb, z), parse_expr("-2i*z1*zb1", chart->vars)));

    Expr f = z * zb;
    Expr g = z * z;
    Expr h = zb + z;
    CHECK(equals(bracket(pi, f, g * h), g * bracket(pi, f, h) + bracket(pi, f, g) * h));
    CHECK(equals(bracket(pi, f, g), -bracket(pi, g, f)));
    CHECK(bracket(pi, f, Expr::one(chart->vars)).is_zero());

    VectorField Xf = hamiltonian_field(pi, f);
    CHECK(equals(Xf.apply(g), bracket(pi, f, g)));
}

TEST_CASE("jacobi tensor equals the schouten expression") {
    auto chart = make_chart(2);
    Bivector11 bad = from_strings(chart, {{"1", "0"}, {"0", "z1*zb1"}});

    AntiSym3 jt = jacobi_tensor(bad);
    AntiSym3 st = schouten_tensor(bad);
    CHECK_FALSE(jt.is_zero());
    for (size_t k = 0; k < jt.triples.size(); ++k) {
        auto [a, b, c] = jt.triples[k];
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(equals(jt.component(a, b, c), st.component(a, b, c)));
    }

    // frozen witness: jacobiator(z2, zb1, zb2) = zb1
    Expr z2 = Expr::z(chart->vars, 2);
    Expr zb1 = Expr::zb(chart->vars, 1);
    Expr zb2 = Expr::zb(chart->vars, 2);
    CHECK(equals(jacobiator(bad, z2, zb1, zb2), zb1));
    CHECK(equals(jt.component(1, 2, 3), zb1));

    Verdict v = is_poisson(bad);
    CHECK(v.status == Status::fail);
    REQUIRE_FALSE(v.witnesses.empty());
    CHECK(v.witnesses[0].location == "jacobiator(z1, z2, zb2)");

    // the good cases stay exactly zero
    Bivector11 rank_one = from_strings(
        chart, {{"2i*z1*zb1", "2i*z1*zb2"}, {"2i*z2*zb1", "2i*z2*zb2"}});
    CHECK(jacobi_tensor(rank_one).is_zero());
    CHECK(is_poisson(rank_one).passed());
}

TEST_CASE("numeric jacobiator oracle") {
    auto chart = make_chart(2);
    Bivector11 bad = from_strings(chart, {{"1", "0"}, {"0", "z1*zb1"}});
    Expr z2 = Expr::z(chart->vars, 2);
    Expr zb1 = Expr::zb(chart->vars, 1);
    Expr zb2 = Expr::zb(chart->vars, 2);

    // jacobiator(zb1, z2, zb2) = -zb1, numerically -1 at z = (1,1)
    EvalPoint ones;
    ones.coords = {{1.0, 0.0}, {1.0, 0.0}};
    std::complex<double> num = numeric_jacobiator(bad, zb1, z2, zb2, ones);
    CHECK(std::abs(num - std::complex<double>(-1.0, 0.0)) < 1e-6);
    CHECK(equals(jacobiator(bad, zb1, z2, zb2), -zb1));

    PointSampler sampler(42);
    for (int k = 0; k < 5; ++k) {
        EvalPoint p = sampler.sample_point(*chart->vars);
        std::complex<double> sym = jacobiator(bad, zb1, z2, zb2).eval(p);
        std::complex<double> fd = numeric_jacobiator(bad, zb1, z2, zb2, p);
        CHECK(approx_equal(sym, fd, 1e-6, 1e-6));
    }
}

TEST_CASE("poisson vector fields via the lie derivative") {
    auto chart = make_chart(1, {true}, {"k"});
    Bivector11 pi = cstar_pi(chart);

    VectorField good(chart, {parse_expr("k*z1", chart->vars), chart->zero()});
    CHECK(lie_derivative_bivector(good, pi).is_zero());
    CHECK(is_poisson_vector_field(good, pi).passed());

    VectorField anti(chart, {chart->zero(), parse_expr("conj(k)*zb1", chart->vars)});
    CHECK(is_poisson_vector_field(anti, pi).passed());

    VectorField bad(chart, {parse_expr("z1^2", chart->vars), chart->zero()});
    GeneralBivector L = lie_derivative_bivector(bad, pi);
    CHECK(equals(L.m.at(0, 1), parse_expr("-2i*z1^2*zb1", chart->vars)));
    Verdict v = is_poisson_vector_field(bad, pi);
    CHECK(v.status == Status::fail);
    REQUIRE_FALSE(v.witnesses.empty());
    CHECK(v.witnesses[0].location == "(L_X pi)(dz1, dzb1)");
}

TEST_CASE("per-pair xp1 diagnostics") {
    auto chart = make_chart(1, {true}, {"c"});
    Bivector11 pi = from_strings(chart, {{"c*z1*zb1"}});

    VectorField good(chart, {parse_expr("c*z1", chart->vars), chart->zero()});
    CHECK(xp1_check(good, pi).passed());

    VectorField bad(chart, {parse_expr("z1^2", chart->vars), chart->zero()});
    Verdict v = xp1_check(bad, pi);
    CHECK(v.status == Status::fail);
    REQUIRE_FALSE(v.witnesses.empty());
    CHECK(equals(parse_expr(v.witnesses[0].expression, chart->vars),
                 parse_expr("1/(c*zb1)", chart->vars)));

    Bivector11 zero_pi = from_strings(chart, {{"0"}});
    Verdict vz = xp1_check(good, zero_pi);
    CHECK(vz.status == Status::indeterminate);

    VectorField nonhol(chart, {parse_expr("zb1", chart->vars), chart->zero()});
    Verdict vn = xp1_check(nonhol, pi);
    CHECK_FALSE(vn.notes.empty());
}

TEST_CASE("reality and j-invariance verdicts") {
    auto chart1 = make_chart(1, {true});
    CHECK(reality_check(cstar_pi(chart1)).passed());
    CHECK(j_invariance_check(cstar_pi(chart1)).passed());

    auto chart = make_chart(2);
    Bivector11 rank_one = from_strings(
        chart, {{"2i*z1*zb1", "2i*z1*zb2"}, {"2i*z2*zb1", "2i*z2*zb2"}});
    CHECK(reality_check(rank_one).passed());
    CHECK(j_invariance_check(rank_one).passed());

    Bivector11 bad = from_strings(chart, {{"1", "0"}, {"0", "z1*zb1"}});
    Verdict v = reality_check(bad);
    CHECK(v.status == Status::fail);
    REQUIRE_FALSE(v.witnesses.empty());
    CHECK(v.witnesses[0].location == "conj(B_11) + B_11");
    CHECK(j_invariance_check(bad).passed());
}
