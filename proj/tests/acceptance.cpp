// Acceptance suite: ten end-to-end criteria, one line of output each.
// Exits 0 only if every criterion holds.

#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpchart/connection.hpp"
#include "cpchart/kahler.hpp"
#include "cpchart/manifest.hpp"
#include "cpchart/parser.hpp"
#include "cpchart/poisson.hpp"

using namespace cpchart;

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

void require_eq(const Expr& got, const Expr& want, const std::string& what) {
    if (!equals(got, want))
        throw std::runtime_error(what + ": got " + got.str() + ", want " + want.str());
}

Expr P(const VarSetPtr& vars, const std::string& text) { return parse_expr(text, vars); }

// C* cotangent metric, g* = diag(z zb, z zb) in the Wirtinger coframe.
CotangentMetric cylinder_gstar(const ChartPtr& chart) {
    ExprMatrix G = ExprMatrix::zeros(chart, 2, 2);
    G.at(0, 0) = P(chart->vars, "z1*zb1");
    G.at(1, 1) = P(chart->vars, "z1*zb1");
    return CotangentMetric(chart, G);
}

CotangentMetric flat_gstar(const ChartPtr& chart) {
    ExprMatrix G = ExprMatrix::zeros(chart, chart->dim(), chart->dim());
    for (int a = 0; a < chart->dim(); ++a) G.at(a, a) = chart->one();
    return CotangentMetric(chart, G);
}

// pi11 as a full quadratic jet: six independent coefficients, so any identity
// that holds for it holds for every pi11 through second order at each point.
struct GenericCstar {
    ChartPtr chart;
    Expr p, pz, pzb, z, zb, two;
    Bivector11 pi;

    GenericCstar()
        : chart(make_chart(1, {true}, {"a1", "a2", "a3", "a4", "a5", "a6"})),
          p(P(chart->vars, "a1 + a2*z1 + a3*zb1 + a4*z1*zb1 + a5*z1^2 + a6*zb1^2")),
          pz(p.wirtinger(chart->vars->z(1))),
          pzb(p.wirtinger(chart->vars->zb(1))),
          z(Expr::z(chart->vars, 1)),
          zb(Expr::zb(chart->vars, 1)),
          two(P(chart->vars, "2")),
          pi(chart, {{p}}) {}
};

Bivector11 example31(const ChartPtr& chart) {
    int n = chart->n;
    std::vector<std::vector<Expr>> B(n, std::vector<Expr>(n, chart->zero()));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            B[j][k] = P(chart->vars,
                        "2i*z" + std::to_string(j + 1) + "*zb" + std::to_string(k + 1));
    return Bivector11(chart, B);
}

void criterion_christoffels() {
    GenericCstar gc;
    Connection conn = levi_civita(cylinder_gstar(gc.chart), gc.pi);
    const Expr &p = gc.p, &pz = gc.pz, &pzb = gc.pzb, &z = gc.z, &zb = gc.zb, &two = gc.two;

    require_eq(conn.christoffel(0, 0, 0), p / (two * zb), "Gamma^1_11");
    require_eq(conn.christoffel(0, 0, 1), p / (two * z) - pz, "Gamma^2_11");
    require_eq(conn.christoffel(0, 1, 0), -(p / (two * z)) + pz, "Gamma^1_12");
    require_eq(conn.christoffel(0, 1, 1), p / (two * zb), "Gamma^2_12");
    require_eq(conn.christoffel(1, 0, 0), -(p / (two * z)), "Gamma^1_21");
    require_eq(conn.christoffel(1, 0, 1), p / (two * zb) - pzb, "Gamma^2_21");
    require_eq(conn.christoffel(1, 1, 0), -(p / (two * zb)) + pzb, "Gamma^1_22");
    require_eq(conn.christoffel(1, 1, 1), -(p / (two * z)), "Gamma^2_22");

    // The variant of Gamma^2_11 with a 1/(2 zb) leading term fails metricity
    // and must not coincide with the computed symbol.
    require(!equals(conn.christoffel(0, 0, 1), p / (two * zb) - pz),
            "Gamma^2_11 variant with the 1/(2 zb) term should differ");
}

void criterion_dpi_table() {
    GenericCstar gc;
    Connection conn = levi_civita(cylinder_gstar(gc.chart), gc.pi);
    DPiTensor dp = d_pi(conn);
    const Expr &p = gc.p, &pz = gc.pz, &pzb = gc.pzb, &z = gc.z, &zb = gc.zb;

    require(dp.at(0, 0, 0).is_zero(), "D_dz pi(dz,dz) should vanish");
    require(dp.at(1, 0, 0).is_zero(), "D_dzb pi(dz,dz) should vanish");
    require(dp.at(1, 1, 1).is_zero(), "D_dzb pi(dzb,dzb) should vanish");
    require_eq(dp.at(0, 1, 0), -(p * pzb) + p * p / zb, "D_dz pi(dzb,dz)");
    require_eq(dp.at(0, 0, 1), p * pzb - p * p / zb, "D_dz pi(dz,dzb)");
    require_eq(dp.at(1, 0, 1), p * p / z - p * pz, "D_dzb pi(dz,dzb)");
    require_eq(dp.at(1, 1, 0), -(p * p / z) + p * pz, "D_dzb pi(dzb,dz)");
}

void criterion_riemann_poisson_family() {
    auto family = make_chart(1, {true}, {"c"});
    require(is_riemann_poisson(cylinder_gstar(family), Bivector11(family, {{P(family->vars, "c*z1*zb1")}}))
                .passed(),
            "pi11 = c z zb should be Riemann-Poisson for symbolic c");

    auto cstar = make_chart(1, {true});
    require(is_riemann_poisson(cylinder_gstar(cstar), Bivector11(cstar, {{P(cstar->vars, "2i*z1*zb1")}}))
                .passed(),
            "pi11 = 2i z zb should be Riemann-Poisson");

    auto lin = make_chart(1, {true});
    Bivector11 pi_lin(lin, {{Expr::z(lin->vars, 1)}});
    Verdict v = is_riemann_poisson(cylinder_gstar(lin), pi_lin);
    require(v.status == Status::fail, "pi11 = z should fail");
    Expr want = P(lin->vars, "z1^2/zb1");
    bool found = false;
    for (const Witness& w : v.witnesses)
        if (equals(parse_expr(w.expression, lin->vars), want)) found = true;
    require(found, "pi11 = z witness should include z1^2/zb1");

    Connection conn = levi_civita(cylinder_gstar(lin), pi_lin);
    require_eq(d_pi(conn).at(0, 1, 0), want, "D_dz pi(dzb,dz) for pi11 = z");
}

void criterion_poisson_fields() {
    auto chart = make_chart(1, {true}, {"k"});
    const auto& V = chart->vars;
    Bivector11 pi(chart, {{P(V, "2i*z1*zb1")}});

    VectorField hol(chart, {P(V, "k*z1"), chart->zero()});
    VectorField antihol(chart, {chart->zero(), P(V, "conj(k)*zb1")});
    require(is_poisson_vector_field(hol, pi).passed(), "k z d/dz should be Poisson");
    require(is_poisson_vector_field(antihol, pi).passed(), "conj(k) zb d/dzb should be Poisson");

    VectorField quad(chart, {P(V, "z1^2"), chart->zero()});
    Verdict v = is_poisson_vector_field(quad, pi);
    require(v.status == Status::fail, "z^2 d/dz should not be Poisson");
    require_eq(lie_derivative_bivector(quad, pi).m.at(0, 1), P(V, "-2i*z1^2*zb1"),
               "(L_X pi)(dz,dzb) for X = z^2 d/dz");
}

void criterion_jacobi() {
    GenericCstar gc;
    require(jacobi_tensor(gc.pi).is_zero(), "n=1 generic pi11 jacobi tensor");
    require(is_poisson(gc.pi).passed(), "n=1 generic pi11 verdict");
    require(jacobiator(gc.pi, gc.z, gc.zb, gc.z * gc.zb).is_zero(),
            "n=1 generic pi11 jacobiator on z, zb, z zb");

    auto n2 = make_chart(2);
    require(jacobi_tensor(example31(n2)).is_zero(), "rank-one n=2 jacobi tensor");

    Bivector11 bad(n2, {{n2->one(), n2->zero()},
                        {n2->zero(), P(n2->vars, "z1*zb1")}});
    AntiSym3 jt = jacobi_tensor(bad);
    require(!jt.is_zero(), "diag(1, z1 zb1) should fail Jacobi");
    // indices: z2 = 1, zb1 = 2, zb2 = 3
    require_eq(jt.component(2, 1, 3), P(n2->vars, "-zb1"), "jacobiator(zb1, z2, zb2)");

    EvalPoint pt;
    pt.coords = {{1.0, 0.0}, {1.0, 0.0}};
    std::complex<double> num = numeric_jacobiator(
        bad, Expr::zb(n2->vars, 1), Expr::z(n2->vars, 2), Expr::zb(n2->vars, 2), pt);
    require(std::abs(num - std::complex<double>(-1.0, 0.0)) <= 1e-6,
            "numeric jacobiator at z=(1,1): got " + std::to_string(num.real()) + "+" +
                std::to_string(num.imag()) + "i, want -1");
}

void criterion_reality_j_invariance() {
    auto n2 = make_chart(2);
    require(reality_check(example31(n2)).passed(), "rank-one n=2 reality");

    std::mt19937_64 rng(20260814);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        auto chart = make_chart(n);
        const auto& V = chart->vars;
        auto coeff = [&]() {
            long re = static_cast<long>(rng() % 7) - 3;
            long im = static_cast<long>(rng() % 7) - 3;
            return Expr::constant(V, GaussRational(Rational(re), Rational(im)));
        };
        auto monomial = [&]() {
            Expr m = coeff();
            for (int f = 0; f < 2; ++f) {
                int j = 1 + static_cast<int>(rng() % n);
                if (rng() % 2) m = m * Expr::z(V, j);
                if (rng() % 2) m = m * Expr::zb(V, j);
            }
            return m;
        };
        std::vector<std::vector<Expr>> B(n, std::vector<Expr>(n, chart->zero()));
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) B[j][k] = monomial() + monomial();
        GeneralBivector re = Bivector11(chart, B).realified();
        GeneralBivector jre = apply_J(re);
        for (int a = 0; a < chart->dim(); ++a)
            for (int b = 0; b < chart->dim(); ++b)
                require(equals(jre.m.at(a, b), re.m.at(a, b)),
                        "apply_J should fix a (1,1) bivector, trial " + std::to_string(trial));
    }
}

void criterion_connection_axioms() {
    auto cstar = make_chart(1, {true});
    Bivector11 pi(cstar, {{P(cstar->vars, "2i*z1*zb1")}});
    CotangentMetric gs = cylinder_gstar(cstar);
    require(connection_axioms(gs, pi, levi_civita(gs, pi)).passed(), "C* connection axioms");

    auto n2 = make_chart(2);
    Bivector11 pi2 = example31(n2);
    CotangentMetric flat = flat_gstar(n2);
    require(connection_axioms(flat, pi2, levi_civita(flat, pi2)).passed(),
            "flat g* with rank-one n=2 connection axioms");
}

void criterion_prop42_equivalence() {
    const char* names[] = {"cstar.toml",        "cstar-family.toml", "cstar-generic.toml",
                           "example31-n2.toml", "flat-n2.toml",      "jacobi-counterexample.toml"};
    int swept = 0;
    for (const char* name : names) {
        Manifest m = load_manifest(std::string(MANIFEST_DIR) + "/" + name);
        if (!m.poisson || !m.cotangent) continue;
        Verdict v = prop42_equivalence(*m.cotangent, *m.poisson);
        require(v.passed(), std::string(name) + ": definition and sweeps disagree");
        ++swept;
    }
    require(swept >= 5, "expected at least five manifests with pi and g*");
}

void criterion_kahler() {
    auto cstar = make_chart(1, {true});
    HermitianMetric h1(cstar, {{P(cstar->vars, "z1*zb1")}});
    Decomposition d1 = decompose(h1);
    require(recompose_check(h1, d1).passed(), "C* recomposition h = g + i w");
    require(compatibility_triple(d1.g, d1.omega).passed(), "C* compatible triple");
    require(is_closed(d1.omega).passed(), "C* fundamental form closed");

    auto n2 = make_chart(2);
    HermitianMetric h2(n2, {{n2->one(), n2->zero()}, {n2->zero(), n2->one()}});
    Decomposition d2 = decompose(h2);
    require(recompose_check(h2, d2).passed(), "flat n=2 recomposition");
    require(compatibility_triple(d2.g, d2.omega).passed(), "flat n=2 compatible triple");
    require(is_closed(d2.omega).passed(), "flat n=2 fundamental form closed");

    HermitianMetric h3(n2, {{P(n2->vars, "1 + z2*zb2"), n2->zero()}, {n2->zero(), n2->one()}});
    require(hermitian_check(h3).passed(), "witness form is Hermitian");
    require(is_closed(decompose(h3).omega).status == Status::fail,
            "h = diag(1 + z2 zb2, 1) should not be closed");
}

void criterion_fd_oracle() {
    auto chart = make_chart(1, {true}, {"k"});
    const auto& V = chart->vars;
    Bivector11 pi(chart, {{P(V, "2i*z1*zb1")}});

    std::vector<Expr> fns = {
        P(V, "k*z1^2 + conj(k)*zb1 + 1"), P(V, "z1/zb1"),
        P(V, "(z1 + zb1)^2 - 3i*z1*zb1"), P(V, "1/(z1*zb1) + z1^3"),
        P(V, "2i*z1*zb1"),
    };

    PointSampler sampler(42);
    std::vector<EvalPoint> pts;
    for (int s = 0; s < 20; ++s) pts.push_back(sampler.sample_point(*V));

    int vars[] = {V->z(1), V->zb(1)};
    for (const Expr& f : fns)
        for (int var : vars) {
            Expr sym = f.wirtinger(var);
            for (const EvalPoint& pt : pts)
                require(approx_equal(sym.eval(pt), fd_derive(f, var, pt), 1e-6),
                        "wirtinger of " + f.str() + " disagrees with fd");
        }

    auto nbracket = [&](const Expr& f, const Expr& g, const EvalPoint& pt) {
        std::complex<double> b = pi.B[0][0].eval(pt);
        return b * (fd_derive(f, V->z(1), pt) * fd_derive(g, V->zb(1), pt) -
                    fd_derive(f, V->zb(1), pt) * fd_derive(g, V->z(1), pt));
    };
    std::pair<int, int> pairs[] = {{0, 1}, {2, 3}, {1, 4}};
    for (auto [a, b] : pairs) {
        Expr sym = bracket(pi, fns[a], fns[b]);
        for (const EvalPoint& pt : pts)
            require(approx_equal(sym.eval(pt), nbracket(fns[a], fns[b], pt), 1e-6),
                    "bracket {" + fns[a].str() + ", " + fns[b].str() + "} disagrees with fd");
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* description;
        std::function<void()> run;
    };
    std::vector<Criterion> criteria = {
        {"Christoffel table for generic pi11 on the C* chart", criterion_christoffels},
        {"D pi component table for generic pi11", criterion_dpi_table},
        {"Riemann-Poisson verdicts across the pi11 family", criterion_riemann_poisson_family},
        {"Poisson vector field verdicts on C*", criterion_poisson_fields},
        {"Jacobi verdicts with exact and numeric witnesses", criterion_jacobi},
        {"reality and J-invariance of (1,1) bivectors", criterion_reality_j_invariance},
        {"connection axioms on C* and on flat g* at n=2", criterion_connection_axioms},
        {"Prop 4.2 sweeps agree with the definition on bundled manifests",
         criterion_prop42_equivalence},
        {"Kahler decomposition, compatible triple, closedness", criterion_kahler},
        {"finite-difference oracle agreement at 20 seeded points", criterion_fd_oracle},
    };

    int failures = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        std::string reason;
        try {
            criteria[k].run();
        } catch (const std::exception& e) {
            reason = e.what();
        }
        if (reason.empty()) {
            std::printf("[PASS] criterion %2zu: %s\n", k + 1, criteria[k].description);
        } else {
            std::printf("[FAIL] criterion %2zu: %s\n        %s\n", k + 1,
                        criteria[k].description, reason.c_str());
            ++failures;
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
