#include "cpchart/checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>

#include "cpchart/connection.hpp"
#include "cpchart/kahler.hpp"
#include "cpchart/linalg.hpp"

namespace cpchart {
namespace {

using cd = std::complex<double>;

// Expensive finite-difference probes run on a prefix of the sample set; cheap
// evaluation probes use every point.
constexpr int kFdPointCap = 8;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

struct ProbeStats {
    double max_claim = -1;  // largest |eval| of a claimed-zero expression
    double max_probe = -1;  // largest normalized symbolic-vs-numeric gap
    int pole_skips = 0;

    void claim(double v) { max_claim = std::max(max_claim, v); }
    void probe(double v) { max_probe = std::max(max_probe, v); }
};

std::vector<EvalPoint> sample_points(const Manifest& m, const VarSet& vars) {
    PointSampler s(m.numeric.seed, m.numeric.modulus_min, m.numeric.modulus_max);
    std::vector<EvalPoint> pts;
    pts.reserve(static_cast<size_t>(m.numeric.samples));
    for (int k = 0; k < m.numeric.samples; ++k) pts.push_back(s.sample_point(vars));
    return pts;
}

std::optional<cd> try_eval(const Expr& e, const EvalPoint& p, const Manifest& m, ProbeStats& st) {
    try {
        return e.eval(p, m.numeric.pole_tol);
    } catch (const PoleError&) {
        ++st.pole_skips;
        return std::nullopt;
    }
}

void record_claims(const std::vector<Expr>& claims, const std::vector<EvalPoint>& pts,
                   const Manifest& m, ProbeStats& st) {
    for (const Expr& e : claims)
        for (const EvalPoint& p : pts)
            if (auto v = try_eval(e, p, m, st)) st.claim(std::abs(*v));
}

int fd_points(const Manifest& m) { return std::min(m.numeric.samples, kFdPointCap); }

// ---- jacobi ---------------------------------------------------------------

Verdict check_jacobi(const Manifest& m, const std::vector<EvalPoint>& pts, ProbeStats& st) {
    const Bivector11& pi = *m.poisson;
    Verdict v = is_poisson(pi);

    AntiSym3 t = jacobi_tensor(pi);
    record_claims(t.comp, pts, m, st);

    const ChartPtr& chart = pi.chart;
    std::vector<std::array<Expr, 3>> triples;
    if (chart->n == 1) {
        triples.push_back({Expr::z(chart->vars, 1), Expr::zb(chart->vars, 1),
                           Expr::z(chart->vars, 1) * Expr::zb(chart->vars, 1)});
    } else {
        for (int a = 0; a < chart->dim() && triples.size() < 6; ++a)
            for (int b = a + 1; b < chart->dim() && triples.size() < 6; ++b)
                for (int c = b + 1; c < chart->dim() && triples.size() < 6; ++c)
                    triples.push_back({coordinate_function(chart, a), coordinate_function(chart, b),
                                       coordinate_function(chart, c)});
    }

    for (const auto& tr : triples) {
        Expr sym = jacobiator(pi, tr[0], tr[1], tr[2]);
        Expr p1 = bracket(pi, tr[0], bracket(pi, tr[1], tr[2]));
        Expr p2 = bracket(pi, tr[1], bracket(pi, tr[2], tr[0]));
        Expr p3 = bracket(pi, tr[2], bracket(pi, tr[0], tr[1]));
        for (int k = 0; k < fd_points(m); ++k) {
            const EvalPoint& p = pts[static_cast<size_t>(k)];
            auto sv = try_eval(sym, p, m, st);
            auto s1 = try_eval(p1, p, m, st);
            auto s2 = try_eval(p2, p, m, st);
            auto s3 = try_eval(p3, p, m, st);
            if (!sv || !s1 || !s2 || !s3) continue;
            cd num = numeric_jacobiator(pi, tr[0], tr[1], tr[2], p);
            double scale = std::max({1.0, std::abs(*s1), std::abs(*s2), std::abs(*s3)});
            st.probe(std::abs(*sv - num) / scale);
        }
    }
    return v;
}

// ---- reality --------------------------------------------------------------

Verdict check_reality(const Manifest& m, const std::vector<EvalPoint>& pts, ProbeStats& st) {
    const Bivector11& pi = *m.poisson;
    Verdict v = reality_check(pi);

    int n = pi.chart->n;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Expr residual = pi.B[static_cast<size_t>(j)][static_cast<size_t>(k)].conjugate() +
                            pi.B[static_cast<size_t>(k)][static_cast<size_t>(j)];
            record_claims({residual}, pts, m, st);
            for (const EvalPoint& p : pts) {
                auto a = try_eval(pi.B[static_cast<size_t>(j)][static_cast<size_t>(k)], p, m, st);
                auto b = try_eval(pi.B[static_cast<size_t>(k)][static_cast<size_t>(j)], p, m, st);
                auto r = try_eval(residual, p, m, st);
                if (!a || !b || !r) continue;
                // numeric conjugation versus the syntactic involution
                cd num = std::conj(*a) + *b;
                double scale = std::max({1.0, std::abs(*a), std::abs(*b)});
                st.probe(std::abs(*r - num) / scale);
            }
        }
    return v;
}

// ---- j-invariance ---------------------------------------------------------

Verdict check_j_invariance(const Manifest& m, const std::vector<EvalPoint>& pts, ProbeStats& st) {
    const Bivector11& pi = *m.poisson;
    Verdict v = j_invariance_check(pi);

    GeneralBivector jpi = apply_J(pi.realified());
    GeneralBivector raw = pi.realified();
    int dim = pi.chart->dim();
    int n = pi.chart->n;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            Expr residual = jpi.m.at(a, b) - raw.m.at(a, b);
            record_claims({residual}, pts, m, st);
            for (const EvalPoint& p : pts) {
                auto val = try_eval(raw.m.at(a, b), p, m, st);
                if (!val) continue;
                cd ja = a < n ? cd(0, 1) : cd(0, -1);
                cd jb = b < n ? cd(0, 1) : cd(0, -1);
                cd num = ja * jb * *val - *val;
                double scale = std::max(1.0, std::abs(*val));
                st.probe(std::abs(num) / scale);
            }
        }
    return v;
}

// ---- poisson-field --------------------------------------------------------

Verdict check_poisson_field(const Manifest& m, const std::vector<EvalPoint>& pts, ProbeStats& st) {
    const Bivector11& pi = *m.poisson;
    Verdict out;
    GeneralBivector raw = pi.realified();
    int dim = pi.chart->dim();

    for (const auto& [name, X] : m.fields) {
        Verdict sub = is_poisson_vector_field(X, pi);
        for (Witness& w : sub.witnesses) w.location = name + ": " + w.location;
        out.absorb(sub);

        Verdict xp = xp1_check(X, pi);
        out.notes.push_back("xp1(" + name + "): " + to_string(xp.status));
        for (const Witness& w : xp.witnesses)
            out.notes.push_back("xp1(" + name + ") " + w.location + ": " + w.expression);
        for (const std::string& nt : xp.notes) out.notes.push_back("xp1(" + name + "): " + nt);

        GeneralBivector L = lie_derivative_bivector(X, pi);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) record_claims({L.m.at(a, b)}, pts, m, st);

        for (int k = 0; k < fd_points(m); ++k) {
            const EvalPoint& p = pts[static_cast<size_t>(k)];
            bool ok = true;
            std::vector<cd> xv(static_cast<size_t>(dim));
            std::vector<std::vector<cd>> pv(static_cast<size_t>(dim),
                                            std::vector<cd>(static_cast<size_t>(dim)));
            for (int a = 0; a < dim && ok; ++a) {
                auto e = try_eval(X.comp[static_cast<size_t>(a)], p, m, st);
                if (!e) ok = false;
                else xv[static_cast<size_t>(a)] = *e;
            }
            for (int a = 0; a < dim && ok; ++a)
                for (int b = 0; b < dim && ok; ++b) {
                    auto e = try_eval(raw.m.at(a, b), p, m, st);
                    if (!e) ok = false;
                    else pv[static_cast<size_t>(a)][static_cast<size_t>(b)] = *e;
                }
            if (!ok) continue;
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) {
                    cd num = 0;
                    double scale = 1.0;
                    for (int dvar = 0; dvar < dim; ++dvar) {
                        cd t1 = xv[static_cast<size_t>(dvar)] *
                                fd_derive(raw.m.at(a, b), dvar, p, m.numeric.fd_step);
                        cd t2 = pv[static_cast<size_t>(dvar)][static_cast<size_t>(b)] *
                                fd_derive(X.comp[static_cast<size_t>(a)], dvar, p, m.numeric.fd_step);
                        cd t3 = pv[static_cast<size_t>(a)][static_cast<size_t>(dvar)] *
                                fd_derive(X.comp[static_cast<size_t>(b)], dvar, p, m.numeric.fd_step);
                        num += t1 - t2 - t3;
                        scale = std::max({scale, std::abs(t1), std::abs(t2), std::abs(t3)});
                    }
                    auto sym = try_eval(L.m.at(a, b), p, m, st);
                    if (!sym) continue;
                    st.probe(std::abs(*sym - num) / scale);
                }
        }
    }
    return out;
}

// ---- riemann-poisson ------------------------------------------------------

void probe_dpi(const Manifest& m, const Connection& conn, const DPiTensor& t,
               const std::vector<EvalPoint>& pts, ProbeStats& st) {
    const Bivector11& pi = conn.pi;
    GeneralBivector raw = pi.realified();
    int dim = conn.chart->dim();
    for (int k = 0; k < fd_points(m); ++k) {
        const EvalPoint& p = pts[static_cast<size_t>(k)];
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                for (int c = b + 1; c < dim; ++c) {
                    cd num = 0;
                    double scale = 1.0;
                    bool ok = true;
                    for (int dvar = 0; dvar < dim && ok; ++dvar) {
                        auto pad = try_eval(raw.m.at(a, dvar), p, m, st);
                        auto gb = try_eval(conn.christoffel(a, b, dvar), p, m, st);
                        auto gc = try_eval(conn.christoffel(a, c, dvar), p, m, st);
                        auto pdc = try_eval(raw.m.at(dvar, c), p, m, st);
                        auto pbd = try_eval(raw.m.at(b, dvar), p, m, st);
                        if (!pad || !gb || !gc || !pdc || !pbd) {
                            ok = false;
                            break;
                        }
                        cd t1 = *pad * fd_derive(raw.m.at(b, c), dvar, p, m.numeric.fd_step);
                        cd t2 = *gb * *pdc;
                        cd t3 = *gc * *pbd;
                        num += t1 - t2 - t3;
                        scale = std::max({scale, std::abs(t1), std::abs(t2), std::abs(t3)});
                    }
                    if (!ok) continue;
                    auto sym = try_eval(t.at(a, b, c), p, m, st);
                    if (!sym) continue;
                    st.probe(std::abs(*sym - num) / scale);
                }
    }
}

Verdict check_riemann_poisson(const Manifest& m, const std::vector<EvalPoint>& pts,
                              ProbeStats& st) {
    Verdict v = is_riemann_poisson(*m.cotangent, *m.poisson);
    Connection conn = levi_civita(*m.cotangent, *m.poisson);
    DPiTensor t = d_pi(conn);
    record_claims(t.comp, pts, m, st);
    probe_dpi(m, conn, t, pts, st);
    return v;
}

// ---- connection-axioms ----------------------------------------------------

Verdict check_connection_axioms(const Manifest& m, const std::vector<EvalPoint>& pts,
                                ProbeStats& st) {
    const Bivector11& pi = *m.poisson;
    const CotangentMetric& gstar = *m.cotangent;
    Connection conn = levi_civita(gstar, pi);
    Verdict v = connection_axioms(gstar, pi, conn);

    GeneralBivector raw = pi.realified();
    int dim = pi.chart->dim();
    for (int k = 0; k < fd_points(m); ++k) {
        const EvalPoint& p = pts[static_cast<size_t>(k)];
        // metricity: pi#(e^a) g*(e^b,e^c) = g*(D_a e^b, e^c) + g*(e^b, D_a e^c)
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                for (int c = b; c < dim; ++c) {
                    cd lhs = 0, rhs = 0;
                    double scale = 1.0;
                    bool ok = true;
                    for (int dvar = 0; dvar < dim && ok; ++dvar) {
                        auto pad = try_eval(raw.m.at(a, dvar), p, m, st);
                        auto gab = try_eval(conn.christoffel(a, b, dvar), p, m, st);
                        auto gac = try_eval(conn.christoffel(a, c, dvar), p, m, st);
                        auto gdc = try_eval(gstar.G.at(dvar, c), p, m, st);
                        auto gbd = try_eval(gstar.G.at(b, dvar), p, m, st);
                        if (!pad || !gab || !gac || !gdc || !gbd) {
                            ok = false;
                            break;
                        }
                        cd t1 = *pad * fd_derive(gstar.G.at(b, c), dvar, p, m.numeric.fd_step);
                        cd t2 = *gab * *gdc;
                        cd t3 = *gac * *gbd;
                        lhs += t1;
                        rhs += t2 + t3;
                        scale = std::max({scale, std::abs(t1), std::abs(t2), std::abs(t3)});
                    }
                    if (!ok) continue;
                    st.probe(std::abs(lhs - rhs) / scale);
                }
        // torsion: Gamma^c_ab - Gamma^c_ba = d_c pi^{ab}
        for (int a = 0; a < dim; ++a)
            for (int b = a + 1; b < dim; ++b)
                for (int c = 0; c < dim; ++c) {
                    auto g1 = try_eval(conn.christoffel(a, b, c), p, m, st);
                    auto g2 = try_eval(conn.christoffel(b, a, c), p, m, st);
                    if (!g1 || !g2) continue;
                    cd der = fd_derive(raw.m.at(a, b), c, p, m.numeric.fd_step);
                    double scale = std::max({1.0, std::abs(*g1), std::abs(*g2), std::abs(der)});
                    st.probe(std::abs(*g1 - *g2 - der) / scale);
                }
    }
    return v;
}

// ---- prop42-equivalence ---------------------------------------------------

Verdict check_prop42(const Manifest& m, const std::vector<EvalPoint>& pts, ProbeStats& st) {
    Verdict v = prop42_equivalence(*m.cotangent, *m.poisson);

    Connection conn = levi_civita(*m.cotangent, *m.poisson);
    const ChartPtr& chart = m.chart;
    std::vector<Expr> claims;
    for (int a = 0; a < chart->dim(); ++a)
        for (int b = 0; b < chart->dim(); ++b) {
            OneForm ea = OneForm::cobasis(chart, a);
            OneForm eb = OneForm::cobasis(chart, b);
            Expr f = coordinate_function(chart, a) * coordinate_function(chart, b);
            claims.push_back(prop42_condition2_residual(conn, *m.poisson, f, ea, eb));
        }
    record_claims(claims, pts, m, st);
    return v;
}

// ---- hermitian ------------------------------------------------------------

Verdict check_hermitian(const Manifest& m, const std::vector<EvalPoint>& pts, ProbeStats& st) {
    const HermitianMetric& h = *m.hermitian;
    Verdict v = hermitian_check(h);

    int n = h.chart->n;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const Expr& hjk = h.H[static_cast<size_t>(j)][static_cast<size_t>(k)];
            const Expr& hkj = h.H[static_cast<size_t>(k)][static_cast<size_t>(j)];
            Expr residual = hjk.conjugate() - hkj;
            record_claims({residual}, pts, m, st);
            for (const EvalPoint& p : pts) {
                auto a = try_eval(hjk, p, m, st);
                auto b = try_eval(hkj, p, m, st);
                auto r = try_eval(residual, p, m, st);
                if (!a || !b || !r) continue;
                cd num = std::conj(*a) - *b;
                double scale = std::max({1.0, std::abs(*a), std::abs(*b)});
                st.probe(std::abs(*r - num) / scale);
            }
        }
    return v;
}

// ---- kahler-triple --------------------------------------------------------

std::optional<std::vector<std::vector<cd>>> complex_inverse(std::vector<std::vector<cd>> a) {
    size_t n = a.size();
    std::vector<std::vector<cd>> inv(n, std::vector<cd>(n, cd(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        double best = 0;
        for (size_t r = col; r < n; ++r)
            if (std::abs(a[r][col]) > best) {
                best = std::abs(a[r][col]);
                piv = r;
            }
        if (best < 1e-12) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        cd d = a[col][col];
        for (size_t c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            cd f = a[r][col];
            if (f == cd(0)) continue;
            for (size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

Verdict check_kahler_triple(const Manifest& m, const std::vector<EvalPoint>& pts, ProbeStats& st) {
    const HermitianMetric& h = *m.hermitian;
    Verdict pre = hermitian_check(h);
    if (!pre.passed()) {
        Verdict v;
        v.mark_indeterminate("hermitian precondition failed; triple not evaluated");
        return v;
    }
    Decomposition dec = decompose(h);
    Verdict v = compatibility_triple(dec.g, dec.omega);
    v.absorb(recompose_check(h, dec));

    int dim = m.chart->dim();
    int n = m.chart->n;
    PointSampler vec_sampler(m.numeric.seed + 1, m.numeric.modulus_min, m.numeric.modulus_max);
    for (int k = 0; k < fd_points(m); ++k) {
        const EvalPoint& p = pts[static_cast<size_t>(k)];
        std::vector<std::vector<cd>> G(static_cast<size_t>(dim),
                                       std::vector<cd>(static_cast<size_t>(dim)));
        std::vector<std::vector<cd>> W = G;
        bool ok = true;
        for (int a = 0; a < dim && ok; ++a)
            for (int b = 0; b < dim && ok; ++b) {
                auto g = try_eval(dec.g.G.at(a, b), p, m, st);
                auto w = try_eval(dec.omega.m.at(a, b), p, m, st);
                if (!g || !w) ok = false;
                else {
                    G[static_cast<size_t>(a)][static_cast<size_t>(b)] = *g;
                    W[static_cast<size_t>(a)][static_cast<size_t>(b)] = *w;
                }
            }
        if (!ok) continue;

        // identity pair on random numeric vectors
        std::vector<cd> u(static_cast<size_t>(dim)), w2(static_cast<size_t>(dim));
        for (int a = 0; a < dim; ++a) {
            u[static_cast<size_t>(a)] = vec_sampler.sample_value();
            w2[static_cast<size_t>(a)] = vec_sampler.sample_value();
        }
        auto jf = [&](int a) { return a < n ? cd(0, 1) : cd(0, -1); };
        cd gxy = 0, w_jx_y = 0, wxy = 0, g_x_jy = 0;
        double scale = 1.0;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                cd ua = u[static_cast<size_t>(a)], vb = w2[static_cast<size_t>(b)];
                gxy += ua * G[static_cast<size_t>(a)][static_cast<size_t>(b)] * vb;
                w_jx_y += jf(a) * ua * W[static_cast<size_t>(a)][static_cast<size_t>(b)] * vb;
                wxy += ua * W[static_cast<size_t>(a)][static_cast<size_t>(b)] * vb;
                g_x_jy += ua * G[static_cast<size_t>(a)][static_cast<size_t>(b)] * jf(b) * vb;
            }
        scale = std::max({scale, std::abs(gxy), std::abs(wxy)});
        st.probe(std::abs(gxy - w_jx_y) / scale);
        st.probe(std::abs(wxy - g_x_jy) / scale);

        // G^{-1} W = J by numeric elimination
        if (auto ginv = complex_inverse(G)) {
            double worst = 0;
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) {
                    cd acc = 0;
                    for (int c = 0; c < dim; ++c)
                        acc += (*ginv)[static_cast<size_t>(a)][static_cast<size_t>(c)] *
                               W[static_cast<size_t>(c)][static_cast<size_t>(b)];
                    cd expect = (a == b) ? jf(a) : cd(0);
                    worst = std::max(worst, std::abs(acc - expect));
                }
            st.probe(worst);
        }
    }
    return v;
}

// ---- closed ---------------------------------------------------------------

Verdict check_closed(const Manifest& m, const std::vector<EvalPoint>& pts, ProbeStats& st) {
    const HermitianMetric& h = *m.hermitian;
    Verdict pre = hermitian_check(h);
    if (!pre.passed()) {
        Verdict v;
        v.mark_indeterminate("hermitian precondition failed; d(omega) not evaluated");
        return v;
    }
    Decomposition dec = decompose(h);
    Verdict v = is_closed(dec.omega);

    PointSampler nd_sampler(m.numeric.seed, m.numeric.modulus_min, m.numeric.modulus_max);
    v.absorb(nondegeneracy_evidence(dec.omega, nd_sampler, m.numeric.samples));

    ThreeForm dw = d(dec.omega);
    record_claims(dw.comp, pts, m, st);

    int dim = m.chart->dim();
    for (int k = 0; k < fd_points(m); ++k) {
        const EvalPoint& p = pts[static_cast<size_t>(k)];
        for (int a = 0; a < dim; ++a)
            for (int b = a + 1; b < dim; ++b)
                for (int c = b + 1; c < dim; ++c) {
                    cd t1 = fd_derive(dec.omega.m.at(b, c), a, p, m.numeric.fd_step);
                    cd t2 = fd_derive(dec.omega.m.at(a, c), b, p, m.numeric.fd_step);
                    cd t3 = fd_derive(dec.omega.m.at(a, b), c, p, m.numeric.fd_step);
                    auto sym = try_eval(dw.component(a, b, c), p, m, st);
                    if (!sym) continue;
                    double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
                    st.probe(std::abs(*sym - (t1 - t2 + t3)) / scale);
                }
    }
    return v;
}

// ---- dispatch -------------------------------------------------------------

Verdict dispatch(const std::string& name, const Manifest& m, const std::vector<EvalPoint>& pts,
                 ProbeStats& st) {
    if (name == "jacobi") return check_jacobi(m, pts, st);
    if (name == "reality") return check_reality(m, pts, st);
    if (name == "j-invariance") return check_j_invariance(m, pts, st);
    if (name == "poisson-field") return check_poisson_field(m, pts, st);
    if (name == "riemann-poisson") return check_riemann_poisson(m, pts, st);
    if (name == "connection-axioms") return check_connection_axioms(m, pts, st);
    if (name == "prop42-equivalence") return check_prop42(m, pts, st);
    if (name == "hermitian") return check_hermitian(m, pts, st);
    if (name == "kahler-triple") return check_kahler_triple(m, pts, st);
    if (name == "closed") return check_closed(m, pts, st);
    throw ManifestError("unknown check '" + name + "'");
}

constexpr size_t kWitnessCap = 8;

}  // namespace

Status combine_overall(const std::vector<CheckResult>& checks) {
    Status overall = Status::pass;
    for (const CheckResult& c : checks) {
        if (c.status == Status::fail) return Status::fail;
        if (c.status == Status::indeterminate) overall = Status::indeterminate;
    }
    return overall;
}

CheckReport run_checks(const Manifest& m) {
    CheckReport rep;
    rep.manifest_path = m.path;
    rep.seed = m.numeric.seed;
    rep.samples = m.numeric.samples;

    std::vector<EvalPoint> pts = sample_points(m, *m.chart->vars);

    std::vector<std::string> names = m.checks;
    std::sort(names.begin(), names.end());

    for (const std::string& name : names) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        r.name = name;
        ProbeStats st;
        Verdict v;
        try {
            v = dispatch(name, m, pts, st);
        } catch (const std::exception& e) {
            v = Verdict{};
            v.mark_indeterminate(std::string("error: ") + e.what());
        }
        r.status = v.status;
        r.notes = v.notes;
        if (v.witnesses.size() > kWitnessCap) {
            r.witnesses.assign(v.witnesses.begin(), v.witnesses.begin() + kWitnessCap);
            r.notes.push_back("(" + std::to_string(v.witnesses.size() - kWitnessCap) +
                              " more witnesses omitted)");
        } else {
            r.witnesses = v.witnesses;
        }
        if (st.max_claim >= 0) r.max_residual = st.max_claim;
        if (st.max_probe >= 0) r.max_probe_error = st.max_probe;
        if (st.pole_skips > 0)
            r.notes.push_back("skipped " + std::to_string(st.pole_skips) +
                              " evaluations at poles");
        if (r.max_probe_error && *r.max_probe_error > m.numeric.rel_tol &&
            r.status == Status::pass) {
            r.status = Status::fail;
            r.notes.push_back("internal consistency: numeric probe disagrees with symbolic pass (" +
                              fmt(*r.max_probe_error) + " > " + fmt(m.numeric.rel_tol) + ")");
        }
        auto t1 = std::chrono::steady_clock::now();
        r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rep.checks.push_back(std::move(r));
    }

    rep.overall = combine_overall(rep.checks);
    return rep;
}

}  // namespace cpchart
