#include "cpchart/polynomial.hpp"

#include <stdexcept>

namespace cpchart {

Polynomial Polynomial::constant(int nvars, const GaussRational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(nvars);
    Monomial m(nvars);
    m.exp[index] = 1;
    p.add_term(m, GaussRational(1));
    return p;
}

void Polynomial::add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const GaussRational& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exp[var] == 0) continue;
        Monomial d = m;
        d.exp[var] -= 1;
        r.add_term(d, c * GaussRational(static_cast<long>(m.exp[var])));
    }
    return r;
}

Polynomial Polynomial::remap(int new_nvars, const std::vector<int>& index_map, bool conjugate_coeffs) const {
    Polynomial r(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_nvars);
        for (size_t k = 0; k < m.exp.size(); ++k) {
            if (m.exp[k] == 0) continue;
            nm.exp[index_map[k]] += m.exp[k];
        }
        r.add_term(nm, conjugate_coeffs ? c.conj() : c);
    }
    return r;
}

std::complex<double> Polynomial::eval(const std::vector<std::complex<double>>& values) const {
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (size_t k = 0; k < m.exp.size(); ++k)
            for (uint32_t e = 0; e < m.exp[k]; ++e) t *= values[k];
        acc += t;
    }
    return acc;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return Monomial(nvars_);
    Monomial low = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        for (size_t k = 0; k < low.exp.size(); ++k) low.exp[k] = std::min(low.exp[k], m.exp[k]);
    return low;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
    Polynomial r(nvars_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm / m, c);
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial q(a.nvars_);
    Polynomial r = a;
    const auto& [lbm, lbc] = b.leading();
    while (!r.is_zero()) {
        const auto& [lrm, lrc] = r.leading();
        if (!lbm.divides(lrm)) return std::nullopt;
        Monomial qm = lrm / lbm;
        GaussRational qc = lrc / lbc;
        Polynomial t(a.nvars_);
        t.add_term(qm, qc);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

}  // namespace cpchart
