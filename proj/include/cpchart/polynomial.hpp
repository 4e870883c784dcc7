#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cpchart/rational.hpp"

namespace cpchart {

// Exponent vector over a fixed VarSet size. Ordering is graded lexicographic;
// it only has to be a fixed admissible monomial order so canonical forms are
// stable and exact division terminates.
struct Monomial {
    std::vector<uint32_t> exp;

    explicit Monomial(size_t nvars = 0) : exp(nvars, 0) {}

    int degree() const {
        int d = 0;
        for (auto e : exp) d += static_cast<int>(e);
        return d;
    }
    bool is_constant() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        for (size_t k = 0; k < exp.size(); ++k)
            if (exp[k] > m.exp[k]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.exp.size());
        for (size_t k = 0; k < a.exp.size(); ++k) r.exp[k] = a.exp[k] + b.exp[k];
        return r;
    }
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.exp.size());
        for (size_t k = 0; k < a.exp.size(); ++k) r.exp[k] = a.exp[k] - b.exp[k];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exp < b.exp;  // graded lex
    }
};

// Multivariate polynomial with GaussRational coefficients. Invariant: no zero
// coefficients are stored, every monomial has the same width.
class Polynomial {
public:
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const GaussRational& c);
    static Polynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant()); }
    size_t num_terms() const { return terms_.size(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    const std::map<Monomial, GaussRational>& terms() const { return terms_; }

    // Leading term in the monomial order; polynomial must be nonzero.
    const std::pair<const Monomial, GaussRational>& leading() const { return *terms_.rbegin(); }

    void add_term(const Monomial& m, const GaussRational& c);

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const GaussRational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial derivative(int var) const;

    // Applies an index permutation to every monomial and a coefficient map;
    // used for conjugation (perm = conjugate_index, map = complex conjugate)
    // and for lifting into an extended VarSet.
    Polynomial remap(int new_nvars, const std::vector<int>& index_map, bool conjugate_coeffs) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& values) const;

    // Componentwise minimum exponent over all terms (the monomial content).
    Monomial monomial_content() const;
    Polynomial divided_by_monomial(const Monomial& m) const;

    // Exact polynomial division; nullopt if the remainder is nonzero.
    static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

private:
    int nvars_;
    std::map<Monomial, GaussRational> terms_;
};

}  // namespace cpchart
