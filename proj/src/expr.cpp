#include "cpchart/expr.hpp"

#include <sstream>

#include "cpchart/errors.hpp"

namespace cpchart {

Expr::Expr(VarSetPtr vars) : vars_(std::move(vars)), num_(vars_->num_vars()), den_(vars_->num_vars()) {
    den_.add_term(Monomial(vars_->num_vars()), GaussRational(1));
}

Expr::Expr(VarSetPtr vars, Polynomial num, Polynomial den)
    : vars_(std::move(vars)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

Expr Expr::constant(const VarSetPtr& vars, const GaussRational& c) {
    Expr e(vars);
    e.num_ = Polynomial::constant(vars->num_vars(), c);
    return e;
}

Expr Expr::variable(const VarSetPtr& vars, int index) {
    Expr e(vars);
    e.num_ = Polynomial::variable(vars->num_vars(), index);
    return e;
}

void Expr::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero expression");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(vars_->num_vars(), GaussRational(1));
        return;
    }
    // Cancel the monomial content shared by numerator and denominator.
    Monomial cn = num_.monomial_content();
    Monomial cd = den_.monomial_content();
    Monomial common(vars_->num_vars());
    bool any = false;
    for (size_t k = 0; k < common.exp.size(); ++k) {
        common.exp[k] = std::min(cn.exp[k], cd.exp[k]);
        any = any || common.exp[k] > 0;
    }
    if (any) {
        num_ = num_.divided_by_monomial(common);
        den_ = den_.divided_by_monomial(common);
    }
    // Full cancellation when the denominator divides the numerator.
    if (!den_.is_constant()) {
        if (auto q = Polynomial::divide_exact(num_, den_)) {
            num_ = std::move(*q);
            den_ = Polynomial::constant(vars_->num_vars(), GaussRational(1));
        }
    }
    // Monic denominator fixes the scalar gauge of the pair.
    const GaussRational& lead = den_.leading().second;
    if (!lead.is_one()) {
        GaussRational inv = GaussRational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

namespace {

void require_same_vars(const Expr& a, const Expr& b) {
    if (!(*a.vars() == *b.vars()))
        throw DimensionError("expressions over different variable sets");
}

}  // namespace

Expr Expr::operator-() const {
    Expr r = *this;
    r.num_ = -r.num_;
    return r;
}

Expr operator+(const Expr& a, const Expr& b) {
    require_same_vars(a, b);
    if (a.den_ == b.den_) return Expr(a.vars_, a.num_ + b.num_, a.den_);
    return Expr(a.vars_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Expr operator-(const Expr& a, const Expr& b) {
    require_same_vars(a, b);
    if (a.den_ == b.den_) return Expr(a.vars_, a.num_ - b.num_, a.den_);
    return Expr(a.vars_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Expr operator*(const Expr& a, const Expr& b) {
    require_same_vars(a, b);
    return Expr(a.vars_, a.num_ * b.num_, a.den_ * b.den_);
}

Expr operator/(const Expr& a, const Expr& b) {
    require_same_vars(a, b);
    if (b.is_zero()) throw std::domain_error("division by zero expression");
    return Expr(a.vars_, a.num_ * b.den_, a.den_ * b.num_);
}

Expr Expr::pow(int k) const {
    if (k < 0) {
        if (is_zero()) throw std::domain_error("division by zero expression");
        return Expr(vars_, den_, num_).pow(-k);
    }
    Expr r = Expr::one(vars_);
    Expr base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

Expr Expr::wirtinger(int var) const {
    if (!vars_->is_coord(var))
        throw std::out_of_range("wirtinger derivative is only defined for chart variables");
    // (n/d)' = (n'd - nd') / d^2
    Polynomial dn = num_.derivative(var);
    Polynomial dd = den_.derivative(var);
    return Expr(vars_, dn * den_ - num_ * dd, den_ * den_);
}

Expr Expr::conjugate() const {
    std::vector<int> perm(vars_->num_vars());
    for (int v = 0; v < vars_->num_vars(); ++v) perm[v] = vars_->conjugate_index(v);
    return Expr(vars_, num_.remap(vars_->num_vars(), perm, true), den_.remap(vars_->num_vars(), perm, true));
}

Expr Expr::lifted(const VarSetPtr& bigger) const {
    if (*bigger == *vars_) return *this;
    if (bigger->n() != vars_->n()) throw DimensionError("lift must preserve chart dimension");
    std::vector<int> map(vars_->num_vars());
    for (int v = 0; v < 2 * vars_->n(); ++v) map[v] = v;
    for (int t = 0; t < vars_->num_constants(); ++t) {
        auto idx = bigger->index_of(vars_->constant_names()[t]);
        if (!idx) throw DimensionError("lift target is missing constant '" + vars_->constant_names()[t] + "'");
        map[vars_->constant(t)] = *idx;
        map[vars_->constant(t) + 1] = *idx + 1;
    }
    return Expr(bigger, num_.remap(bigger->num_vars(), map, false), den_.remap(bigger->num_vars(), map, false));
}

std::complex<double> Expr::eval(const EvalPoint& p, double pole_tol) const {
    auto values = p.values(*vars_);
    std::complex<double> d = den_.eval(values);
    if (std::abs(d) < pole_tol) throw PoleError("evaluation at a pole of " + str());
    return num_.eval(values) / d;
}

bool equals(const Expr& a, const Expr& b) {
    if (!(*a.vars() == *b.vars()))
        throw DimensionError("expressions over different variable sets");
    return a.num() * b.den() == b.num() * a.den();
}

std::complex<double> fd_derive(const Expr& e, int var, const EvalPoint& p, double h) {
    const VarSet& vars = *e.vars();
    if (!vars.is_coord(var)) throw std::out_of_range("fd_derive needs a chart variable");
    bool holo = vars.is_holomorphic_coord(var);
    int j = holo ? var : var - vars.n();

    auto shifted = [&](double dx, double dy) {
        EvalPoint q = p;
        q.coords[j] += std::complex<double>(dx, dy);
        return e.eval(q);
    };
    std::complex<double> fx = (shifted(h, 0) - shifted(-h, 0)) / (2 * h);
    std::complex<double> fy = (shifted(0, h) - shifted(0, -h)) / (2 * h);
    // d/dz = (d/dx - i d/dy)/2, d/dzb = (d/dx + i d/dy)/2.
    std::complex<double> i(0, 1);
    return holo ? (fx - i * fy) * 0.5 : (fx + i * fy) * 0.5;
}

namespace {

void print_poly(std::ostringstream& out, const Polynomial& p, const VarSet& vars) {
    if (p.is_zero()) {
        out << "0";
        return;
    }
    bool first = true;
    // Leading term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        GaussRational coeff = c;
        bool mixed = coeff.re != 0 && coeff.im != 0;
        if (first) {
            if (!mixed && (coeff.re < 0 || coeff.im < 0)) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            if (!mixed && (coeff.re < 0 || coeff.im < 0)) {
                out << " - ";
                coeff = -coeff;
            } else {
                out << " + ";
            }
        }
        first = false;

        bool printed_coeff = false;
        if (m.is_constant() || !coeff.is_one()) {
            out << to_string(coeff);
            printed_coeff = true;
        }
        bool first_factor = !printed_coeff;
        for (size_t v = 0; v < m.exp.size(); ++v) {
            if (m.exp[v] == 0) continue;
            if (!first_factor) out << "*";
            first_factor = false;
            out << vars.name(static_cast<int>(v));
            if (m.exp[v] > 1) out << "^" << m.exp[v];
        }
    }
}

int factor_count(const Monomial& m) {
    int k = 0;
    for (auto e : m.exp)
        if (e > 0) ++k;
    return k;
}

}  // namespace

std::string Expr::str() const {
    std::ostringstream out;
    if (den_.is_constant()) {
        // Monic constant denominator is exactly 1.
        print_poly(out, num_, *vars_);
        return out.str();
    }
    bool wrap_num = num_.num_terms() > 1;
    if (wrap_num) out << "(";
    print_poly(out, num_, *vars_);
    if (wrap_num) out << ")";
    out << "/";
    bool wrap_den = den_.num_terms() > 1 || factor_count(den_.terms().begin()->first) > 1;
    if (wrap_den) out << "(";
    print_poly(out, den_, *vars_);
    if (wrap_den) out << ")";
    return out.str();
}

}  // namespace cpchart
