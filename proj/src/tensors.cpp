#include "cpchart/tensors.hpp"

#include "cpchart/errors.hpp"

namespace cpchart {

ChartPtr make_chart(int n, std::vector<bool> origin_excluded, std::vector<std::string> constants) {
    if (origin_excluded.empty()) origin_excluded.assign(n, false);
    if (static_cast<int>(origin_excluded.size()) != n)
        throw DimensionError("origin_excluded must have one flag per coordinate");
    Chart c{n, std::move(origin_excluded), make_varset(n, std::move(constants))};
    return std::make_shared<const Chart>(std::move(c));
}

ExprMatrix::ExprMatrix(int rows, int cols, const Expr& fill)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

ExprMatrix ExprMatrix::zeros(const ChartPtr& chart, int rows, int cols) {
    return ExprMatrix(rows, cols, chart->zero());
}

bool ExprMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (!equals(at(r, c), at(c, r))) return false;
    return true;
}

bool ExprMatrix::is_skew() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r; c < cols_; ++c)
            if (!equals(at(r, c), -at(c, r))) return false;
    return true;
}

namespace {

void check_comp_count(const ChartPtr& chart, const std::vector<Expr>& comps, const char* what) {
    if (static_cast<int>(comps.size()) != chart->dim())
        throw DimensionError(std::string(what) + " needs 2n components");
}

std::vector<Expr> zero_comps(const ChartPtr& c) {
    return std::vector<Expr>(static_cast<size_t>(c->dim()), c->zero());
}

}  // namespace

VectorField::VectorField(ChartPtr c, std::vector<Expr> comps) : chart(std::move(c)), comp(std::move(comps)) {
    check_comp_count(chart, comp, "vector field");
}

VectorField VectorField::zero(const ChartPtr& c) { return VectorField(c, zero_comps(c)); }

VectorField VectorField::basis(const ChartPtr& c, int a) {
    auto comps = zero_comps(c);
    comps[a] = c->one();
    return VectorField(c, std::move(comps));
}

Expr VectorField::apply(const Expr& f) const {
    Expr acc = chart->zero();
    for (int a = 0; a < chart->dim(); ++a) acc += comp[a] * f.wirtinger(a);
    return acc;
}

VectorField VectorField::operator-() const {
    VectorField r = *this;
    for (auto& e : r.comp) e = -e;
    return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField r = a;
    for (int k = 0; k < a.chart->dim(); ++k) r.comp[k] += b.comp[k];
    return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField r = a;
    for (int k = 0; k < a.chart->dim(); ++k) r.comp[k] -= b.comp[k];
    return r;
}

VectorField VectorField::scaled(const Expr& f) const {
    VectorField r = *this;
    for (auto& e : r.comp) e *= f;
    return r;
}

bool VectorField::is_zero() const {
    for (const auto& e : comp)
        if (!e.is_zero()) return false;
    return true;
}

OneForm::OneForm(ChartPtr c, std::vector<Expr> comps) : chart(std::move(c)), comp(std::move(comps)) {
    check_comp_count(chart, comp, "one-form");
}

OneForm OneForm::zero(const ChartPtr& c) { return OneForm(c, zero_comps(c)); }

OneForm OneForm::cobasis(const ChartPtr& c, int a) {
    auto comps = zero_comps(c);
    comps[a] = c->one();
    return OneForm(c, std::move(comps));
}

OneForm OneForm::operator-() const {
    OneForm r = *this;
    for (auto& e : r.comp) e = -e;
    return r;
}

OneForm operator+(const OneForm& a, const OneForm& b) {
    OneForm r = a;
    for (int k = 0; k < a.chart->dim(); ++k) r.comp[k] += b.comp[k];
    return r;
}

OneForm operator-(const OneForm& a, const OneForm& b) {
    OneForm r = a;
    for (int k = 0; k < a.chart->dim(); ++k) r.comp[k] -= b.comp[k];
    return r;
}

OneForm OneForm::scaled(const Expr& f) const {
    OneForm r = *this;
    for (auto& e : r.comp) e *= f;
    return r;
}

bool OneForm::is_zero() const {
    for (const auto& e : comp)
        if (!e.is_zero()) return false;
    return true;
}

GeneralBivector::GeneralBivector(ChartPtr c, ExprMatrix mat) : chart(std::move(c)), m(std::move(mat)) {
    if (m.rows() != chart->dim() || m.cols() != chart->dim())
        throw DimensionError("bivector matrix must be 2n x 2n");
    if (!m.is_skew()) throw DimensionError("bivector matrix must be skew");
}

GeneralBivector GeneralBivector::zero(const ChartPtr& c) {
    return GeneralBivector(c, ExprMatrix::zeros(c, c->dim(), c->dim()));
}

bool GeneralBivector::is_zero() const {
    for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b)
            if (!m.at(a, b).is_zero()) return false;
    return true;
}

Bivector11::Bivector11(ChartPtr c, std::vector<std::vector<Expr>> b) : chart(std::move(c)), B(std::move(b)) {
    if (static_cast<int>(B.size()) != chart->n) throw DimensionError("Bivector11 matrix must be n x n");
    for (const auto& row : B)
        if (static_cast<int>(row.size()) != chart->n)
            throw DimensionError("Bivector11 matrix must be n x n");
}

Bivector11 Bivector11::zero(const ChartPtr& c) {
    std::vector<std::vector<Expr>> b(c->n, std::vector<Expr>(c->n, c->zero()));
    return Bivector11(c, std::move(b));
}

GeneralBivector Bivector11::realified() const {
    int n = chart->n;
    ExprMatrix m = ExprMatrix::zeros(chart, 2 * n, 2 * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            m.at(j, n + k) = B[j][k];
            m.at(n + k, j) = -B[j][k];
        }
    return GeneralBivector(chart, std::move(m));
}

TwoForm::TwoForm(ChartPtr c, ExprMatrix mat) : chart(std::move(c)), m(std::move(mat)) {
    if (m.rows() != chart->dim() || m.cols() != chart->dim())
        throw DimensionError("two-form matrix must be 2n x 2n");
    if (!m.is_skew()) throw DimensionError("two-form matrix must be skew");
}

TwoForm TwoForm::zero(const ChartPtr& c) {
    return TwoForm(c, ExprMatrix::zeros(c, c->dim(), c->dim()));
}

Expr TwoForm::apply(const VectorField& X, const VectorField& Y) const {
    Expr acc = chart->zero();
    for (int a = 0; a < chart->dim(); ++a)
        for (int b = 0; b < chart->dim(); ++b) acc += m.at(a, b) * X.comp[a] * Y.comp[b];
    return acc;
}

bool TwoForm::is_zero() const {
    for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b)
            if (!m.at(a, b).is_zero()) return false;
    return true;
}

bool TwoForm::is_one_one() const {
    int n = chart->n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!m.at(a, b).is_zero() || !m.at(n + a, n + b).is_zero()) return false;
    return true;
}

AntiSym3::AntiSym3(ChartPtr c) : chart(std::move(c)) {
    int d = chart->dim();
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            for (int cc = b + 1; cc < d; ++cc) triples.push_back({a, b, cc});
    comp.assign(triples.size(), chart->zero());
}

AntiSym3 AntiSym3::build(const ChartPtr& c, const std::function<Expr(int, int, int)>& f) {
    AntiSym3 t(c);
    for (size_t k = 0; k < t.triples.size(); ++k)
        t.comp[k] = f(t.triples[k][0], t.triples[k][1], t.triples[k][2]);
    return t;
}

int AntiSym3::slot(int a, int b, int c) const {
    for (size_t k = 0; k < triples.size(); ++k)
        if (triples[k][0] == a && triples[k][1] == b && triples[k][2] == c)
            return static_cast<int>(k);
    return -1;
}

Expr AntiSym3::component(int a, int b, int c) const {
    if (a == b || b == c || a == c) return chart->zero();
    int i = a, j = b, k = c;
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    const Expr& e = comp[slot(i, j, k)];
    return sign > 0 ? e : -e;
}

void AntiSym3::set(int a, int b, int c, const Expr& e) {
    if (a >= b || b >= c) throw DimensionError("AntiSym3::set wants a strictly increasing triple");
    comp[slot(a, b, c)] = e;
}

bool AntiSym3::is_zero() const {
    for (const auto& e : comp)
        if (!e.is_zero()) return false;
    return true;
}

HermitianMetric::HermitianMetric(ChartPtr c, std::vector<std::vector<Expr>> h)
    : chart(std::move(c)), H(std::move(h)) {
    if (static_cast<int>(H.size()) != chart->n) throw DimensionError("Hermitian matrix must be n x n");
    for (const auto& row : H)
        if (static_cast<int>(row.size()) != chart->n)
            throw DimensionError("Hermitian matrix must be n x n");
}

bool HermitianMetric::is_hermitian_pointwise(int* bad_j, int* bad_k) const {
    for (int j = 0; j < chart->n; ++j)
        for (int k = 0; k < chart->n; ++k)
            if (!equals(H[j][k].conjugate(), H[k][j])) {
                if (bad_j) *bad_j = j;
                if (bad_k) *bad_k = k;
                return false;
            }
    return true;
}

CotangentMetric::CotangentMetric(ChartPtr c, ExprMatrix g) : chart(std::move(c)), G(std::move(g)) {
    if (G.rows() != chart->dim() || G.cols() != chart->dim())
        throw DimensionError("cotangent metric must be 2n x 2n");
    if (!G.is_symmetric()) throw DimensionError("cotangent metric must be symmetric");
}

Expr CotangentMetric::apply(const OneForm& a, const OneForm& b) const {
    Expr acc = chart->zero();
    for (int r = 0; r < chart->dim(); ++r)
        for (int c = 0; c < chart->dim(); ++c) acc += a.comp[r] * b.comp[c] * G.at(r, c);
    return acc;
}

RiemannMetric::RiemannMetric(ChartPtr c, ExprMatrix g) : chart(std::move(c)), G(std::move(g)) {
    if (G.rows() != chart->dim() || G.cols() != chart->dim())
        throw DimensionError("metric must be 2n x 2n");
    if (!G.is_symmetric()) throw DimensionError("metric must be symmetric");
}

Expr RiemannMetric::apply(const VectorField& X, const VectorField& Y) const {
    Expr acc = chart->zero();
    for (int r = 0; r < chart->dim(); ++r)
        for (int c = 0; c < chart->dim(); ++c) acc += X.comp[r] * Y.comp[c] * G.at(r, c);
    return acc;
}

}  // namespace cpchart
