#include "grskit/family.hpp"

#include <algorithm>

namespace grskit {

EvalConfig::EvalConfig(std::vector<FieldElement> points, std::vector<FieldElement> factors)
    : points_(std::move(points)), factors_(std::move(factors)) {
    if (points_.empty()) raise(ErrorCode::out_of_range, "need at least one evaluation point");
    if (points_.size() != factors_.size())
        raise(ErrorCode::shape_mismatch, "points and factors differ in length");
    f_ = points_[0].field_ptr();
    for (const auto& x : points_) f_->require_same(x.field());
    for (const auto& v : factors_) {
        f_->require_same(v.field());
        if (v.is_zero()) raise(ErrorCode::out_of_range, "factors must be nonzero");
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j])
                raise(ErrorCode::duplicate_points, "evaluation points must be pairwise distinct");
    if (points_.size() > f_->order())
        raise(ErrorCode::out_of_range, "more points than field elements");
}

EvalConfig EvalConfig::with_unit_factors(std::vector<FieldElement> points) {
    if (points.empty()) raise(ErrorCode::out_of_range, "need at least one evaluation point");
    auto f = points[0].field_ptr();
    std::vector<FieldElement> ones(points.size(), f->one());
    return EvalConfig(std::move(points), std::move(ones));
}

Poly::Poly(FieldPtr f, std::vector<FieldElement> coeffs) : f_(std::move(f)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) f_->require_same(c.field());
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::zero(FieldPtr f) { return Poly(std::move(f), {}); }

Poly Poly::monomial(FieldPtr f, std::size_t degree) {
    std::vector<FieldElement> c(degree + 1, f->zero());
    c[degree] = f->one();
    return Poly(std::move(f), std::move(c));
}

Poly Poly::from_roots(FieldPtr f, const std::vector<FieldElement>& roots) {
    Poly acc(f, {f->one()});
    for (const auto& r : roots) {
        Poly lin(f, {-r, f->one()});
        acc = acc * lin;
    }
    return acc;
}

FieldElement Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : f_->zero();
}

FieldElement Poly::operator()(const FieldElement& x) const {
    FieldElement acc = f_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    f_->require_same(*o.f_);
    std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), f_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = c[i] + coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
    return Poly(f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    f_->require_same(*o.f_);
    if (coeffs_.empty() || o.coeffs_.empty()) return zero(f_);
    std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1, f_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    return Poly(f_, std::move(c));
}

Poly Poly::scaled(const FieldElement& s) const {
    std::vector<FieldElement> c = coeffs_;
    for (auto& x : c) x = x * s;
    return Poly(f_, std::move(c));
}

std::vector<FieldElement> evaluate(const Poly& f, const EvalConfig& cfg) {
    cfg.field().require_same(*f.field_ptr());
    std::vector<FieldElement> out;
    out.reserve(cfg.n());
    for (std::size_t i = 0; i < cfg.n(); ++i)
        out.push_back(cfg.factors()[i] * f(cfg.points()[i]));
    return out;
}

std::vector<std::size_t> degree_set(std::size_t k, std::size_t r) {
    if (r < 1 || r > k - 1) raise(ErrorCode::bad_dimension, "need 1 <= r <= k-1");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j <= k; ++j)
        if (j != k - r) out.push_back(j);
    return out;
}

namespace {

Matrix scaled_vandermonde(const EvalConfig& cfg, const std::vector<std::size_t>& degrees) {
    Matrix m = Matrix::vandermonde_rows(cfg.points(), degrees);
    Matrix out(cfg.field_ptr(), m.rows(), m.cols());
    const Field& f = cfg.field();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.set_idx(i, j, f.mul(m.idx_at(i, j), cfg.factors()[j].index()));
    return out;
}

// Appends the extension column: zero everywhere except a one on the row of
// the given degree.
Matrix with_extension_column(const EvalConfig& cfg, const Matrix& m,
                             const std::vector<std::size_t>& degrees, std::size_t one_degree) {
    Matrix out(cfg.field_ptr(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.set_idx(i, j, m.idx_at(i, j));
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (degrees[i] == one_degree) out.set_idx(i, m.cols(), 1);
    return out;
}

} // namespace

Matrix grs_matrix(const EvalConfig& cfg, std::size_t k) {
    if (k < 1 || k > cfg.n()) raise(ErrorCode::bad_dimension, "grs needs 1 <= k <= n");
    std::vector<std::size_t> degrees(k);
    for (std::size_t j = 0; j < k; ++j) degrees[j] = j;
    return scaled_vandermonde(cfg, degrees);
}

Matrix egrs_matrix(const EvalConfig& cfg, std::size_t k) {
    if (k < 1 || k > cfg.n() + 1) raise(ErrorCode::bad_dimension, "egrs needs 1 <= k <= n+1");
    std::vector<std::size_t> degrees(k);
    for (std::size_t j = 0; j < k; ++j) degrees[j] = j;
    Matrix body = scaled_vandermonde(cfg, degrees);
    // the coefficient of x^(k-1) rides in the extra coordinate
    return with_extension_column(cfg, body, degrees, k - 1);
}

Matrix sub_grs_matrix(const EvalConfig& cfg, std::size_t k, std::size_t r) {
    if (k > cfg.n() - 1) raise(ErrorCode::bad_dimension, "subcode needs k <= n-1");
    return scaled_vandermonde(cfg, degree_set(k, r));
}

Matrix sub_egrs_matrix(const EvalConfig& cfg, std::size_t k, std::size_t r) {
    if (k > cfg.n() - 1) raise(ErrorCode::bad_dimension, "subcode needs k <= n-1");
    auto degrees = degree_set(k, r);
    Matrix body = scaled_vandermonde(cfg, degrees);
    // here the extra coordinate carries the coefficient of x^k
    return with_extension_column(cfg, body, degrees, k);
}

Matrix plus_tgrs_matrix(const EvalConfig& cfg, std::size_t k, const FieldElement& eta) {
    cfg.field().require_same(eta.field());
    if (eta.is_zero()) raise(ErrorCode::zero_twist, "plus-twist parameter must be nonzero");
    if (k < 1 || k > cfg.n() - 1) raise(ErrorCode::bad_dimension, "plus-tgrs needs 1 <= k <= n-1");
    Matrix out(cfg.field_ptr(), k, cfg.n());
    const Field& f = cfg.field();
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t j = 0; j < cfg.n(); ++j)
            out.set_idx(i, j, f.mul(cfg.factors()[j].index(),
                                    f.pow(cfg.points()[j].index(), std::int64_t(i))));
    for (std::size_t j = 0; j < cfg.n(); ++j) {
        FieldElement a = cfg.points()[j];
        FieldElement twisted = a.pow(std::int64_t(k - 1)) + eta * a.pow(std::int64_t(k));
        out.set(k - 1, j, cfg.factors()[j] * twisted);
    }
    return out;
}

Matrix tgrs_matrix(const EvalConfig& cfg, const Matrix& eta) {
    cfg.field().require_same(eta.field());
    const std::size_t k = eta.rows();
    if (k < 1 || k > cfg.n()) raise(ErrorCode::bad_dimension, "twist matrix has no rows");
    if (eta.cols() != cfg.n() - k)
        raise(ErrorCode::shape_mismatch, "twist matrix must be k x (n-k)");
    Matrix out(cfg.field_ptr(), k, cfg.n());
    for (std::size_t i = 0; i < k; ++i) {
        // g_i(x) = x^i + sum_j eta_{i,j} x^{k+j}
        for (std::size_t col = 0; col < cfg.n(); ++col) {
            FieldElement a = cfg.points()[col];
            FieldElement val = a.pow(std::int64_t(i));
            for (std::size_t j = 0; j < eta.cols(); ++j)
                val = val + eta.at(i, j) * a.pow(std::int64_t(k + j));
            out.set(i, col, cfg.factors()[col] * val);
        }
    }
    return out;
}

LinearCode grs_code(const EvalConfig& cfg, std::size_t k) {
    return LinearCode::from_generator(grs_matrix(cfg, k));
}
LinearCode egrs_code(const EvalConfig& cfg, std::size_t k) {
    return LinearCode::from_generator(egrs_matrix(cfg, k));
}
LinearCode sub_grs_code(const EvalConfig& cfg, std::size_t k, std::size_t r) {
    return LinearCode::from_generator(sub_grs_matrix(cfg, k, r));
}
LinearCode sub_egrs_code(const EvalConfig& cfg, std::size_t k, std::size_t r) {
    return LinearCode::from_generator(sub_egrs_matrix(cfg, k, r));
}
LinearCode plus_tgrs_code(const EvalConfig& cfg, std::size_t k, const FieldElement& eta) {
    return LinearCode::from_generator(plus_tgrs_matrix(cfg, k, eta));
}
LinearCode tgrs_code(const EvalConfig& cfg, const Matrix& eta) {
    return LinearCode::from_generator(tgrs_matrix(cfg, eta));
}

} // namespace grskit
