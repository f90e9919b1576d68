#include "grskit/symmetric.hpp"

namespace grskit {

std::vector<FieldElement> elem_sym_all(const std::vector<FieldElement>& vals) {
    if (vals.empty()) raise(ErrorCode::out_of_range, "no values");
    auto f = vals[0].field_ptr();
    std::vector<FieldElement> s(vals.size() + 1, f->zero());
    s[0] = f->one();
    std::size_t used = 0;
    for (const auto& b : vals) {
        f->require_same(b.field());
        ++used;
        for (std::size_t r = used; r >= 1; --r) s[r] = s[r] + b * s[r - 1];
    }
    return s;
}

FieldElement elem_sym(const std::vector<FieldElement>& vals, std::size_t r) {
    if (vals.empty()) raise(ErrorCode::out_of_range, "no values");
    if (r == 0) return vals[0].field_ptr()->one();
    if (r > vals.size()) return vals[0].field_ptr()->zero();
    return elem_sym_all(vals)[r];
}

std::vector<FieldElement> lagrange_u(const std::vector<FieldElement>& points) {
    if (points.empty()) raise(ErrorCode::out_of_range, "no points");
    auto f = points[0].field_ptr();
    std::vector<FieldElement> u;
    u.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        FieldElement prod = f->one();
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            FieldElement diff = points[i] - points[j];
            if (diff.is_zero())
                raise(ErrorCode::duplicate_points, "points must be pairwise distinct");
            prod = prod * diff;
        }
        u.push_back(prod.inv());
    }
    return u;
}

FieldElement deleted_sym(const std::vector<FieldElement>& points, std::size_t i, std::size_t r) {
    if (i >= points.size()) raise(ErrorCode::bad_index, "point index out of range");
    std::vector<FieldElement> rest;
    rest.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
        if (j != i) rest.push_back(points[j]);
    if (rest.empty()) {
        if (r == 0) return points[0].field_ptr()->one();
        return points[0].field_ptr()->zero();
    }
    return elem_sym(rest, r);
}

SymContext::SymContext(std::vector<FieldElement> points) : a_(std::move(points)) {
    if (a_.empty()) raise(ErrorCode::out_of_range, "no points");
    f_ = a_[0].field_ptr();
    u_ = lagrange_u(a_);
    t_ = elem_sym_all(a_);
    const std::size_t n = a_.size();
    if (n >= 2) {
        sdel_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) sdel_.push_back(deleted_sym(a_, i, n - 2));
    }
    for (std::size_t l = 0; l < 3; ++l) h_.push_back(moment(n - 1 + l));

    // Lagrange sanity: the low moments must vanish and the (n-1)-st must be
    // one, otherwise the u convention got scrambled somewhere.
    for (std::size_t l = 0; l + 1 < n; ++l)
        if (!moment(l).is_zero())
            raise(ErrorCode::internal, "moment self-check failed (expected 0)");
    if (moment(n - 1) != f_->one())
        raise(ErrorCode::internal, "moment self-check failed (expected 1)");
}

FieldElement SymContext::t(std::size_t l) const {
    if (l >= t_.size()) raise(ErrorCode::out_of_range, "t index exceeds n");
    return t_[l];
}

FieldElement SymContext::h(std::size_t l) const {
    if (l >= h_.size()) raise(ErrorCode::out_of_range, "h index exceeds 2");
    return h_[l];
}

FieldElement SymContext::deleted_s_n2(std::size_t i) const {
    if (i >= sdel_.size()) raise(ErrorCode::bad_index, "point index out of range");
    return sdel_[i];
}

FieldElement SymContext::moment(std::size_t l) const {
    if (l > n() + 1) raise(ErrorCode::out_of_range, "moment index exceeds n+1");
    FieldElement acc = f_->zero();
    for (std::size_t i = 0; i < n(); ++i) acc = acc + u_[i] * a_[i].pow(std::int64_t(l));
    return acc;
}

FieldElement SymContext::deleted_moment(std::size_t l) const {
    if (n() < 2) raise(ErrorCode::out_of_range, "deleted moments need at least two points");
    if (l > n() + 1) raise(ErrorCode::out_of_range, "moment index exceeds n+1");
    FieldElement acc = f_->zero();
    for (std::size_t i = 0; i < n(); ++i)
        acc = acc + a_[i].pow(std::int64_t(l)) * u_[i] * sdel_[i];
    return acc;
}

FieldElement moment_closed_form(const SymContext& ctx, std::size_t l) {
    const std::size_t n = ctx.n();
    auto f = ctx.field_ptr();
    if (l > n + 1) raise(ErrorCode::out_of_range, "moment index exceeds n+1");
    if (l + 2 <= n) return f->zero();
    if (l == n - 1) return f->one();
    if (l == n) return ctx.t(1);
    FieldElement t2 = n >= 2 ? ctx.t(2) : f->zero();
    return ctx.t(1) * ctx.t(1) - t2; // l == n+1
}

FieldElement deleted_moment_closed_form(const SymContext& ctx, std::size_t l) {
    const std::size_t n = ctx.n();
    auto f = ctx.field_ptr();
    if (n < 2) raise(ErrorCode::out_of_range, "deleted moments need at least two points");
    if (l > n + 1) raise(ErrorCode::out_of_range, "moment index exceeds n+1");
    if (l == 1) {
        FieldElement one = f->one();
        return n % 2 == 0 ? one : -one;
    }
    if (l == 0 || l <= n - 1) return f->zero();
    if (l == n) return ctx.t(n - 1);
    return ctx.t(1) * ctx.t(n - 1) - ctx.t(n); // l == n+1
}

std::vector<FieldElement> cyclic_subgroup_points(const FieldPtr& f, std::size_t n) {
    const std::uint64_t q = f->order();
    if (n == 0 || (q - 1) % n != 0)
        raise(ErrorCode::not_a_divisor, "subgroup order must divide q-1");
    FieldElement h = f->element(f->generator()).pow(std::int64_t((q - 1) / n));
    std::vector<FieldElement> out;
    out.reserve(n);
    FieldElement cur = f->one();
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(cur);
        cur = cur * h;
    }
    return out;
}

} // namespace grskit
