#include "grskit/dualforms.hpp"

#include "grskit/symmetric.hpp"

namespace grskit {

namespace {

std::vector<FieldElement> unit_factors(const std::vector<FieldElement>& points) {
    auto f = points[0].field_ptr();
    return std::vector<FieldElement>(points.size(), f->one());
}

std::vector<FieldElement> resolve_factors(const std::vector<FieldElement>& points,
                                          const std::vector<FieldElement>* factors) {
    if (!factors) return unit_factors(points);
    if (factors->size() != points.size())
        raise(ErrorCode::shape_mismatch, "points and factors differ in length");
    return *factors;
}

// factors of the dual object: base_i / v_i
std::vector<FieldElement> transported(const std::vector<FieldElement>& base,
                                      const std::vector<FieldElement>& v) {
    std::vector<FieldElement> out;
    out.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) out.push_back(base[i] / v[i]);
    return out;
}

void check_k_range(std::size_t n, std::size_t k, std::size_t lo) {
    if (k < lo || k + 2 > n) raise(ErrorCode::out_of_range, "dimension outside theorem range");
}

} // namespace

LinearCode dual_of_sub1(const std::vector<FieldElement>& points, std::size_t k,
                        const std::vector<FieldElement>* factors) {
    const std::size_t n = points.size();
    check_k_range(n, k, 2);
    auto v = resolve_factors(points, factors);
    SymContext ctx(points);
    EvalConfig dual_cfg(points, transported(ctx.u(), v));
    if (ctx.t(1).is_zero()) return sub_grs_code(dual_cfg, n - k, 1);
    FieldElement eta = -ctx.t(1).inv();
    return plus_tgrs_code(dual_cfg, n - k, eta);
}

LinearCode dual_of_sub_k1(const std::vector<FieldElement>& points, std::size_t k,
                          const std::vector<FieldElement>* factors) {
    const std::size_t n = points.size();
    check_k_range(n, k, 3);
    auto v = resolve_factors(points, factors);
    SymContext ctx(points);
    if (!ctx.t(n - 1).is_zero())
        raise(ErrorCode::hypothesis_failed, "t_{n-1} must vanish");
    std::vector<FieldElement> w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w.push_back(ctx.u()[i] * ctx.deleted_s_n2(i));
    EvalConfig dual_cfg(points, transported(w, v));
    return sub_grs_code(dual_cfg, n - k, n - k - 1);
}

DualOfSub2 dual_of_sub2(const std::vector<FieldElement>& points, std::size_t k,
                        const std::vector<FieldElement>* factors) {
    const std::size_t n = points.size();
    check_k_range(n, k, 3);
    auto f = points[0].field_ptr();
    auto v = resolve_factors(points, factors);
    SymContext ctx(points);
    const FieldElement h1 = ctx.h(1);
    const FieldElement h2 = ctx.h(2);

    int case_id;
    Poly g = Poly::zero(f);
    const std::size_t d = n - k; // g has degree d-1, d or d+1
    if (h1.is_zero() && h2.is_zero()) {
        case_id = 1;
        g = Poly::monomial(f, d + 1);
    } else if (h1.is_zero()) {
        case_id = 2;
        g = Poly::monomial(f, d - 1) + Poly::monomial(f, d + 1).scaled(-h2.inv());
    } else if (h2.is_zero()) {
        case_id = 3;
        g = Poly::monomial(f, d - 1) + Poly::monomial(f, d).scaled(-h1.inv()) +
            Poly::monomial(f, d + 1).scaled((h1 * h1).inv());
    } else if (h2 == h1 * h1) {
        case_id = 4;
        g = Poly::monomial(f, d) + Poly::monomial(f, d + 1).scaled(-h1.inv());
    } else {
        case_id = 5;
        FieldElement denom = h1 * h1 - h2;
        g = Poly::monomial(f, d - 1) + Poly::monomial(f, d).scaled(-h1 / denom) +
            Poly::monomial(f, d + 1).scaled(denom.inv());
    }

    EvalConfig dual_cfg(points, transported(ctx.u(), v));
    Matrix gen(f, d, n);
    for (std::size_t row = 0; row + 1 < d; ++row) {
        auto vals = evaluate(Poly::monomial(f, row), dual_cfg);
        for (std::size_t c = 0; c < n; ++c) gen.set(row, c, vals[c]);
    }
    auto gvals = evaluate(g, dual_cfg);
    for (std::size_t c = 0; c < n; ++c) gen.set(d - 1, c, gvals[c]);
    return DualOfSub2{LinearCode::from_generator(gen), case_id, g};
}

Matrix parity_of_sub_egrs_1(const std::vector<FieldElement>& points, std::size_t k,
                            const std::vector<FieldElement>* factors) {
    const std::size_t n = points.size();
    if (k < 1 || k + 1 > n) raise(ErrorCode::out_of_range, "need 1 <= k <= n-1");
    auto f = points[0].field_ptr();
    auto v = resolve_factors(points, factors);
    SymContext ctx(points);
    auto diag = transported(ctx.u(), v);

    Matrix h(f, n - k + 1, n + 1);
    for (std::size_t row = 0; row <= n - k; ++row)
        for (std::size_t c = 0; c < n; ++c)
            h.set(row, c, points[c].pow(std::int64_t(row)) * diag[c]);
    h.set(n - k - 1, n, -f->one());
    h.set(n - k, n, -ctx.t(1));
    return h;
}

ParityOfSub2 parity_of_sub_egrs_2(const std::vector<FieldElement>& points, std::size_t k,
                                  const std::vector<FieldElement>* factors) {
    const std::size_t n = points.size();
    check_k_range(n, k, 3);
    auto f = points[0].field_ptr();
    auto v = resolve_factors(points, factors);
    SymContext ctx(points);
    EvalConfig u_cfg(points, ctx.u());

    const std::size_t rows = n - k + 1;
    ParityOfSub2 out{Matrix(f, rows, n + 1), ctx.t(1).is_zero() ? 0 : 1};
    Matrix body = out.branch == 0 ? sub_grs_matrix(u_cfg, rows, 1)
                                  : plus_tgrs_matrix(u_cfg, rows, -ctx.t(1).inv());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < n; ++c) out.H.set_idx(i, c, body.idx_at(i, c));
    out.H.set(rows - 2, n, -f->one());
    out.H.set(rows - 1, n, out.branch == 0 ? ctx.t(2) : -ctx.t(2) / ctx.t(1));

    // transport from the v = 1 layout: right-multiply by D(1/v, 1)
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < n; ++c)
            out.H.set(i, c, out.H.at(i, c) / v[c]);
    return out;
}

Matrix parity_of_sub_egrs_k1(const std::vector<FieldElement>& points, std::size_t k,
                             const std::vector<FieldElement>* factors) {
    const std::size_t n = points.size();
    check_k_range(n, k, 3);
    auto f = points[0].field_ptr();
    auto v = resolve_factors(points, factors);
    SymContext ctx(points);
    if (!ctx.t(n - 1).is_zero())
        raise(ErrorCode::hypothesis_failed, "t_{n-1} must vanish");

    std::vector<std::size_t> degrees;
    degrees.push_back(0);
    for (std::size_t j = 2; j <= n - k + 1; ++j) degrees.push_back(j);

    Matrix h(f, degrees.size(), n + 1);
    for (std::size_t i = 0; i < degrees.size(); ++i)
        for (std::size_t c = 0; c < n; ++c) {
            FieldElement w = ctx.u()[c] * ctx.deleted_s_n2(c) / v[c];
            h.set(i, c, points[c].pow(std::int64_t(degrees[i])) * w);
        }
    h.set(degrees.size() - 1, n, ctx.t(n));
    return h;
}

} // namespace grskit
