#include "grskit/selfdual.hpp"

#include "grskit/code.hpp"
#include "grskit/family.hpp"
#include "grskit/matrix.hpp"
#include "grskit/symmetric.hpp"

namespace grskit {

namespace {

void check_odd_characteristic(const Field& f) {
    if (f.characteristic() == 2)
        raise(ErrorCode::even_characteristic,
              "squareness dichotomy degenerates in characteristic 2");
}

// true when all values share one squareness class (none may be zero)
bool uniform_squareness(const std::vector<FieldElement>& vals) {
    bool first = vals[0].is_square();
    for (const auto& v : vals)
        if (v.is_square() != first) return false;
    return true;
}

// sqrt(w_i / w_1): the w_1 normalization makes every ratio a square exactly
// when the squareness of the w_i is uniform.
std::vector<FieldElement> normalized_sqrt_witness(const std::vector<FieldElement>& w) {
    FieldElement lambda = w[0].inv();
    std::vector<FieldElement> out;
    out.reserve(w.size());
    for (const auto& x : w) out.push_back((lambda * x).sqrt());
    return out;
}

} // namespace

SelfDualVerdict grs_selfdual_exists(const std::vector<FieldElement>& points) {
    const std::size_t n = points.size();
    if (n % 2 != 0) raise(ErrorCode::odd_length, "self-dual codes need even length");
    if (n == 0) raise(ErrorCode::out_of_range, "no points");
    check_odd_characteristic(points[0].field());

    SelfDualVerdict v;
    v.symmetric_condition = true; // no t condition for the full code
    auto u = lagrange_u(points);
    v.square_condition = uniform_squareness(u);
    if (!v.square_condition) {
        v.reason = "u_i squareness is mixed";
        return v;
    }
    v.exists = true;
    v.reason = "u_i squareness uniform";
    v.witness_factors = normalized_sqrt_witness(u);
    return v;
}

SelfDualVerdict sub1_selfdual_exists(const std::vector<FieldElement>& points) {
    const std::size_t n = points.size();
    if (n % 2 != 0) raise(ErrorCode::odd_length, "self-dual codes need even length");
    if (n < 4) raise(ErrorCode::out_of_range, "need n >= 4");
    check_odd_characteristic(points[0].field());

    SelfDualVerdict v;
    v.outside_hypothesis = n < 8;
    SymContext ctx(points);
    v.symmetric_condition = ctx.t(1).is_zero();
    v.square_condition = uniform_squareness(ctx.u());
    if (!v.symmetric_condition) {
        v.reason = "t_1 != 0";
        return v;
    }
    if (!v.square_condition) {
        v.reason = "u_i squareness is mixed";
        return v;
    }
    v.exists = true;
    v.reason = "t_1 = 0 and u_i squareness uniform";
    v.witness_factors = normalized_sqrt_witness(ctx.u());
    return v;
}

SelfDualVerdict subk1_selfdual_exists(const std::vector<FieldElement>& points) {
    const std::size_t n = points.size();
    if (n % 2 != 0) raise(ErrorCode::odd_length, "self-dual codes need even length");
    if (n < 4) raise(ErrorCode::out_of_range, "need n >= 4");
    check_odd_characteristic(points[0].field());

    SelfDualVerdict v;
    v.outside_hypothesis = n < 8;
    SymContext ctx(points);
    v.symmetric_condition = ctx.t(n - 1).is_zero();
    if (!v.symmetric_condition) {
        v.reason = "t_{n-1} != 0";
        return v;
    }
    std::vector<FieldElement> w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w.push_back(ctx.u()[i] * ctx.deleted_s_n2(i));
    v.square_condition = uniform_squareness(w);
    if (!v.square_condition) {
        v.reason = "u_i s_{n-2}(a_i) squareness is mixed";
        return v;
    }
    v.exists = true;
    v.reason = "t_{n-1} = 0 and u_i s_{n-2}(a_i) squareness uniform";
    v.witness_factors = normalized_sqrt_witness(w);
    return v;
}

SelfDualVerdict sub_egrs_k1_selfdual_exists(const std::vector<FieldElement>& points) {
    const std::size_t n = points.size();
    if (n % 2 == 0) raise(ErrorCode::even_length, "extended self-dual codes need n + 1 = 2k");
    if (n < 3) raise(ErrorCode::out_of_range, "need n >= 3");
    check_odd_characteristic(points[0].field());

    SelfDualVerdict v;
    v.outside_hypothesis = n + 1 < 8;
    SymContext ctx(points);
    v.symmetric_condition = ctx.t(n - 1).is_zero();
    if (!v.symmetric_condition) {
        v.reason = "t_{n-1} != 0";
        return v;
    }
    // t_{n-1} = 0 forces 0 outside the points, hence t_n != 0
    FieldElement tn = ctx.t(n);
    bool all_squares = true;
    std::vector<FieldElement> scaled;
    scaled.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement w = ctx.u()[i] * ctx.deleted_s_n2(i);
        if (!(tn * w).is_square()) all_squares = false;
        scaled.push_back(w / tn);
    }
    v.square_condition = all_squares;
    if (!all_squares) {
        v.reason = "t_n u_i s_{n-2}(a_i) are not all squares";
        return v;
    }
    v.exists = true;
    v.reason = "t_{n-1} = 0 and t_n u_i s_{n-2}(a_i) all squares";
    v.witness_factors.reserve(n);
    for (const auto& s : scaled) v.witness_factors.push_back(s.sqrt());
    return v;
}

std::vector<FieldElement> shift_points(const std::vector<FieldElement>& points) {
    if (points.empty()) raise(ErrorCode::out_of_range, "no points");
    auto f = points[0].field_ptr();
    const std::size_t n = points.size();
    if (n % f->characteristic() == 0)
        raise(ErrorCode::characteristic_divides_length, "1/n is undefined, p divides n");
    FieldElement n_elt = f->zero();
    for (std::size_t i = 0; i < n; ++i) n_elt = n_elt + f->one();
    FieldElement t1 = elem_sym(points, 1);
    FieldElement delta = t1 / n_elt;
    std::vector<FieldElement> out;
    out.reserve(n);
    for (const auto& a : points) out.push_back(a - delta);
    return out;
}

MidrangeCertificate midrange_never_selfdual(const std::vector<FieldElement>& points,
                                            std::size_t k, std::size_t r) {
    const std::size_t n = points.size();
    MidrangeCertificate cert;
    if (n == 2 * k)
        cert.extended = false;
    else if (n + 1 == 2 * k)
        cert.extended = true;
    else
        raise(ErrorCode::out_of_range, "need n = 2k or n + 1 = 2k");
    if (r < 2 || r + 2 > k) raise(ErrorCode::out_of_range, "need r in [2, k-2]");

    // Gram conditions cover every exponent in [0, 2k]; the system already
    // contains the invertible n x n Vandermonde block, so only v2 = 0 fits.
    std::vector<std::size_t> degrees(2 * k + 1);
    for (std::size_t j = 0; j <= 2 * k; ++j) degrees[j] = j;
    Matrix system = Matrix::vandermonde_rows(points, degrees);
    cert.rank = system.rank();
    cert.expected = n;
    cert.impossible = cert.rank == n;
    return cert;
}

std::optional<std::vector<FieldElement>> exhaustive_selfdual_search(
    const std::vector<FieldElement>& points, CodeShape shape, std::size_t k, std::size_t r,
    std::uint64_t max_work) {
    if (points.empty()) raise(ErrorCode::out_of_range, "no points");
    auto f = points[0].field_ptr();
    const std::size_t n = points.size();
    const std::uint64_t q = f->order();
    const bool extended = shape == CodeShape::sub_egrs;
    if (extended ? (n + 1 != 2 * k) : (n != 2 * k))
        raise(ErrorCode::out_of_range, "self-dual parameters need n = 2k, or n+1 = 2k extended");

    std::uint64_t tuples = 1;
    for (std::size_t i = 1; i < n; ++i) {
        tuples *= (q - 1);
        if (tuples > max_work)
            raise(ErrorCode::too_large, "factor space exceeds the enumeration guard");
    }

    // The Gram entries are sums v_l^2 a_l^s over the pairwise degree sums,
    // plus a lone +1 at the (k, k) entry of the extended shape. Power rows
    // are fixed per point set, so each tuple costs a handful of dot products.
    std::vector<std::size_t> degrees;
    if (shape == CodeShape::grs)
        for (std::size_t j = 0; j < k; ++j) degrees.push_back(j);
    else
        degrees = degree_set(k, r);
    std::vector<char> sum_needed(2 * k + 1, 0);
    for (std::size_t i = 0; i < degrees.size(); ++i)
        for (std::size_t j = i; j < degrees.size(); ++j) sum_needed[degrees[i] + degrees[j]] = 1;
    std::vector<std::vector<std::uint32_t>> power(2 * k + 1, std::vector<std::uint32_t>(n));
    for (std::size_t s = 0; s <= 2 * k; ++s)
        for (std::size_t l = 0; l < n; ++l)
            power[s][l] = f->pow(points[l].index(), std::int64_t(s));

    std::vector<std::uint32_t> vidx(n, 1), w(n);
    while (true) {
        for (std::size_t l = 0; l < n; ++l) w[l] = f->mul(vidx[l], vidx[l]);
        bool ok = true;
        for (std::size_t s = 0; s <= 2 * k && ok; ++s) {
            if (!sum_needed[s]) continue;
            std::uint32_t acc = 0;
            for (std::size_t l = 0; l < n; ++l) acc = f->add(acc, f->mul(w[l], power[s][l]));
            if (extended && s == 2 * k) acc = f->add(acc, 1);
            if (acc != 0) ok = false;
        }
        if (ok) {
            std::vector<FieldElement> v;
            v.reserve(n);
            for (auto idx : vidx) v.push_back(f->element(idx));
            return v;
        }

        std::size_t pos = n;
        bool done = true;
        while (pos-- > 1) {
            if (vidx[pos] + 1 < q) {
                ++vidx[pos];
                done = false;
                break;
            }
            vidx[pos] = 1;
        }
        if (done) break;
    }
    return std::nullopt;
}

} // namespace grskit
