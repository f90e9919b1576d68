#include <doctest.h>

#include <set>

#include "grskit/combin.hpp"
#include "grskit/family.hpp"
#include "grskit/symmetric.hpp"

using namespace grskit;

namespace {

std::vector<FieldElement> elts(const FieldPtr& f, const std::vector<std::uint32_t>& idx) {
    std::vector<FieldElement> out;
    for (auto i : idx) out.push_back(f->element(i));
    return out;
}

// Oracle implementation by literal subset expansion, independent of the
// recurrence used by the library.
FieldElement elem_sym_by_subsets(const std::vector<FieldElement>& vals, std::size_t r) {
    auto f = vals[0].field_ptr();
    if (r == 0) return f->one();
    FieldElement acc = f->zero();
    for_each_combination(vals.size(), r, [&](const std::vector<std::size_t>& idx) {
        FieldElement prod = f->one();
        for (auto i : idx) prod = prod * vals[i];
        acc = acc + prod;
    });
    return acc;
}

} // namespace

TEST_CASE("elementary symmetric values by direct expansion") {
    auto f = Field::make(7, 1);
    CHECK(elem_sym(elts(f, {1, 2, 3}), 2).index() == 4); // 2+3+6 = 11 = 4
    CHECK(elem_sym(elts(f, {1, 2, 3}), 0).index() == 1);
    CHECK(elem_sym(elts(f, {1, 2, 3}), 4).index() == 0); // r beyond the count
}

TEST_CASE("all-ones input gives binomials mod p") {
    auto f = Field::make(5, 1);
    std::vector<FieldElement> ones(6, f->one());
    for (std::size_t r = 0; r <= 6; ++r)
        CHECK(elem_sym(ones, r).index() == binomial(6, r) % 5);
}

TEST_CASE("recurrence agrees with subset expansion") {
    auto f = Field::make(11, 1);
    std::uint64_t state = 99;
    auto next = [&] { return std::uint32_t((state = state * 6364136223846793005ULL + 3) >> 33); };
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + next() % 6;
        std::vector<FieldElement> vals;
        for (std::size_t i = 0; i < n; ++i) vals.push_back(f->element(next() % 11));
        for (std::size_t r = 0; r <= n; ++r)
            CHECK(elem_sym(vals, r) == elem_sym_by_subsets(vals, r));
    }
}

TEST_CASE("one-point extension identity") {
    auto f = Field::make(13, 1);
    auto base = elts(f, {3, 7, 9});
    auto extended = elts(f, {3, 7, 9, 5});
    FieldElement b = f->element(5);
    for (std::size_t r = 1; r <= 3; ++r)
        CHECK(elem_sym(extended, r) == elem_sym(base, r) + b * elem_sym(base, r - 1));
}

TEST_CASE("lagrange coefficients") {
    auto f = Field::make(5, 1);
    // n = 2: u = ((a1-a2)^-1, (a2-a1)^-1)
    auto u2 = lagrange_u(elts(f, {1, 4}));
    CHECK(u2[0] == (f->element(1) - f->element(4)).inv());
    CHECK(u2[1] == (f->element(4) - f->element(1)).inv());

    // direct products for a = (0,1,2), then the moment sanity conditions
    auto u = lagrange_u(elts(f, {0, 1, 2}));
    CHECK(u[0].index() == 3);
    CHECK(u[1].index() == 4);
    CHECK(u[2].index() == 3);
    FieldElement s0 = u[0] + u[1] + u[2];
    CHECK(s0.is_zero());
    FieldElement s2 = u[1] + u[2] * f->element(4);
    CHECK(s2 == f->one()); // sum u_i a_i^2 = 0*u0 + 1*u1 + 4*u2

    CHECK_THROWS_AS(lagrange_u(elts(f, {1, 1})), Error);
}

TEST_CASE("moment table across fields") {
    for (auto [p, m] : {std::pair<std::uint64_t, unsigned>{7, 1}, {3, 2}, {13, 1}}) {
        auto f = Field::make(p, m);
        std::uint64_t state = p * 31 + m;
        auto next = [&] {
            return std::uint32_t((state = state * 6364136223846793005ULL + 7) >> 33);
        };
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = 2 + next() % 5;
            if (n > f->order()) continue;
            std::set<std::uint32_t> chosen;
            while (chosen.size() < n) chosen.insert(next() % std::uint32_t(f->order()));
            std::vector<FieldElement> pts;
            for (auto c : chosen) pts.push_back(f->element(c));
            SymContext ctx(pts);
            for (std::size_t l = 0; l <= n + 1; ++l) {
                CHECK(ctx.moment(l) == moment_closed_form(ctx, l));
                CHECK(ctx.deleted_moment(l) == deleted_moment_closed_form(ctx, l));
            }
            CHECK_THROWS_AS(ctx.moment(n + 2), Error);
        }
    }
}

TEST_CASE("specific moment values") {
    auto f = Field::make(11, 1);
    auto pts = elts(f, {1, 3, 4, 5, 9});
    SymContext ctx(pts);
    const std::size_t n = 5;
    CHECK(ctx.moment(n - 2).is_zero());
    CHECK(ctx.moment(n - 1) == f->one());
    CHECK(ctx.moment(n) == ctx.t(1));
    CHECK(ctx.moment(n + 1) == ctx.t(1) * ctx.t(1) - ctx.t(2));
    CHECK(ctx.h(0) == f->one());
    CHECK(ctx.h(1) == ctx.t(1));
    CHECK(ctx.h(2) == ctx.t(1) * ctx.t(1) - ctx.t(2));

    CHECK(ctx.deleted_moment(1) == -f->one()); // (-1)^n, n odd
    CHECK(ctx.deleted_moment(0).is_zero());
    CHECK(ctx.deleted_moment(n) == ctx.t(n - 1));
    CHECK(ctx.deleted_moment(n + 1) == ctx.t(1) * ctx.t(n - 1) - ctx.t(n));
}

TEST_CASE("deleted symmetric values") {
    auto f = Field::make(13, 1);
    auto pts = elts(f, {2, 5, 6, 7, 11});
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(deleted_sym(pts, i, 0) == f->one());
        // r = n-1 on the deleted vector: product of the remaining points
        FieldElement prod = f->one();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod = prod * pts[j];
        CHECK(deleted_sym(pts, i, n - 1) == prod);
        // a_i s_{n-2}(a_i) + s_{n-1}(a_i) = t_{n-1}
        CHECK(pts[i] * deleted_sym(pts, i, n - 2) + deleted_sym(pts, i, n - 1) ==
              elem_sym(pts, n - 1));
    }
    CHECK_THROWS_AS(deleted_sym(pts, 9, 1), Error);
}

TEST_CASE("t_{n-1} = 0 forces nonzero deleted values") {
    auto f = Field::make(13, 1);
    bool found_instance = false;
    for_each_combination(13, 5, [&](const std::vector<std::size_t>& idx) {
        auto pts = elts(f, std::vector<std::uint32_t>(idx.begin(), idx.end()));
        if (!elem_sym(pts, 4).is_zero()) return;
        found_instance = true;
        bool zero_in = false;
        for (const auto& a : pts) zero_in |= a.is_zero();
        CHECK_FALSE(zero_in);
        for (std::size_t i = 0; i < pts.size(); ++i)
            CHECK_FALSE(deleted_sym(pts, i, 3).is_zero());
    });
    CHECK(found_instance);
}

TEST_CASE("cyclic subgroup points of GF(13)") {
    auto f = Field::make(13, 1);
    auto pts = cyclic_subgroup_points(f, 4);
    std::set<std::uint32_t> got;
    for (const auto& a : pts) got.insert(a.index());
    CHECK(got == std::set<std::uint32_t>{1, 5, 12, 8});
    CHECK(pts[0] == f->one());

    // prod (x - a_i) = x^n - 1
    Poly fa = Poly::from_roots(f, pts);
    CHECK(fa.degree() == 4);
    CHECK(fa.coeff(0) == -f->one());
    for (std::size_t i = 1; i < 4; ++i) CHECK(fa.coeff(i).is_zero());
    CHECK(elem_sym(pts, 1).is_zero()); // t_1 = 0

    CHECK_THROWS_AS(cyclic_subgroup_points(f, 5), Error);
}

TEST_CASE("subgroup deleted values collapse to 1/(n a_i)") {
    auto f = Field::make(17, 1);
    const std::size_t n = 8;
    auto pts = cyclic_subgroup_points(f, n);
    std::set<std::uint32_t> got;
    for (const auto& a : pts) got.insert(a.index());
    CHECK(got == std::set<std::uint32_t>{1, 2, 4, 8, 16, 15, 13, 9});
    SymContext ctx(pts);
    FieldElement n_elt = f->element(8);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(ctx.u()[i] * ctx.deleted_s_n2(i) == (n_elt * pts[i]).inv());
}
