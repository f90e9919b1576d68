#include <doctest.h>

#include <set>

#include "grskit/combin.hpp"
#include "grskit/dualforms.hpp"
#include "grskit/symmetric.hpp"

using namespace grskit;

namespace {

std::vector<FieldElement> elts(const FieldPtr& f, const std::vector<std::uint32_t>& idx) {
    std::vector<FieldElement> out;
    for (auto i : idx) out.push_back(f->element(i));
    return out;
}

template <typename Fn>
void for_each_subset(const FieldPtr& f, std::size_t n, Fn&& fn) {
    for_each_combination(std::size_t(f->order()), n, [&](const std::vector<std::size_t>& idx) {
        fn(elts(f, std::vector<std::uint32_t>(idx.begin(), idx.end())));
    });
}

} // namespace

TEST_CASE("r = 1 dual: the zero-sum branch lands on the u-weighted subcode") {
    auto f = Field::make(7, 1);
    auto pts = elts(f, {0, 1, 2, 4}); // t_1 = 0
    EvalConfig cfg = EvalConfig::with_unit_factors(pts);
    LinearCode closed = dual_of_sub1(pts, 2);
    LinearCode kernel = sub_grs_code(cfg, 2, 1).dual();
    CHECK(row_space_equal(closed.generator(), kernel.generator()));

    auto u = lagrange_u(pts);
    LinearCode expect = sub_grs_code(EvalConfig(pts, u), 2, 1);
    CHECK(row_space_equal(closed.generator(), expect.generator()));
}

TEST_CASE("r = 1 dual: the nonzero-sum branch is a plus-twist code") {
    auto f = Field::make(7, 1);
    auto pts = elts(f, {0, 1, 2, 3}); // t_1 = 6
    EvalConfig cfg = EvalConfig::with_unit_factors(pts);
    LinearCode closed = dual_of_sub1(pts, 2);
    LinearCode kernel = sub_grs_code(cfg, 2, 1).dual();
    CHECK(row_space_equal(closed.generator(), kernel.generator()));

    SymContext ctx(pts);
    LinearCode twist =
        plus_tgrs_code(EvalConfig(pts, ctx.u()), 2, -ctx.t(1).inv());
    CHECK(row_space_equal(closed.generator(), twist.generator()));
}

TEST_CASE("r = 1 dual transports general factors as u_i / v_i") {
    auto f = Field::make(11, 1);
    auto pts = elts(f, {0, 1, 2, 5, 7, 8});
    std::vector<FieldElement> v = elts(f, {2, 5, 1, 7, 3, 10});
    EvalConfig cfg(pts, v);
    for (std::size_t k = 2; k <= 4; ++k) {
        LinearCode closed = dual_of_sub1(pts, k, &v);
        LinearCode kernel = sub_grs_code(cfg, k, 1).dual();
        CHECK(row_space_equal(closed.generator(), kernel.generator()));
    }
}

TEST_CASE("r = k-1 dual under the vanishing hypothesis") {
    auto f = Field::make(7, 1);
    auto pts = elts(f, {1, 2, 3, 4, 5, 6}); // x^6 - 1, so t_5 = 0
    EvalConfig cfg = EvalConfig::with_unit_factors(pts);
    for (std::size_t k = 3; k <= 4; ++k) {
        LinearCode closed = dual_of_sub_k1(pts, k);
        CHECK(closed.dimension() == 6 - k);
        LinearCode kernel = sub_grs_code(cfg, k, k - 1).dual();
        CHECK(row_space_equal(closed.generator(), kernel.generator()));
    }
    CHECK_THROWS_AS(dual_of_sub_k1(elts(f, {0, 1, 2, 3, 4, 5}), 3), Error);
}

TEST_CASE("r = 2 dual covers all five cases with span equality") {
    std::set<int> seen;
    for (auto q : {std::uint64_t(7), std::uint64_t(11), std::uint64_t(13)}) {
        auto f = Field::make(q, 1);
        for (std::size_t n = 5; n <= 6; ++n) {
            for_each_subset(f, n, [&](const std::vector<FieldElement>& pts) {
                EvalConfig cfg = EvalConfig::with_unit_factors(pts);
                for (std::size_t k = 3; k + 2 <= pts.size(); ++k) {
                    DualOfSub2 closed = dual_of_sub2(pts, k);
                    seen.insert(closed.case_id);
                    LinearCode kernel = sub_grs_code(cfg, k, 2).dual();
                    CHECK(row_space_equal(closed.code.generator(), kernel.generator()));
                }
            });
        }
    }
    CHECK(seen == std::set<int>{1, 2, 3, 4, 5});
}

TEST_CASE("extended r = 1 parity annihilates for any point sum") {
    auto f = Field::make(11, 1);
    std::uint64_t state = 404;
    auto next = [&] { return std::uint32_t((state = state * 6364136223846793005ULL + 1) >> 33); };
    for (int trial = 0; trial < 15; ++trial) {
        std::set<std::uint32_t> chosen;
        std::size_t n = 5 + next() % 2;
        while (chosen.size() < n) chosen.insert(next() % 11);
        std::vector<FieldElement> pts;
        for (auto c : chosen) pts.push_back(f->element(c));
        std::vector<FieldElement> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(f->element(1 + next() % 10));
        EvalConfig cfg(pts, v);
        for (std::size_t k = 1; k + 1 <= n; ++k) {
            Matrix h = parity_of_sub_egrs_1(pts, k, &v);
            Matrix g = sub_egrs_matrix(cfg, k, 1);
            CHECK(h.mul(g.transpose()).is_zero());
            CHECK(h.rank() == n + 1 - k);
            CHECK(row_space_equal(h, sub_egrs_code(cfg, k, 1).dual().generator()));
        }
    }
}

TEST_CASE("extended r = 1 parity diagonal reduces to u with unit factors") {
    auto f = Field::make(7, 1);
    auto pts = elts(f, {0, 1, 2, 4, 5});
    Matrix h = parity_of_sub_egrs_1(pts, 2);
    auto u = lagrange_u(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(h.at(0, i) == u[i]);
    CHECK(h.at(h.rows() - 1, pts.size()) == -elem_sym(pts, 1));
}

TEST_CASE("extended r = 2 parity hits both branches") {
    auto f = Field::make(11, 1);
    std::set<int> branches;
    for_each_subset(f, 6, [&](const std::vector<FieldElement>& pts) {
        EvalConfig cfg = EvalConfig::with_unit_factors(pts);
        for (std::size_t k = 3; k <= 4; ++k) {
            ParityOfSub2 h = parity_of_sub_egrs_2(pts, k);
            branches.insert(h.branch);
            Matrix g = sub_egrs_matrix(cfg, k, 2);
            CHECK(h.H.mul(g.transpose()).is_zero());
            CHECK(h.H.rank() == pts.size() + 1 - k);
        }
    });
    CHECK(branches == std::set<int>{0, 1});
}

TEST_CASE("extended r = k-1 parity under the vanishing hypothesis") {
    auto f = Field::make(13, 1);
    auto pts = cyclic_subgroup_points(f, 6); // t_5 = 0
    EvalConfig cfg = EvalConfig::with_unit_factors(pts);
    SymContext ctx(pts);
    for (std::size_t k = 3; k <= 4; ++k) {
        Matrix h = parity_of_sub_egrs_k1(pts, k);
        Matrix g = sub_egrs_matrix(cfg, k, k - 1);
        CHECK(h.mul(g.transpose()).is_zero());
        CHECK(h.rank() == pts.size() + 1 - k);
        CHECK_FALSE(h.at(h.rows() - 1, pts.size()).is_zero()); // trailing t_n
        CHECK(h.at(h.rows() - 1, pts.size()) == ctx.t(6));
    }
    CHECK_THROWS_AS(parity_of_sub_egrs_k1(elts(f, {0, 1, 2, 3, 4, 5}), 3), Error);
}

TEST_CASE("closed forms respect the dimension windows") {
    auto f = Field::make(11, 1);
    auto pts = elts(f, {0, 1, 2, 3, 4});
    CHECK_THROWS_AS(dual_of_sub1(pts, 1), Error);
    CHECK_THROWS_AS(dual_of_sub1(pts, 4), Error);
    CHECK_THROWS_AS(dual_of_sub2(pts, 2), Error);
    CHECK_THROWS_AS(dual_of_sub_k1(pts, 2), Error);
}
