#include <doctest.h>

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

} // namespace

TEST_CASE("eval config validation") {
    auto f = Field::make(5, 1);
    CHECK_THROWS_AS(EvalConfig(elts(f, {1, 1}), elts(f, {1, 1})), Error);
    CHECK_THROWS_AS(EvalConfig(elts(f, {1, 2}), elts(f, {1, 0})), Error);
    CHECK_THROWS_AS(EvalConfig(elts(f, {1, 2}), elts(f, {1})), Error);
    EvalConfig ok = EvalConfig::with_unit_factors(elts(f, {0, 3}));
    CHECK(ok.n() == 2);
}

TEST_CASE("evaluation map basics") {
    auto f = Field::make(5, 1);
    EvalConfig cfg(elts(f, {0, 1, 2}), elts(f, {1, 2, 3}));
    Poly one(f, {f->one()});
    auto v = evaluate(one, cfg);
    CHECK(v[0].index() == 1);
    CHECK(v[1].index() == 2);
    CHECK(v[2].index() == 3);

    EvalConfig plain = EvalConfig::with_unit_factors(elts(f, {0, 1, 2}));
    Poly x = Poly::monomial(f, 1);
    auto w = evaluate(x, plain);
    CHECK(w[0].index() == 0);
    CHECK(w[1].index() == 1);
    CHECK(w[2].index() == 2);

    // linearity
    Poly g(f, elts(f, {2, 0, 1}));
    Poly h(f, elts(f, {4, 3}));
    auto lhs = evaluate(g + h, cfg);
    auto rhs_g = evaluate(g, cfg);
    auto rhs_h = evaluate(h, cfg);
    for (std::size_t i = 0; i < 3; ++i) CHECK(lhs[i] == rhs_g[i] + rhs_h[i]);
}

TEST_CASE("degree sets") {
    CHECK(degree_set(5, 2) == std::vector<std::size_t>{0, 1, 2, 4, 5});
    CHECK(degree_set(2, 1) == std::vector<std::size_t>{0, 2});
    CHECK_THROWS_AS(degree_set(3, 3), Error);
    CHECK_THROWS_AS(degree_set(3, 0), Error);
}

TEST_CASE("plain codes: full space, distances, factor invariance") {
    auto f = Field::make(5, 1);
    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {0, 1, 2, 3}));
    CHECK(grs_code(cfg, 4).dimension() == 4);
    CHECK(grs_code(cfg, 2).min_distance() == 3);

    EvalConfig scaled(elts(f, {0, 1, 2, 3}), elts(f, {2, 4, 1, 3}));
    CHECK(grs_code(scaled, 2).min_distance() == 3);
    CHECK_THROWS_AS(grs_code(cfg, 5), Error);
    CHECK_THROWS_AS(grs_code(cfg, 0), Error);
}

TEST_CASE("extended codes carry the top coefficient") {
    auto f = Field::make(7, 1);
    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {0, 1, 2, 4}));
    Matrix g = egrs_matrix(cfg, 2);
    CHECK(g.cols() == 5);
    CHECK(g.idx_at(0, 4) == 0);
    CHECK(g.idx_at(1, 4) == 1); // degree k-1 row

    LinearCode c = egrs_code(cfg, 2);
    CHECK(c.length() == 5);
    CHECK(c.min_distance() == 4); // [n+1, k, n-k+2]
    CHECK(c.classify().category == Category::MDS);

    // k = 1: the single row is (v, 1), weight n+1
    LinearCode rep = egrs_code(cfg, 1);
    CHECK(rep.min_distance() == 5);
}

TEST_CASE("subcode generators drop the degree k-r row") {
    auto f = Field::make(7, 1);
    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {0, 1, 2, 4, 5}));
    Matrix g = sub_grs_matrix(cfg, 3, 1);
    // rows are degrees {0, 1, 3}
    Matrix expect = Matrix::vandermonde_rows(cfg.points(), {0, 1, 3});
    CHECK(g == expect);

    Matrix ge = sub_egrs_matrix(cfg, 3, 2);
    CHECK(ge.cols() == 6);
    CHECK(ge.idx_at(0, 5) == 0);
    CHECK(ge.idx_at(1, 5) == 0);
    CHECK(ge.idx_at(2, 5) == 1); // the degree-k row

    CHECK_THROWS_AS(sub_grs_matrix(cfg, 5, 1), Error); // k > n-1
}

TEST_CASE("subcodes sit inside the next bigger code with codimension 1") {
    auto f = Field::make(11, 1);
    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {0, 1, 2, 3, 7, 9}));
    for (std::size_t k = 2; k <= 5; ++k) {
        for (std::size_t r = 1; r <= k - 1; ++r) {
            Matrix sub = sub_grs_matrix(cfg, k, r);
            Matrix big = grs_matrix(cfg, k + 1);
            CHECK(sub.rank() == k);
            CHECK(sub.stacked(big).rank() == k + 1);
        }
    }
}

TEST_CASE("subcode classification stays in the AMDS band") {
    auto f = Field::make(7, 1);
    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {0, 1, 2, 4}));
    DistanceProfile dp = sub_grs_code(cfg, 2, 1).classify();
    CHECK((dp.category == Category::NMDS || dp.category == Category::MDS));

    // extended subcodes: d >= n-k+1 on length n+1
    for_each_combination(7, 5, [&](const std::vector<std::size_t>& idx) {
        auto pts = elts(f, std::vector<std::uint32_t>(idx.begin(), idx.end()));
        EvalConfig c = EvalConfig::with_unit_factors(pts);
        for (std::size_t k = 2; k <= 4; ++k)
            for (std::size_t r = 1; r <= k - 1; ++r)
                CHECK(sub_egrs_code(c, k, r).min_distance() >= 5 - k + 1);
    });
}

TEST_CASE("category of the subcode ignores the factors") {
    auto f = Field::make(11, 1);
    auto pts = elts(f, {0, 1, 2, 4, 8});
    std::uint64_t state = 5;
    auto next = [&] { return std::uint32_t((state = state * 6364136223846793005ULL + 1) >> 33); };
    for (std::size_t k = 2; k <= 4; ++k) {
        for (std::size_t r = 1; r <= k - 1; ++r) {
            Category base = sub_grs_code(EvalConfig::with_unit_factors(pts), k, r)
                                .classify().category;
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<FieldElement> v;
                for (std::size_t i = 0; i < pts.size(); ++i)
                    v.push_back(f->element(1 + next() % 10));
                CHECK(sub_grs_code(EvalConfig(pts, v), k, r).classify().category == base);
            }
        }
    }
}

TEST_CASE("plus-twist generator shape and twist") {
    auto f = Field::make(7, 1);
    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {1, 2, 3, 5}));
    FieldElement eta = f->element(3);
    Matrix g = plus_tgrs_matrix(cfg, 2, eta);
    for (std::size_t j = 0; j < 4; ++j) {
        FieldElement a = cfg.points()[j];
        CHECK(g.at(1, j) == a + eta * a * a);
    }
    CHECK_THROWS_AS(plus_tgrs_matrix(cfg, 2, f->zero()), Error);
}

TEST_CASE("general twist matrix") {
    auto f = Field::make(7, 1);
    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {1, 2, 3, 5, 6}));
    const std::size_t k = 2;

    Matrix zero_twist(f, k, 3);
    CHECK(tgrs_code(cfg, zero_twist).generator() == grs_code(cfg, k).generator());

    // a single eta_{k-1,0} entry reproduces the plus-twist family
    Matrix one_twist(f, k, 3);
    one_twist.set_idx(1, 0, 4);
    CHECK(tgrs_matrix(cfg, one_twist) == plus_tgrs_matrix(cfg, k, f->element(4)));

    std::uint64_t state = 77;
    auto next = [&] { return std::uint32_t((state = state * 6364136223846793005ULL + 1) >> 33); };
    for (int trial = 0; trial < 10; ++trial) {
        Matrix eta(f, k, 3);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < 3; ++j) eta.set_idx(i, j, next() % 7);
        CHECK(tgrs_code(cfg, eta).dimension() == k);
    }
    CHECK_THROWS_AS(tgrs_matrix(cfg, Matrix(f, 2, 2)), Error);
}

TEST_CASE("polynomial helpers") {
    auto f = Field::make(5, 1);
    Poly fa = Poly::from_roots(f, elts(f, {1, 2}));
    CHECK(fa.degree() == 2);
    CHECK(fa.coeff(0).index() == 2);  // 1*2
    CHECK(fa.coeff(1).index() == 2);  // -(1+2) = -3 = 2
    CHECK(fa.coeff(2).index() == 1);
    CHECK(fa(f->element(1)).is_zero());
    CHECK(fa(f->element(2)).is_zero());
    CHECK_FALSE(fa(f->element(3)).is_zero());
    CHECK(Poly::zero(f).degree() == -1);
}
