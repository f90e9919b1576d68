#include <doctest.h>

#include <set>

#include "grskit/combin.hpp"
#include "grskit/selfdual.hpp"
#include "grskit/code.hpp"
#include "grskit/family.hpp"
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

TEST_CASE("full GRS self-dual characterization is exact for q <= 7, n = 4") {
    for (auto q : {std::uint64_t(5), std::uint64_t(7)}) {
        auto f = Field::make(q, 1);
        for_each_subset(f, 4, [&](const std::vector<FieldElement>& pts) {
            auto verdict = grs_selfdual_exists(pts);
            if (verdict.exists) {
                EvalConfig cfg(pts, verdict.witness_factors);
                CHECK(grs_code(cfg, 2).is_self_dual());
            }
            auto found = exhaustive_selfdual_search(pts, CodeShape::grs, 2, 0);
            CHECK(found.has_value() == verdict.exists);
        });
    }
}

TEST_CASE("r = 1 witnesses build self-dual codes") {
    auto f = Field::make(13, 1);
    int exists_count = 0;
    for_each_subset(f, 8, [&](const std::vector<FieldElement>& pts) {
        auto verdict = sub1_selfdual_exists(pts);
        CHECK_FALSE(verdict.outside_hypothesis); // n = 8 is inside
        if (!verdict.exists) return;
        ++exists_count;
        EvalConfig cfg(pts, verdict.witness_factors);
        LinearCode c = sub_grs_code(cfg, 4, 1);
        CHECK(c.is_self_dual());
        auto dp = c.classify();
        CHECK((dp.category == Category::NMDS || dp.category == Category::MDS));
    });
    CHECK(exists_count > 0);
}

TEST_CASE("r = 1 existence needs t_1 = 0") {
    auto f = Field::make(11, 1);
    auto pts = elts(f, {0, 1, 2, 3, 4, 5, 6, 7}); // t_1 = 28 = 6 mod 11
    auto verdict = sub1_selfdual_exists(pts);
    CHECK_FALSE(verdict.exists);
    CHECK_FALSE(verdict.symmetric_condition);
}

TEST_CASE("outside the stated length hypothesis the formula can under-report") {
    // n = 4 < 8: mixed squareness of the u_i does not rule out self-dual
    // factors; the length-4 exponent sums skip too many rows for the
    // kernel argument to pin v^2 to the u line.
    auto f = Field::make(5, 1);
    auto pts = elts(f, {1, 2, 3, 4});
    auto verdict = sub1_selfdual_exists(pts);
    CHECK(verdict.outside_hypothesis);
    CHECK_FALSE(verdict.exists); // formula: t_1 = 0 but squareness is mixed
    auto found = exhaustive_selfdual_search(pts, CodeShape::sub_grs, 2, 1);
    REQUIRE(found.has_value());
    EvalConfig cfg(pts, *found);
    CHECK(sub_grs_code(cfg, 2, 1).is_self_dual());
}

TEST_CASE("point shifts clear the sum and keep u") {
    auto f = Field::make(13, 1);
    auto pts = elts(f, {2, 3, 7, 11});
    auto shifted = shift_points(pts);
    CHECK(elem_sym(shifted, 1).is_zero());
    auto ua = lagrange_u(pts);
    auto ub = lagrange_u(shifted);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(ua[i] == ub[i]);

    auto f3 = Field::make(3, 1);
    CHECK_THROWS_AS(shift_points(elts(f3, {0, 1, 2})), Error);
}

TEST_CASE("self-dual GRS transfers to the r = 1 subcode after shifting") {
    auto f = Field::make(13, 1);
    int transfers = 0;
    for_each_subset(f, 6, [&](const std::vector<FieldElement>& pts) {
        auto before = grs_selfdual_exists(pts);
        if (!before.exists) return;
        auto shifted = shift_points(pts);
        auto after = sub1_selfdual_exists(shifted);
        CHECK(after.exists);
        ++transfers;
    });
    CHECK(transfers > 0);
}

TEST_CASE("r = k-1 characterization on the GF(17) subgroup") {
    auto f = Field::make(17, 1);
    auto pts = cyclic_subgroup_points(f, 8);
    auto verdict = subk1_selfdual_exists(pts);
    REQUIRE(verdict.exists);
    EvalConfig cfg(pts, verdict.witness_factors);
    LinearCode c = sub_grs_code(cfg, 4, 3);
    CHECK(c.is_self_dual());
    auto dp = c.classify();
    CHECK((dp.category == Category::NMDS || dp.category == Category::MDS));
}

TEST_CASE("r = k-1 existence needs t_{n-1} = 0") {
    auto f = Field::make(13, 1);
    auto pts = elts(f, {0, 1, 2, 3, 4, 5, 6, 7});
    // 0 among the points forces t_{n-1} != 0
    auto verdict = subk1_selfdual_exists(pts);
    CHECK_FALSE(verdict.exists);
    CHECK_FALSE(verdict.symmetric_condition);
}

TEST_CASE("extended r = k-1 witnesses include the extension column") {
    auto f = Field::make(17, 1);
    int exists_count = 0;
    for_each_subset(f, 7, [&](const std::vector<FieldElement>& pts) {
        auto verdict = sub_egrs_k1_selfdual_exists(pts);
        if (!verdict.exists) return;
        ++exists_count;
        EvalConfig cfg(pts, verdict.witness_factors);
        Matrix g = sub_egrs_matrix(cfg, 4, 3);
        CHECK(gram_vanishes(g));
        CHECK(LinearCode::from_generator(g).is_self_dual());
    });
    CHECK(exists_count > 0);
}

TEST_CASE("extended verdicts reject t_{n-1} != 0 and enforce parity") {
    auto f = Field::make(13, 1);
    auto verdict = sub_egrs_k1_selfdual_exists(elts(f, {0, 1, 2, 3, 4, 5, 6}));
    CHECK_FALSE(verdict.exists);
    CHECK_THROWS_AS(sub_egrs_k1_selfdual_exists(elts(f, {0, 1, 2, 3, 4, 5})), Error);
    auto f2 = Field::make(2, 3);
    CHECK_THROWS_AS(sub1_selfdual_exists(elts(f2, {0, 1, 2, 3})), Error);
}

TEST_CASE("midrange subcodes can never be self-dual") {
    auto f = Field::make(13, 1);
    auto pts = elts(f, {0, 1, 2, 3, 4, 5, 6, 7});
    auto cert = midrange_never_selfdual(pts, 4, 2);
    CHECK(cert.impossible);
    CHECK(cert.rank == 8);

    std::uint64_t state = 31337;
    auto next = [&] { return std::uint32_t((state = state * 6364136223846793005ULL + 1) >> 33); };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<FieldElement> v;
        for (std::size_t i = 0; i < 8; ++i) v.push_back(f->element(1 + next() % 12));
        CHECK_FALSE(gram_vanishes(sub_grs_matrix(EvalConfig(pts, v), 4, 2)));
    }

    auto pts7 = elts(f, {1, 2, 3, 4, 5, 6, 7});
    auto ecert = midrange_never_selfdual(pts7, 4, 2);
    CHECK(ecert.extended);
    CHECK(ecert.impossible);

    CHECK_THROWS_AS(midrange_never_selfdual(pts, 4, 1), Error);
    CHECK_THROWS_AS(midrange_never_selfdual(pts, 4, 3), Error);
}

TEST_CASE("exhaustive midrange sweep finds nothing, GF(9)") {
    // within the stated regime (n = 2k = 8, r = 2) the whole factor space of
    // one point set is scanned
    auto f = Field::make(3, 2);
    auto pts = f->enumerate();
    pts.erase(pts.begin()); // drop 0, keep the 8 nonzero elements
    auto found = exhaustive_selfdual_search(pts, CodeShape::sub_grs, 4, 2);
    CHECK_FALSE(found.has_value());
}

TEST_CASE("characteristic 2 is rejected for squareness predicates only") {
    auto f = Field::make(2, 3);
    auto pts = elts(f, {1, 2, 3, 4});
    CHECK_THROWS_AS(grs_selfdual_exists(pts), Error);
    // the Gram route still works in characteristic 2
    Matrix g = sub_grs_matrix(EvalConfig::with_unit_factors(pts), 2, 1);
    CHECK((gram_vanishes(g) || !gram_vanishes(g)));
}
