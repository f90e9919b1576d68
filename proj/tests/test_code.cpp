#include <doctest.h>

#include "grskit/code.hpp"
#include "grskit/combin.hpp"
#include "grskit/family.hpp"

using namespace grskit;

namespace {

std::vector<FieldElement> elts(const FieldPtr& f, const std::vector<std::uint32_t>& idx) {
    std::vector<FieldElement> out;
    for (auto i : idx) out.push_back(f->element(i));
    return out;
}

Matrix from_rows(const FieldPtr& f, const std::vector<std::vector<std::uint32_t>>& rows) {
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set_idx(i, j, rows[i][j]);
    return m;
}

// Second distance oracle: d = n - (largest column set some nonzero codeword
// vanishes on), where the vanishing test is a rank deficiency of the chosen
// columns.
std::uint32_t min_distance_by_column_ranks(const LinearCode& c) {
    const std::size_t n = c.length(), k = c.dimension();
    std::size_t best_zeros = 0;
    for (std::size_t z = 1; z <= n; ++z) {
        bool possible = false;
        for_each_combination(n, z, [&](const std::vector<std::size_t>& idx) {
            if (c.generator().columns(idx).rank() < k) possible = true;
        });
        if (possible) best_zeros = z;
    }
    return std::uint32_t(n - best_zeros);
}

} // namespace

TEST_CASE("code construction normalizes the generator") {
    auto f = Field::make(5, 1);
    LinearCode c = LinearCode::from_generator(from_rows(f, {{1, 0, 0, 2}, {0, 1, 0, 3}}));
    CHECK(c.length() == 4);
    CHECK(c.dimension() == 2);

    LinearCode dup = LinearCode::from_generator(from_rows(f, {{1, 2, 3}, {1, 2, 3}}));
    CHECK(dup.dimension() == 1);

    CHECK_THROWS_AS(LinearCode::from_generator(Matrix(f, 2, 3)), Error);
}

TEST_CASE("duals: involution, zero duals, MDS duals") {
    auto f = Field::make(5, 1);
    LinearCode full = LinearCode::from_generator(Matrix::identity(f, 3));
    LinearCode zero = full.dual();
    CHECK(zero.dimension() == 0);
    CHECK(zero.dual() == full);

    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {0, 1, 2, 3}));
    LinearCode grs2 = grs_code(cfg, 2);
    DistanceProfile dp = grs2.dual().classify();
    CHECK(dp.category == Category::MDS);

    std::uint64_t state = 7;
    auto next = [&] { return std::uint32_t((state = state * 6364136223846793005ULL + 1) >> 33); };
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + next() % 3, cols = rows + 1 + next() % 3;
        Matrix g(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) g.set_idx(i, j, next() % 5);
        if (g.is_zero()) continue;
        LinearCode c = LinearCode::from_generator(g);
        CHECK(c.dual().dual() == c);
        CHECK(c.dual().dimension() == cols - c.dimension());
    }
}

TEST_CASE("minimum distances of small known codes") {
    auto f = Field::make(5, 1);
    LinearCode rep = LinearCode::from_generator(from_rows(f, {{1, 2, 1, 4}}));
    CHECK(rep.min_distance() == 4);

    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {0, 1, 2, 3}));
    CHECK(grs_code(cfg, 2).min_distance() == 3);

    auto f7 = Field::make(7, 1);
    EvalConfig cfg7 = EvalConfig::with_unit_factors(elts(f7, {0, 1, 2, 4}));
    // 1+2+4 = 0 mod 7, so the degree-{0,1,3} code has the weight-1 codeword
    // from (x-1)(x-2)(x-4) and sits at d = n-k
    std::uint32_t d = sub_grs_code(cfg7, 3, 1).min_distance();
    CHECK(d == 1);
}

TEST_CASE("message enumeration agrees with the column-rank oracle") {
    for (auto q : {std::uint64_t(5), std::uint64_t(7)}) {
        auto f = Field::make(q, 1);
        std::uint64_t state = q;
        auto next = [&] {
            return std::uint32_t((state = state * 6364136223846793005ULL + 5) >> 33);
        };
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t k = 1 + next() % 3, n = k + 1 + next() % 4;
            Matrix g(f, k, n);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < n; ++j) g.set_idx(i, j, next() % std::uint32_t(q));
            if (row_basis(g).rows() != k) continue;
            LinearCode c = LinearCode::from_generator(g);
            CHECK(c.min_distance() == min_distance_by_column_ranks(c));
        }
    }
}

TEST_CASE("classification categories") {
    auto f = Field::make(5, 1);
    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {0, 1, 2, 3}));
    DistanceProfile mds = grs_code(cfg, 2).classify();
    CHECK(mds.category == Category::MDS);
    CHECK(mds.d == 3);
    CHECK(mds.d_dual == 3);

    // d = n-k with a zero column in the generator: the dual has distance 1
    LinearCode other = LinearCode::from_generator(from_rows(f, {{1, 1, 0, 0}, {0, 1, 1, 0}}));
    DistanceProfile dp = other.classify();
    CHECK(dp.d == 2);
    CHECK(dp.d_dual == 1);
    CHECK(dp.category == Category::OTHER);

    LinearCode full = LinearCode::from_generator(Matrix::identity(f, 3));
    DistanceProfile fp = full.classify();
    CHECK(fp.category == Category::MDS);
    CHECK(fp.d_dual == 4); // vacuous maximum for the zero dual

    CHECK_THROWS_AS(full.dual().classify(), Error);
}

TEST_CASE("self-duality by the Gram test") {
    auto f = Field::make(5, 1);
    CHECK(LinearCode::from_generator(from_rows(f, {{1, 2}})).is_self_dual());
    CHECK_FALSE(LinearCode::from_generator(from_rows(f, {{1, 1}})).is_self_dual());
    CHECK_FALSE(LinearCode::from_generator(from_rows(f, {{1, 2, 3}})).is_self_dual());
}

TEST_CASE("both self-duality definitions agree on random codes") {
    auto f = Field::make(13, 1);
    std::uint64_t state = 2024;
    auto next = [&] { return std::uint32_t((state = state * 6364136223846793005ULL + 9) >> 33); };
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t k = 1 + next() % 3;
        Matrix g(f, k, 2 * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < 2 * k; ++j) g.set_idx(i, j, next() % 13);
        if (g.is_zero()) continue;
        LinearCode c = LinearCode::from_generator(g);
        bool by_rows = c.dimension() * 2 == c.length() &&
                       row_space_equal(c.generator(), c.dual().generator());
        CHECK(c.is_self_dual() == by_rows);
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("singleton bound on constructed codes") {
    auto f = Field::make(7, 1);
    for_each_combination(7, 5, [&](const std::vector<std::size_t>& idx) {
        auto pts = elts(f, std::vector<std::uint32_t>(idx.begin(), idx.end()));
        EvalConfig cfg = EvalConfig::with_unit_factors(pts);
        for (std::size_t k = 1; k <= 5; ++k) {
            LinearCode c = grs_code(cfg, k);
            CHECK(c.min_distance() <= c.length() - c.dimension() + 1);
        }
    });
}

TEST_CASE("enumeration guard") {
    auto f = Field::make(13, 1);
    EvalConfig cfg = EvalConfig::with_unit_factors(elts(f, {0, 1, 2, 3, 4, 5, 6, 7}));
    LinearCode c = grs_code(cfg, 6);
    CHECK_THROWS_AS(c.min_distance(1000), Error);
    try {
        c.min_distance(1000);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::too_large);
    }
}
