#pragma once

#include <cstdint>
#include <string>

#include "grskit/matrix.hpp"

namespace grskit {

enum class Category { MDS, AMDS, NMDS, OTHER };

const char* category_name(Category c);

/// Distance data of a code and its dual. Category rules:
/// MDS when d = n-k+1, NMDS when d = n-k and the dual distance is k
/// (both the code and its dual are almost-MDS), AMDS when only d = n-k,
/// OTHER for everything else.
struct DistanceProfile {
    std::uint32_t d = 0;
    std::uint32_t d_dual = 0;
    Category category = Category::OTHER;
};

/// A linear [n, k] code stored as the canonical rref row basis of its
/// generator. Zero-dimensional codes are representable (empty generator) so
/// that dual() is total; classification and distance reject them.
class LinearCode {
public:
    /// Builds the code spanned by the rows of G. Throws zero_matrix when G
    /// has no nonzero entry.
    static LinearCode from_generator(const Matrix& G);

    /// The [n, 0] code. Internal counterpart of dual(full space).
    static LinearCode zero_code(FieldPtr f, std::size_t n);

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    const Matrix& generator() const { return gen_; }
    const Field& field() const { return *f_; }
    FieldPtr field_ptr() const { return f_; }

    LinearCode dual() const;

    /// Exact minimum distance by exhaustive message enumeration. Messages
    /// are scanned up to leading-coefficient normalization (weight is
    /// invariant under scalar multiples), stepping a base-q odometer so each
    /// codeword is one row-delta away from its predecessor. Guarded by
    /// q^k <= max_work.
    std::uint32_t min_distance(std::uint64_t max_work = default_max_work) const;

    DistanceProfile classify(std::uint64_t max_work = default_max_work) const;

    /// n = 2k and G G^T = 0; equivalent to row-space equality with the dual.
    bool is_self_dual() const;

    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

    static constexpr std::uint64_t default_max_work = 100000000; // 10^8

private:
    LinearCode(FieldPtr f, std::size_t n, std::size_t k, Matrix gen)
        : f_(std::move(f)), n_(n), k_(k), gen_(std::move(gen)) {}

    FieldPtr f_;
    std::size_t n_, k_;
    Matrix gen_;
};

/// True when G G^T = 0 for this specific matrix; basis independent, shared
/// by the self-dual constructions that need to validate explicit witnesses.
bool gram_vanishes(const Matrix& G);

} // namespace grskit
