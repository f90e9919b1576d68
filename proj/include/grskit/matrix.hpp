#pragma once

#include <cstddef>
#include <vector>

#include "grskit/field.hpp"

namespace grskit {

/// Dense matrix over a field, row major, immutable in spirit: operations
/// return fresh matrices. Entries are stored as packed element indices.
class Matrix {
public:
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), d_(rows * cols, 0) {}

    /// n x n Vandermonde matrix, row j holding the j-th powers of the
    /// pairwise distinct points.
    static Matrix vandermonde(const std::vector<FieldElement>& points);

    /// Rows of the Vandermonde matrix restricted to the degrees in J,
    /// emitted in increasing degree order.
    static Matrix vandermonde_rows(const std::vector<FieldElement>& points,
                                   const std::vector<std::size_t>& degrees);

    static Matrix diagonal(const std::vector<FieldElement>& entries);
    static Matrix identity(FieldPtr f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return *f_; }
    FieldPtr field_ptr() const { return f_; }

    FieldElement at(std::size_t r, std::size_t c) const {
        return {f_.get(), d_[r * cols_ + c]};
    }
    std::uint32_t idx_at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const FieldElement& v) {
        f_->require_same(v.field());
        d_[r * cols_ + c] = v.index();
    }
    void set_idx(std::size_t r, std::size_t c, std::uint32_t idx) { d_[r * cols_ + c] = idx; }

    const std::vector<std::uint32_t>& data() const { return d_; }

    bool is_zero() const;

    Matrix mul(const Matrix& other) const;
    Matrix transpose() const;

    /// Unique reduced row-echelon form. Pivoting takes the first nonzero
    /// entry in each column; there is no magnitude to prefer in an exact
    /// field, and the fixed rule keeps every downstream report deterministic.
    Matrix rref() const;
    std::size_t rank() const;

    /// Basis of {x : M x^T = 0} as the rows of a (cols - rank) x cols matrix,
    /// returned in rref so that span comparisons are plain equality.
    Matrix right_kernel() const;

    /// Rows restricted to the given column indices, in the given order.
    Matrix columns(const std::vector<std::size_t>& idx) const;

    /// Vertical stack; both operands must agree on field and column count.
    Matrix stacked(const Matrix& below) const;

    bool operator==(const Matrix& o) const {
        return f_->same_spec(*o.f_) && rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    FieldPtr f_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> d_;
};

/// True when the two matrices span the same row space (rref with zero rows
/// dropped compares equal).
bool row_space_equal(const Matrix& a, const Matrix& b);

/// rref with zero rows removed; the canonical basis used by LinearCode.
Matrix row_basis(const Matrix& m);

} // namespace grskit
