#include "grskit/matrix.hpp"

#include <algorithm>

namespace grskit {

namespace {

void check_distinct(const std::vector<FieldElement>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].index() == points[j].index())
                raise(ErrorCode::duplicate_points, "evaluation points must be pairwise distinct");
}

} // namespace

Matrix Matrix::vandermonde(const std::vector<FieldElement>& points) {
    std::vector<std::size_t> degrees(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) degrees[j] = j;
    return vandermonde_rows(points, degrees);
}

Matrix Matrix::vandermonde_rows(const std::vector<FieldElement>& points,
                                const std::vector<std::size_t>& degrees) {
    if (points.empty()) raise(ErrorCode::out_of_range, "no evaluation points");
    check_distinct(points);
    auto f = points[0].field_ptr();
    std::vector<std::size_t> degs = degrees;
    std::sort(degs.begin(), degs.end());
    Matrix out(f, degs.size(), points.size());
    for (std::size_t r = 0; r < degs.size(); ++r)
        for (std::size_t c = 0; c < points.size(); ++c)
            out.set_idx(r, c, f->pow(points[c].index(), std::int64_t(degs[r])));
    return out;
}

Matrix Matrix::diagonal(const std::vector<FieldElement>& entries) {
    if (entries.empty()) raise(ErrorCode::out_of_range, "empty diagonal");
    auto f = entries[0].field_ptr();
    Matrix out(f, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) out.set_idx(i, i, entries[i].index());
    return out;
}

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
    Matrix out(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) out.set_idx(i, i, 1);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](std::uint32_t x) { return x == 0; });
}

Matrix Matrix::mul(const Matrix& other) const {
    f_->require_same(*other.f_);
    if (cols_ != other.rows_) raise(ErrorCode::shape_mismatch, "matrix product shape mismatch");
    Matrix out(f_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t l = 0; l < cols_; ++l) {
            std::uint32_t a = d_[i * cols_ + l];
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                std::uint32_t prod = f_->mul(a, other.d_[l * other.cols_ + j]);
                out.d_[i * other.cols_ + j] = f_->add(out.d_[i * other.cols_ + j], prod);
            }
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.d_[j * rows_ + i] = d_[i * cols_ + j];
    return out;
}

Matrix Matrix::rref() const {
    Matrix m = *this;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows_ && m.d_[sel * cols_ + col] == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m.d_[sel * cols_ + j], m.d_[pivot_row * cols_ + j]);
        std::uint32_t inv = f_->inv(m.d_[pivot_row * cols_ + col]);
        for (std::size_t j = col; j < cols_; ++j)
            m.d_[pivot_row * cols_ + j] = f_->mul(m.d_[pivot_row * cols_ + j], inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pivot_row) continue;
            std::uint32_t factor = m.d_[r * cols_ + col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                std::uint32_t t = f_->mul(factor, m.d_[pivot_row * cols_ + j]);
                m.d_[r * cols_ + j] = f_->sub(m.d_[r * cols_ + j], t);
            }
        }
        ++pivot_row;
    }
    return m;
}

std::size_t Matrix::rank() const {
    Matrix r = rref();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < cols_; ++j)
            if (r.d_[i * cols_ + j] != 0) { nonzero = true; break; }
        if (nonzero) ++rank;
    }
    return rank;
}

Matrix Matrix::right_kernel() const {
    Matrix r = rref();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (r.d_[i * cols_ + j] != 0) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
        }
    }
    const std::size_t rank = pivot_col.size();
    Matrix basis(f_, cols_ - rank, cols_);
    std::size_t row = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        basis.set_idx(row, j, 1);
        for (std::size_t i = 0; i < rank; ++i)
            basis.set_idx(row, pivot_col[i], f_->neg(r.d_[i * cols_ + j]));
        ++row;
    }
    return basis.rref();
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix out(f_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            out.d_[i * idx.size() + j] = d_[i * cols_ + idx[j]];
    return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
    f_->require_same(*below.f_);
    if (cols_ != below.cols_) raise(ErrorCode::shape_mismatch, "stack column mismatch");
    Matrix out(f_, rows_ + below.rows_, cols_);
    std::copy(d_.begin(), d_.end(), out.d_.begin());
    std::copy(below.d_.begin(), below.d_.end(), out.d_.begin() + std::ptrdiff_t(d_.size()));
    return out;
}

Matrix row_basis(const Matrix& m) {
    Matrix r = m.rref();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (r.idx_at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) keep.push_back(i);
    }
    Matrix out(m.field_ptr(), keep.size(), r.cols());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            out.set_idx(i, j, r.idx_at(keep[i], j));
    return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (!a.field().same_spec(b.field())) raise(ErrorCode::field_mismatch, "row spaces over different fields");
    if (a.cols() != b.cols()) raise(ErrorCode::shape_mismatch, "row spaces of different length");
    return row_basis(a) == row_basis(b);
}

} // namespace grskit
