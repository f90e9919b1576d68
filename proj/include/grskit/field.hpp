#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "grskit/errors.hpp"

namespace grskit {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^m).
///
/// Elements are canonical reduced coefficient vectors over Z_p, packed into a
/// single index: idx = sum_i c_i * p^i with c_0 the constant term. Index 0 is
/// the zero element and index 1 is the unit. Enumeration, square-root
/// tie-breaking and the default-modulus search all use ascending index order,
/// so every construction is reproducible bit for bit.
///
/// Multiplication, inversion and powering run off exp/log tables built from a
/// deterministically chosen primitive element; addition works digit-wise on
/// the packed index. The supported order is bounded by max_order (2^20),
/// which is far beyond the exhaustive searches this library is meant for.
class Field : public std::enable_shared_from_this<Field> {
public:
    static constexpr std::uint64_t max_order = std::uint64_t(1) << 20;

    /// Builds GF(p^m). If no modulus is given, the monic irreducible of
    /// degree m whose lower coefficients form the smallest base-p integer is
    /// selected (for m = 1 the modulus is x). A supplied modulus must be
    /// monic of degree m and irreducible over Z_p.
    static FieldPtr make(std::uint64_t p, unsigned m,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same_spec(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    // Index-level arithmetic. These are the hot-loop entry points; the
    // FieldElement wrappers below delegate here.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) {
            std::uint64_t s = std::uint64_t(a) + b;
            return std::uint32_t(s >= p_ ? s - p_ : s);
        }
        return add_slow(a, b);
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (m_ == 1) return a == 0 ? 0 : std::uint32_t(p_ - a);
        return neg_slow(a);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) raise(ErrorCode::division_by_zero, "inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

    /// Quadratic-residue test by the exponent criterion x^((q-1)/2) = 1; in
    /// characteristic 2 every element is a square, and 0 counts as a square.
    bool is_square(std::uint32_t a) const;

    /// A square root of a, deterministic: of the two candidates the one with
    /// the smaller index is returned. Throws not_a_square otherwise.
    std::uint32_t sqrt(std::uint32_t a) const;

    /// Index of the primitive element the exp/log tables are built from.
    std::uint32_t generator() const { return generator_; }

    FieldElement element(std::uint32_t idx) const;
    FieldElement element_from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// All q elements in ascending index order; starts at 0.
    std::vector<FieldElement> enumerate() const;

    std::vector<std::uint32_t> coeffs(std::uint32_t idx) const;

    void require_same(const Field& other) const {
        if (this != &other && !same_spec(other))
            raise(ErrorCode::field_mismatch, "elements belong to different fields");
    }

private:
    Field() = default;

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_slow(std::uint32_t a) const;
    void build_tables();

    std::uint64_t p_ = 0;
    unsigned m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_; // monic, length m+1, low to high
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> exp_; // exp_[i] = generator^i, i in [0, q-1)
    std::vector<std::uint32_t> log_; // log_[exp_[i]] = i, log_[0] unused
};

/// One element of a specific field. Cheap to copy; carries a non-owning
/// pointer to its field, so the Field must outlive the element.
class FieldElement {
public:
    FieldElement() : f_(nullptr), idx_(0) {}
    FieldElement(const Field* f, std::uint32_t idx) : f_(f), idx_(idx) {}

    std::uint32_t index() const { return idx_; }
    const Field& field() const { return *f_; }
    FieldPtr field_ptr() const { return f_->shared_from_this(); }
    std::vector<std::uint32_t> coeffs() const { return f_->coeffs(idx_); }

    bool is_zero() const { return idx_ == 0; }

    FieldElement operator+(const FieldElement& o) const {
        f_->require_same(*o.f_);
        return {f_, f_->add(idx_, o.idx_)};
    }
    FieldElement operator-(const FieldElement& o) const {
        f_->require_same(*o.f_);
        return {f_, f_->sub(idx_, o.idx_)};
    }
    FieldElement operator*(const FieldElement& o) const {
        f_->require_same(*o.f_);
        return {f_, f_->mul(idx_, o.idx_)};
    }
    FieldElement operator/(const FieldElement& o) const {
        f_->require_same(*o.f_);
        return {f_, f_->mul(idx_, f_->inv(o.idx_))};
    }
    FieldElement operator-() const { return {f_, f_->neg(idx_)}; }

    FieldElement inv() const { return {f_, f_->inv(idx_)}; }
    FieldElement pow(std::int64_t e) const { return {f_, f_->pow(idx_, e)}; }
    bool is_square() const { return f_->is_square(idx_); }
    FieldElement sqrt() const { return {f_, f_->sqrt(idx_)}; }

    bool operator==(const FieldElement& o) const {
        f_->require_same(*o.f_);
        return idx_ == o.idx_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    const Field* f_;
    std::uint32_t idx_;
};

} // namespace grskit
