#pragma once

#include <vector>

#include "grskit/field.hpp"

namespace grskit {

/// Elementary symmetric polynomial s_r of the given values, computed by the
/// one-point extension recurrence s_r(A u {b}) = s_r(A) + b s_{r-1}(A).
/// s_0 = 1 and r beyond the number of values gives 0.
FieldElement elem_sym(const std::vector<FieldElement>& vals, std::size_t r);

/// All s_0 .. s_n of the values in one pass.
std::vector<FieldElement> elem_sym_all(const std::vector<FieldElement>& vals);

/// Lagrange coefficients u_i = prod_{j != i} (a_i - a_j)^{-1}. This is the
/// orientation that makes sum_i u_i a_i^(n-1) = 1; the construction check in
/// SymContext guards it.
std::vector<FieldElement> lagrange_u(const std::vector<FieldElement>& points);

/// s_r of the points with the i-th one removed.
FieldElement deleted_sym(const std::vector<FieldElement>& points, std::size_t i, std::size_t r);

/// Caches u_i, t_l = s_l(a), the deleted values s_{n-2}(a \ {a_i}) and the
/// first three moments h_l = sum_i u_i a_i^(n-1+l). Construction recomputes
/// sum_i u_i a_i^l for l in [0, n-1] and insists on the 0,...,0,1 pattern.
class SymContext {
public:
    explicit SymContext(std::vector<FieldElement> points);

    std::size_t n() const { return a_.size(); }
    const Field& field() const { return *f_; }
    FieldPtr field_ptr() const { return f_; }
    const std::vector<FieldElement>& points() const { return a_; }
    const std::vector<FieldElement>& u() const { return u_; }

    FieldElement t(std::size_t l) const;
    FieldElement h(std::size_t l) const;
    FieldElement deleted_s_n2(std::size_t i) const;

    /// sum_i u_i a_i^l for 0 <= l <= n+1.
    FieldElement moment(std::size_t l) const;

    /// sum_i a_i^l u_i s_{n-2}(a \ {a_i}) for 0 <= l <= n+1.
    FieldElement deleted_moment(std::size_t l) const;

private:
    FieldPtr f_;
    std::vector<FieldElement> a_;
    std::vector<FieldElement> u_;
    std::vector<FieldElement> t_;    // t_[l] = s_l(a), l = 0..n
    std::vector<FieldElement> sdel_; // s_{n-2}(a \ {a_i})
    std::vector<FieldElement> h_;    // h_0, h_1, h_2
};

/// The closed forms the moments must match: 0 for l <= n-2, 1 at n-1,
/// t_1 at n, t_1^2 - t_2 at n+1.
FieldElement moment_closed_form(const SymContext& ctx, std::size_t l);

/// Closed forms of the deleted moments: (-1)^n at l = 1, 0 on
/// {0} and [2, n-1], t_{n-1} at n, t_1 t_{n-1} - t_n at n+1.
FieldElement deleted_moment_closed_form(const SymContext& ctx, std::size_t l);

/// The n elements of the unique multiplicative subgroup of order n, listed
/// as consecutive powers of g^((q-1)/n) for the field's canonical primitive
/// element g. Requires n | q-1.
std::vector<FieldElement> cyclic_subgroup_points(const FieldPtr& f, std::size_t n);

} // namespace grskit
