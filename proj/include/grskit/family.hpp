#pragma once

#include <vector>

#include "grskit/code.hpp"
#include "grskit/matrix.hpp"

namespace grskit {

/// Pairwise distinct evaluation points together with nonzero column factors;
/// the (a, v) pair every code here is built from. n <= q is enforced since
/// the points live in one field.
class EvalConfig {
public:
    EvalConfig(std::vector<FieldElement> points, std::vector<FieldElement> factors);

    /// All factors equal to one.
    static EvalConfig with_unit_factors(std::vector<FieldElement> points);

    std::size_t n() const { return points_.size(); }
    const Field& field() const { return *f_; }
    FieldPtr field_ptr() const { return f_; }
    const std::vector<FieldElement>& points() const { return points_; }
    const std::vector<FieldElement>& factors() const { return factors_; }

private:
    FieldPtr f_;
    std::vector<FieldElement> points_;
    std::vector<FieldElement> factors_;
};

/// Polynomial over a field, coefficients low to high, trailing coefficient
/// nonzero. The zero polynomial has an empty coefficient list and degree -1.
class Poly {
public:
    Poly(FieldPtr f, std::vector<FieldElement> coeffs);

    static Poly zero(FieldPtr f);
    static Poly monomial(FieldPtr f, std::size_t degree);
    /// prod (x - r) over the given roots; monic.
    static Poly from_roots(FieldPtr f, const std::vector<FieldElement>& roots);

    int degree() const { return int(coeffs_.size()) - 1; }
    FieldElement coeff(std::size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldPtr field_ptr() const { return f_; }

    FieldElement operator()(const FieldElement& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldElement& c) const;

private:
    FieldPtr f_;
    std::vector<FieldElement> coeffs_;
};

/// The evaluation map: (v_1 f(a_1), ..., v_n f(a_n)).
std::vector<FieldElement> evaluate(const Poly& f, const EvalConfig& cfg);

/// J(k, r) = [0, k] minus {k - r}, the degree set of the subcodes.
std::vector<std::size_t> degree_set(std::size_t k, std::size_t r);

// Generator matrices in the canonical layout: rows in increasing monomial
// degree, extension column last. The *_code wrappers rref them into codes.
Matrix grs_matrix(const EvalConfig& cfg, std::size_t k);
Matrix egrs_matrix(const EvalConfig& cfg, std::size_t k);
Matrix sub_grs_matrix(const EvalConfig& cfg, std::size_t k, std::size_t r);
Matrix sub_egrs_matrix(const EvalConfig& cfg, std::size_t k, std::size_t r);
Matrix plus_tgrs_matrix(const EvalConfig& cfg, std::size_t k, const FieldElement& eta);
Matrix tgrs_matrix(const EvalConfig& cfg, const Matrix& eta);

LinearCode grs_code(const EvalConfig& cfg, std::size_t k);
LinearCode egrs_code(const EvalConfig& cfg, std::size_t k);
LinearCode sub_grs_code(const EvalConfig& cfg, std::size_t k, std::size_t r);
LinearCode sub_egrs_code(const EvalConfig& cfg, std::size_t k, std::size_t r);
LinearCode plus_tgrs_code(const EvalConfig& cfg, std::size_t k, const FieldElement& eta);
LinearCode tgrs_code(const EvalConfig& cfg, const Matrix& eta);

} // namespace grskit
