#pragma once

#include <optional>
#include <vector>

#include "grskit/code.hpp"
#include "grskit/family.hpp"

namespace grskit {

/// Closed-form dual of the r = 1 subcode on the given points with the given
/// factors (defaulting to all ones). With t_1 = 0 the dual is again an r = 1
/// subcode on factors u_i/v_i; with t_1 != 0 it is the plus-twist code with
/// eta = -1/t_1. Needs 2 <= k <= n-2.
LinearCode dual_of_sub1(const std::vector<FieldElement>& points, std::size_t k,
                        const std::vector<FieldElement>* factors = nullptr);

/// Closed-form dual of the r = k-1 subcode, valid when t_{n-1} = 0 (throws
/// hypothesis_failed otherwise): the r' = n-k-1 subcode on factors
/// u_i s_{n-2}(a_i) / v_i. Needs 3 <= k <= n-2.
LinearCode dual_of_sub_k1(const std::vector<FieldElement>& points, std::size_t k,
                          const std::vector<FieldElement>* factors = nullptr);

/// Closed-form dual of the r = 2 subcode. The top basis polynomial g is
/// picked by the five-way (h_1, h_2) case split; the span
/// {1, x, ..., x^(n-k-2), g} is evaluated with factors u_i/v_i.
struct DualOfSub2 {
    LinearCode code;
    int case_id; // 1..5 in the order of the (h_1, h_2) dispatch
    Poly g;
};
DualOfSub2 dual_of_sub2(const std::vector<FieldElement>& points, std::size_t k,
                        const std::vector<FieldElement>* factors = nullptr);

/// Parity-check matrix of the extended r = 1 subcode: degree rows 0..n-k
/// with last-column entries -1 (degree n-k-1) and -t_1 (degree n-k), scaled
/// by D(u_1/v_1, ..., u_n/v_n, 1). Valid for 1 <= k <= n-1, any t_1.
Matrix parity_of_sub_egrs_1(const std::vector<FieldElement>& points, std::size_t k,
                            const std::vector<FieldElement>* factors = nullptr);

/// Parity-check matrix of the extended r = 2 subcode; branch 0 (t_1 = 0)
/// appends (0,...,0,-1,t_2) to the r = 1 subcode rows on factors u, branch 1
/// (t_1 != 0) appends (0,...,0,-1,-t_2/t_1) to the plus-twist rows with
/// eta = -1/t_1. Needs 3 <= k <= n-2.
struct ParityOfSub2 {
    Matrix H;
    int branch; // 0: t_1 = 0, 1: t_1 != 0
};
ParityOfSub2 parity_of_sub_egrs_2(const std::vector<FieldElement>& points, std::size_t k,
                                  const std::vector<FieldElement>* factors = nullptr);

/// Parity-check matrix of the extended r = k-1 subcode under t_{n-1} = 0:
/// degree rows {0} u [2, n-k] u {n-k+1}, trailing column t_n on the last
/// row, scaled by D(u_1 s_{n-2}(a_1)/v_1, ..., 1). Needs 3 <= k <= n-2.
Matrix parity_of_sub_egrs_k1(const std::vector<FieldElement>& points, std::size_t k,
                             const std::vector<FieldElement>* factors = nullptr);

} // namespace grskit
