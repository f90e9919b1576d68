#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grskit/field.hpp"

namespace grskit {

/// Verdict of a self-dual existence test. When exists is true the witness
/// factors build a self-dual code (validated by the caller or the tests via
/// the Gram matrix). outside_hypothesis flags parameters the characterization
/// is evaluated on but not stated for (the theorems assume length >= 8), so
/// audits can separate the proven regime from extrapolation.
struct SelfDualVerdict {
    bool exists = false;
    bool outside_hypothesis = false;
    bool symmetric_condition = false; // the t-value condition of the theorem
    bool square_condition = false;    // the squareness pattern condition
    std::string reason;
    std::vector<FieldElement> witness_factors;
};

/// Full GRS code, n = 2k <= q: factors exist iff the Lagrange coefficients
/// u_i are simultaneously squares or non-squares. Witness v_i = sqrt(u_i/u_1).
SelfDualVerdict grs_selfdual_exists(const std::vector<FieldElement>& points);

/// Subcode with the degree-(k-1) row removed, r = 1: exists iff t_1 = 0 and
/// the u_i squareness is uniform.
SelfDualVerdict sub1_selfdual_exists(const std::vector<FieldElement>& points);

/// Subcode with the degree-1 row removed, r = k-1: exists iff t_{n-1} = 0 and
/// the values u_i s_{n-2}(a \ {a_i}) have uniform squareness.
SelfDualVerdict subk1_selfdual_exists(const std::vector<FieldElement>& points);

/// Extended subcode, r = k-1, n + 1 = 2k: exists iff t_{n-1} = 0 and every
/// t_n u_i s_{n-2}(a \ {a_i}) is a square; the scaling is pinned to 1/t_n by
/// the extension coordinate.
SelfDualVerdict sub_egrs_k1_selfdual_exists(const std::vector<FieldElement>& points);

/// b_i = a_i - t_1/n. Clears the point sum while keeping all pairwise
/// differences, so the u vector survives the shift unchanged.
std::vector<FieldElement> shift_points(const std::vector<FieldElement>& points);

/// Certificate that no factors can make the r in [2, k-2] subcode self-dual:
/// the Gram conditions force V_{[0,2k]}(a) v2 = 0 (plus an inhomogeneous
/// extension equation in the extended case) and the full column rank of the
/// embedded Vandermonde block admits only v2 = 0.
struct MidrangeCertificate {
    bool impossible = false;   // the rank argument closed the case
    std::size_t rank = 0;      // rank of the moment system
    std::size_t expected = 0;  // n, the full column rank
    bool extended = false;
};

/// Plain variant when |points| = 2k, extended variant when |points| = 2k-1.
MidrangeCertificate midrange_never_selfdual(const std::vector<FieldElement>& points,
                                            std::size_t k, std::size_t r);

enum class CodeShape { grs, sub_grs, sub_egrs };

/// Brute-force oracle: scans factor tuples with v_1 normalized to 1 (the
/// Gram conditions are scale invariant) and returns the first self-dual
/// witness, if any. r is ignored for the plain grs shape. Guarded by
/// (q-1)^(n-1) <= max_work.
std::optional<std::vector<FieldElement>> exhaustive_selfdual_search(
    const std::vector<FieldElement>& points, CodeShape shape, std::size_t k, std::size_t r,
    std::uint64_t max_work = 100000000);

} // namespace grskit
