#pragma once

#include <string>
#include <vector>

#include "grskit/field.hpp"

namespace grskit {

/// Outcome of a symmetric-function MDS test. When the code is not MDS the
/// witness names the vanishing subset (indices into the point list) and the
/// kind records which condition it violates.
struct MdsResult {
    bool mds = true;
    std::vector<std::size_t> witness_subset;
    std::string witness_kind;
};

/// The subcode of the [n, k+1] code is MDS exactly when s_{k,r} is nonzero
/// on every k-subset of the points.
MdsResult sub_grs_is_mds(const std::vector<FieldElement>& points, std::size_t k, std::size_t r);

/// The extended subcode is MDS unless some (k-1)-subset kills s_{r-1} or
/// some k-subset kills s_r; it is AMDS otherwise, never worse.
MdsResult sub_egrs_is_mds(const std::vector<FieldElement>& points, std::size_t k, std::size_t r);

/// The plus-twist code is MDS iff no k-subset of the points sums to -1/eta.
MdsResult plus_tgrs_is_mds(const std::vector<FieldElement>& points, std::size_t k,
                           const FieldElement& eta);

/// Dual-distance certificate: dual_distance_ge_k = true means every tested
/// subset avoided the double vanishing, which pins the dual distance at >= k
/// and the code at NMDS-or-MDS. A false certificate carries the violating
/// subset and the pair of symmetric values that vanished.
struct NmdsCertificate {
    bool dual_distance_ge_k = true;
    std::vector<std::size_t> violating_subset;
    std::string subset_kind;
};

/// For r in [2, k-1]: d(dual) >= k iff no (k-1)-subset A has
/// s_{k-1,r-1}(A) = s_{k-1,r}(A) = 0.
NmdsCertificate sub_grs_dual_dist_ge_k(const std::vector<FieldElement>& points,
                                       std::size_t k, std::size_t r);

/// Extended variant. r = 2 needs only the (k-1)-subset condition with
/// (s_{k-1,1}, s_{k-1,2}); r >= 3 additionally requires every (k-2)-subset
/// to avoid vanishing (s_{k-2,r-2}, s_{k-2,r-1}) simultaneously.
NmdsCertificate sub_egrs_dual_dist_ge_k(const std::vector<FieldElement>& points,
                                        std::size_t k, std::size_t r);

} // namespace grskit
