#include "grskit/criteria.hpp"

#include "grskit/combin.hpp"
#include "grskit/symmetric.hpp"

namespace grskit {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

void check_subcode_params(std::size_t n, std::size_t k, std::size_t r) {
    if (k < 2 || k + 1 > n || r < 1 || r > k - 1)
        raise(ErrorCode::out_of_range, "need 1 <= r <= k-1 and 2 <= k <= n-1");
}

std::vector<FieldElement> pick(const std::vector<FieldElement>& points,
                               const std::vector<std::size_t>& idx) {
    std::vector<FieldElement> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(points[i]);
    return out;
}

// Scans size-subsets of the points for one with s_first = 0 (and, when
// second_too, also s_{first+1} = 0). Fills witness on a hit.
bool find_vanishing(const std::vector<FieldElement>& points, std::size_t size,
                    std::size_t first, bool second_too, std::vector<std::size_t>& witness) {
    bool found = false;
    for_each_combination(points.size(), size, [&](const std::vector<std::size_t>& idx) {
        if (found) return;
        auto sub = pick(points, idx);
        if (!elem_sym(sub, first).is_zero()) return;
        if (second_too && !elem_sym(sub, first + 1).is_zero()) return;
        witness = idx;
        found = true;
    });
    return found;
}

} // namespace

MdsResult sub_grs_is_mds(const std::vector<FieldElement>& points, std::size_t k, std::size_t r) {
    check_subcode_params(points.size(), k, r);
    MdsResult out;
    std::vector<std::size_t> w;
    if (find_vanishing(points, k, r, false, w)) {
        out.mds = false;
        out.witness_subset = std::move(w);
        out.witness_kind = "s_r vanishes on a k-subset";
    }
    return out;
}

MdsResult sub_egrs_is_mds(const std::vector<FieldElement>& points, std::size_t k, std::size_t r) {
    check_subcode_params(points.size(), k, r);
    MdsResult out;
    std::vector<std::size_t> w;
    // r = 1 makes s_{r-1} = s_0 = 1, which never vanishes
    if (r >= 2 && find_vanishing(points, k - 1, r - 1, false, w)) {
        out.mds = false;
        out.witness_subset = std::move(w);
        out.witness_kind = "s_{r-1} vanishes on a (k-1)-subset";
        return out;
    }
    if (find_vanishing(points, k, r, false, w)) {
        out.mds = false;
        out.witness_subset = std::move(w);
        out.witness_kind = "s_r vanishes on a k-subset";
    }
    return out;
}

MdsResult plus_tgrs_is_mds(const std::vector<FieldElement>& points, std::size_t k,
                           const FieldElement& eta) {
    if (eta.is_zero()) raise(ErrorCode::zero_twist, "plus-twist parameter must be nonzero");
    if (k < 1 || k + 1 > points.size())
        raise(ErrorCode::out_of_range, "need 1 <= k <= n-1");
    const FieldElement target = -eta.inv();
    MdsResult out;
    for_each_combination(points.size(), k, [&](const std::vector<std::size_t>& idx) {
        if (!out.mds) return;
        FieldElement sum = points[0].field_ptr()->zero();
        for (auto i : idx) sum = sum + points[i];
        if (sum == target) {
            out.mds = false;
            out.witness_subset = idx;
            out.witness_kind = "k-subset sums to -1/eta";
        }
    });
    return out;
}

NmdsCertificate sub_grs_dual_dist_ge_k(const std::vector<FieldElement>& points,
                                       std::size_t k, std::size_t r) {
    check_subcode_params(points.size(), k, r);
    if (r < 2) raise(ErrorCode::out_of_range, "dual-distance criterion needs r >= 2");
    NmdsCertificate out;
    std::vector<std::size_t> w;
    if (find_vanishing(points, k - 1, r - 1, true, w)) {
        out.dual_distance_ge_k = false;
        out.violating_subset = std::move(w);
        out.subset_kind = "(k-1)-subset";
    }
    return out;
}

NmdsCertificate sub_egrs_dual_dist_ge_k(const std::vector<FieldElement>& points,
                                        std::size_t k, std::size_t r) {
    check_subcode_params(points.size(), k, r);
    if (r < 2) raise(ErrorCode::out_of_range, "dual-distance criterion needs r >= 2");
    NmdsCertificate out;
    std::vector<std::size_t> w;
    if (find_vanishing(points, k - 1, r - 1, true, w)) {
        out.dual_distance_ge_k = false;
        out.violating_subset = std::move(w);
        out.subset_kind = "(k-1)-subset";
        return out;
    }
    if (r >= 3 && find_vanishing(points, k - 2, r - 2, true, w)) {
        out.dual_distance_ge_k = false;
        out.violating_subset = std::move(w);
        out.subset_kind = "(k-2)-subset";
    }
    return out;
}

} // namespace grskit
