#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace grskit {

/// Lexicographic k-subsets of {0, ..., n-1}. `next` advances in place and
/// returns false once the sequence is exhausted.
class Combinations {
public:
    Combinations(std::size_t n, std::size_t k) : n_(n), k_(k) {}

    bool first(std::vector<std::size_t>& idx) const {
        if (k_ > n_) return false;
        idx.resize(k_);
        for (std::size_t i = 0; i < k_; ++i) idx[i] = i;
        return true;
    }

    bool next(std::vector<std::size_t>& idx) const {
        if (k_ == 0) return false;
        std::size_t i = k_;
        while (i-- > 0) {
            if (idx[i] + (k_ - i) < n_) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k_; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    }

private:
    std::size_t n_, k_;
};

template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    Combinations c(n, k);
    std::vector<std::size_t> idx;
    if (!c.first(idx)) return;
    do {
        fn(const_cast<const std::vector<std::size_t>&>(idx));
    } while (c.next(idx));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace grskit
