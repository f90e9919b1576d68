#include "grskit/code.hpp"

#include <algorithm>

namespace grskit {

const char* category_name(Category c) {
    switch (c) {
        case Category::MDS: return "MDS";
        case Category::AMDS: return "AMDS";
        case Category::NMDS: return "NMDS";
        case Category::OTHER: return "OTHER";
    }
    return "OTHER";
}

LinearCode LinearCode::from_generator(const Matrix& G) {
    if (G.is_zero()) raise(ErrorCode::zero_matrix, "generator matrix is zero");
    Matrix basis = row_basis(G);
    return LinearCode(G.field_ptr(), G.cols(), basis.rows(), std::move(basis));
}

LinearCode LinearCode::zero_code(FieldPtr f, std::size_t n) {
    Matrix empty(f, 0, n);
    return LinearCode(std::move(f), n, 0, std::move(empty));
}

LinearCode LinearCode::dual() const {
    Matrix kernel = gen_.right_kernel();
    if (kernel.rows() == 0) return zero_code(f_, n_);
    Matrix basis = row_basis(kernel);
    return LinearCode(f_, n_, basis.rows(), std::move(basis));
}

std::uint32_t LinearCode::min_distance(std::uint64_t max_work) const {
    if (k_ == 0) raise(ErrorCode::out_of_range, "zero-dimensional code has no minimum distance");
    const std::uint64_t q = f_->order();
    std::uint64_t messages = 1;
    for (std::size_t i = 0; i < k_; ++i) {
        messages *= q;
        if (messages > max_work)
            raise(ErrorCode::too_large, "message space exceeds the enumeration guard");
    }

    const std::size_t n = n_;
    const std::size_t k = k_;
    const Field& f = *f_;

    // delta[i][t] = (e_{t+1 mod q} - e_t) * row_i, so stepping the digit at
    // position i through the element order costs one row addition. Only
    // suffix positions ever step, so k = 1 needs no tables at all.
    std::vector<std::vector<std::uint32_t>> delta(k == 1 ? 0 : k,
                                                  std::vector<std::uint32_t>(q * n));
    std::vector<std::uint32_t> scaled_prev(n), scaled_cur(n);
    for (std::size_t i = 0; i < delta.size(); ++i) {
        for (std::size_t c = 0; c < n; ++c) scaled_prev[c] = 0; // element index 0
        for (std::uint64_t t = 0; t < q; ++t) {
            std::uint32_t next_elt = std::uint32_t((t + 1) % q);
            for (std::size_t c = 0; c < n; ++c)
                scaled_cur[c] = f.mul(next_elt, gen_.idx_at(i, c));
            for (std::size_t c = 0; c < n; ++c)
                delta[i][t * n + c] = f.sub(scaled_cur[c], scaled_prev[c]);
            std::swap(scaled_prev, scaled_cur);
        }
    }

    std::uint32_t best = std::uint32_t(n) + 1;
    std::vector<std::uint32_t> cw(n);
    std::vector<std::uint32_t> digit(k);

    for (std::size_t lead = 0; lead < k && best > 1; ++lead) {
        // messages with first nonzero coordinate at `lead`, normalized to 1
        for (std::size_t c = 0; c < n; ++c) cw[c] = gen_.idx_at(lead, c);
        std::fill(digit.begin() + std::ptrdiff_t(lead) + 1, digit.end(), 0);
        while (true) {
            std::uint32_t w = 0;
            for (std::size_t c = 0; c < n; ++c) w += (cw[c] != 0);
            if (w < best) {
                best = w;
                if (best <= 1) break;
            }
            if (lead + 1 >= k) break; // no suffix digits for this block
            std::size_t pos = k - 1;
            bool exhausted = false;
            while (true) {
                std::uint32_t t = digit[pos];
                const std::uint32_t* d = &delta[pos][std::size_t(t) * n];
                for (std::size_t c = 0; c < n; ++c) cw[c] = f.add(cw[c], d[c]);
                if (t + 1 < q) {
                    digit[pos] = std::uint32_t(t + 1);
                    break;
                }
                digit[pos] = 0;
                if (pos == lead + 1) { exhausted = true; break; }
                --pos;
            }
            if (exhausted) break;
        }
    }
    return best;
}

DistanceProfile LinearCode::classify(std::uint64_t max_work) const {
    if (k_ == 0) raise(ErrorCode::out_of_range, "cannot classify a zero-dimensional code");
    DistanceProfile out;
    out.d = min_distance(max_work);
    LinearCode d = dual();
    // The dual of the full space is zero-dimensional; report the vacuous
    // maximum k+1 so the Singleton-style bound still reads correctly.
    out.d_dual = d.dimension() == 0 ? std::uint32_t(k_) + 1 : d.min_distance(max_work);
    const std::uint32_t singleton = std::uint32_t(n_ - k_) + 1;
    if (out.d == singleton)
        out.category = Category::MDS;
    else if (out.d + 1 == singleton && out.d_dual == k_)
        out.category = Category::NMDS;
    else if (out.d + 1 == singleton)
        out.category = Category::AMDS;
    else
        out.category = Category::OTHER;
    return out;
}

bool LinearCode::is_self_dual() const {
    if (n_ != 2 * k_) return false;
    return gram_vanishes(gen_);
}

bool gram_vanishes(const Matrix& G) {
    const Field& f = G.field();
    for (std::size_t i = 0; i < G.rows(); ++i) {
        for (std::size_t j = i; j < G.rows(); ++j) {
            std::uint32_t acc = 0;
            for (std::size_t c = 0; c < G.cols(); ++c)
                acc = f.add(acc, f.mul(G.idx_at(i, c), G.idx_at(j, c)));
            if (acc != 0) return false;
        }
    }
    return true;
}

} // namespace grskit
