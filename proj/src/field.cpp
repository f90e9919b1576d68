#include "grskit/field.hpp"

#include <algorithm>
#include <utility>

namespace grskit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ok: return "ok";
        case ErrorCode::non_prime_characteristic: return "non_prime_characteristic";
        case ErrorCode::reducible_modulus: return "reducible_modulus";
        case ErrorCode::division_by_zero: return "division_by_zero";
        case ErrorCode::field_mismatch: return "field_mismatch";
        case ErrorCode::not_a_square: return "not_a_square";
        case ErrorCode::duplicate_points: return "duplicate_points";
        case ErrorCode::shape_mismatch: return "shape_mismatch";
        case ErrorCode::zero_matrix: return "zero_matrix";
        case ErrorCode::too_large: return "too_large";
        case ErrorCode::bad_dimension: return "bad_dimension";
        case ErrorCode::zero_twist: return "zero_twist";
        case ErrorCode::out_of_range: return "out_of_range";
        case ErrorCode::bad_index: return "bad_index";
        case ErrorCode::not_a_divisor: return "not_a_divisor";
        case ErrorCode::odd_length: return "odd_length";
        case ErrorCode::even_length: return "even_length";
        case ErrorCode::even_characteristic: return "even_characteristic";
        case ErrorCode::characteristic_divides_length: return "characteristic_divides_length";
        case ErrorCode::hypothesis_failed: return "hypothesis_failed";
        case ErrorCode::spec_validation: return "spec_validation";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over Z_p, coefficients low to high, used only while
// constructing a field (modulus validation, table building).
using ZpPoly = std::vector<std::uint32_t>;

ZpPoly trim(ZpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ZpPoly poly_mod(ZpPoly a, const ZpPoly& mod, std::uint64_t p) {
    // mod is monic
    a = trim(std::move(a));
    const std::size_t dm = mod.size() - 1;
    while (a.size() > dm) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint64_t t = std::uint64_t(mod[i]) * lead % p;
                a[shift + i] = std::uint32_t((std::uint64_t(a[shift + i]) + p - t) % p);
            }
        }
        a.pop_back();
        a = trim(std::move(a));
    }
    return a;
}

ZpPoly poly_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(a[i]) * b[j]) % p);
        }
    }
    return poly_mod(std::move(prod), mod, p);
}

// Remainder of a by b (b not necessarily monic), for trial division.
ZpPoly poly_rem(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
    a = trim(std::move(a));
    ZpPoly bb = trim(b);
    std::uint64_t lead_inv = 1;
    {
        // Fermat inverse of the leading coefficient
        std::uint64_t base = bb.back(), e = p - 2, r = 1;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        lead_inv = r;
    }
    while (a.size() >= bb.size() && !a.empty()) {
        std::uint64_t factor = std::uint64_t(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - bb.size();
        for (std::size_t i = 0; i < bb.size(); ++i) {
            std::uint64_t t = std::uint64_t(bb[i]) * factor % p;
            a[shift + i] = std::uint32_t((std::uint64_t(a[shift + i]) + p - t) % p);
        }
        a = trim(std::move(a));
    }
    return a;
}

// Trial division by every monic polynomial of degree in [1, deg/2].
bool poly_irreducible(const ZpPoly& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            ZpPoly div(d + 1, 0);
            std::uint64_t t = v;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = std::uint32_t(t % p);
                t /= p;
            }
            div[d] = 1;
            if (poly_rem(f, div, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

FieldPtr Field::make(std::uint64_t p, unsigned m,
                     std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) raise(ErrorCode::non_prime_characteristic, "characteristic must be prime");
    if (m < 1) raise(ErrorCode::bad_dimension, "extension degree must be at least 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order) raise(ErrorCode::too_large, "field order exceeds supported bound 2^20");
    }

    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = q;

    if (modulus) {
        auto mod = *modulus;
        if (mod.size() != m + 1 || mod.back() % p != 1)
            raise(ErrorCode::reducible_modulus, "modulus must be monic of degree m");
        for (auto& c : mod) c = std::uint32_t(c % p);
        if (m >= 2 && !poly_irreducible(mod, p))
            raise(ErrorCode::reducible_modulus, "modulus is reducible");
        f->modulus_ = std::move(mod);
    } else if (m == 1) {
        f->modulus_ = {0, 1}; // x
    } else {
        // Smallest candidate wins, reading the lower coefficients as a
        // base-p integer: x^3+x+1 for GF(8), x^2+1 for GF(9).
        bool found = false;
        for (std::uint64_t v = 0; v < q && !found; ++v) {
            ZpPoly cand(m + 1, 0);
            std::uint64_t t = v;
            for (unsigned i = 0; i < m; ++i) {
                cand[i] = std::uint32_t(t % p);
                t /= p;
            }
            cand[m] = 1;
            if (poly_irreducible(cand, p)) {
                f->modulus_ = std::move(cand);
                found = true;
            }
        }
        if (!found) raise(ErrorCode::internal, "no irreducible modulus found");
    }

    f->build_tables();
    return f;
}

void Field::build_tables() {
    auto pack = [&](const ZpPoly& poly) {
        std::uint64_t idx = 0;
        for (std::size_t i = poly.size(); i-- > 0;) idx = idx * p_ + poly[i];
        return std::uint32_t(idx);
    };
    auto unpack = [&](std::uint32_t idx) {
        ZpPoly c;
        std::uint64_t t = idx;
        while (t) {
            c.push_back(std::uint32_t(t % p_));
            t /= p_;
        }
        return c;
    };

    auto pow_poly = [&](std::uint32_t base, std::uint64_t e) {
        ZpPoly result{1};
        ZpPoly b = unpack(base);
        while (e) {
            if (e & 1) result = poly_mulmod(result, b, modulus_, p_);
            b = poly_mulmod(b, b, modulus_, p_);
            e >>= 1;
        }
        return pack(result);
    };

    const auto factors = prime_factors(q_ - 1);
    generator_ = 1;
    if (q_ > 2) {
        for (std::uint32_t g = 2; g < q_; ++g) {
            bool primitive = true;
            for (auto f : factors) {
                if (pow_poly(g, (q_ - 1) / f) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                generator_ = g;
                break;
            }
        }
    }

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    ZpPoly cur{1};
    ZpPoly g = unpack(generator_);
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        std::uint32_t idx = pack(cur);
        exp_[i] = idx;
        log_[idx] = std::uint32_t(i);
        cur = poly_mulmod(cur, g, modulus_, p_);
    }
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t ca = a % p_, cb = b % p_;
        a = std::uint32_t(a / p_);
        b = std::uint32_t(b / p_);
        std::uint64_t s = ca + cb;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
    }
    return std::uint32_t(out);
}

std::uint32_t Field::neg_slow(std::uint32_t a) const {
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t ca = a % p_;
        a = std::uint32_t(a / p_);
        out += (ca == 0 ? 0 : p_ - ca) * mult;
        mult *= p_;
    }
    return std::uint32_t(out);
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) raise(ErrorCode::division_by_zero, "negative power of zero");
        return 0;
    }
    std::int64_t ord = std::int64_t(q_) - 1;
    std::int64_t r = e % ord;
    if (r < 0) r += ord;
    return exp_[std::uint64_t(log_[a]) * std::uint64_t(r) % std::uint64_t(ord)];
}

bool Field::is_square(std::uint32_t a) const {
    if (a == 0 || p_ == 2) return true;
    return pow(a, std::int64_t((q_ - 1) / 2)) == 1;
}

std::uint32_t Field::sqrt(std::uint32_t a) const {
    if (a == 0) return 0;
    if (p_ == 2) return pow(a, std::int64_t(q_ / 2));
    if (log_[a] % 2 != 0) raise(ErrorCode::not_a_square, "element is not a square");
    std::uint32_t r = exp_[log_[a] / 2];
    return std::min(r, neg(r));
}

FieldElement Field::element(std::uint32_t idx) const {
    if (idx >= q_) raise(ErrorCode::out_of_range, "element index out of range");
    return {this, idx};
}

FieldElement Field::element_from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > m_) raise(ErrorCode::out_of_range, "too many coefficients");
    std::uint64_t idx = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * p_ + coeffs[i] % p_;
    return {this, std::uint32_t(idx)};
}

FieldElement Field::zero() const { return {this, 0}; }
FieldElement Field::one() const { return {this, 1}; }

std::vector<FieldElement> Field::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(this, i);
    return out;
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t idx) const {
    std::vector<std::uint32_t> c(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = std::uint32_t(idx % p_);
        idx = std::uint32_t(idx / p_);
    }
    return c;
}

} // namespace grskit
