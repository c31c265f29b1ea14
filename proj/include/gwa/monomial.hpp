#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

namespace gwa {

/// Exponent vector z_1^{e_1}...z_n^{e_n}. Entries may be negative in a
/// Laurent ring; the owning polynomial enforces the ring constraint.
struct Monomial {
    std::vector<std::int64_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<std::int64_t> exps) : e(std::move(exps)) {}

    std::size_t arity() const { return e.size(); }
    bool is_one() const {
        for (auto v : e)
            if (v != 0) return false;
        return true;
    }
    std::int64_t total_degree() const {
        return std::accumulate(e.begin(), e.end(), std::int64_t{0});
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    Monomial inverse() const {
        Monomial r(*this);
        for (auto& v : r.e) v = -v;
        return r;
    }
    bool operator==(const Monomial& o) const = default;
};

/// Canonical term order: graded lexicographic (total degree first, then
/// plain lex on exponents). Used everywhere printing or pivoting needs
/// a deterministic order.
inline std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (auto c = a.e[i] <=> b.e[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_compare(a, b) < 0;
    }
};

} // namespace gwa
