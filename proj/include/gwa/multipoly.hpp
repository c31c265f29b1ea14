#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gwa/monomial.hpp"
#include "gwa/scalar.hpp"

namespace gwa {

enum class RingKind { polynomial, laurent };

struct RingDesc {
    RingKind kind = RingKind::polynomial;
    int n = 1;
    bool operator==(const RingDesc&) const = default;
};

/// Element of P_n = k[z_1..z_n] or L_n = k[z_1^{±1}..z_n^{±1}] with exact
/// rational coefficients. Zero coefficients are never stored. Values are
/// immutable once built except through the arithmetic below.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Scalar, GrlexLess>;

    MultiPoly() = default;
    MultiPoly(RingKind kind, int n) : kind_(kind), n_(n) {}

    static MultiPoly zero(RingKind kind, int n) { return MultiPoly(kind, n); }
    static MultiPoly constant(RingKind kind, int n, const Scalar& c) {
        MultiPoly p(kind, n);
        p.add_term(Monomial(static_cast<std::size_t>(n)), c);
        return p;
    }
    static MultiPoly one(RingKind kind, int n) { return constant(kind, n, Scalar(1)); }
    /// z_i (1-based index).
    static MultiPoly variable(RingKind kind, int n, int i, std::int64_t exp = 1) {
        if (i < 1 || i > n) throw ring_error("variable index out of range");
        Monomial m(static_cast<std::size_t>(n));
        m.e[static_cast<std::size_t>(i - 1)] = exp;
        MultiPoly p(kind, n);
        p.add_term(m, Scalar(1));
        return p;
    }
    static MultiPoly monomial(RingKind kind, int n, Monomial m, Scalar c) {
        MultiPoly p(kind, n);
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    RingKind kind() const { return kind_; }
    int arity() const { return n_; }
    RingDesc ring() const { return {kind_, n_}; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    std::size_t term_count() const { return terms_.size(); }

    /// Accumulate c·m, dropping the term if the sum cancels. The ring
    /// constraint (no negative exponents in P_n) is enforced here.
    void add_term(Monomial m, Scalar c) {
        if (c == 0) return;
        check_monomial(m);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Total degree; empty for the zero polynomial (the distinguished
    /// "negative infinity" value). Only meaningful for polynomial rings.
    std::optional<std::int64_t> total_degree() const {
        if (kind_ == RingKind::laurent)
            throw ring_error("total degree is defined for polynomial-ring elements");
        if (terms_.empty()) return std::nullopt;
        std::int64_t d = terms_.begin()->first.total_degree();
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    /// The homogeneous component of top total degree (zero poly -> zero).
    MultiPoly leading_form() const {
        MultiPoly r(kind_, n_);
        auto d = total_degree();
        if (!d) return r;
        for (const auto& [m, c] : terms_)
            if (m.total_degree() == *d) r.add_term(m, c);
        return r;
    }

    /// Degree in a single variable (0-based index); empty for zero poly.
    std::optional<std::int64_t> degree_in(std::size_t var) const {
        if (terms_.empty()) return std::nullopt;
        std::int64_t d = terms_.begin()->first.e[var];
        for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
        return d;
    }

    bool depends_on(std::size_t var) const {
        for (const auto& [m, c] : terms_)
            if (m.e[var] != 0) return true;
        return false;
    }

    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    Scalar constant_term() const { return coeff(Monomial(static_cast<std::size_t>(n_))); }

    MultiPoly operator-() const {
        MultiPoly r(kind_, n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    MultiPoly operator+(const MultiPoly& o) const {
        check_ring(o);
        MultiPoly r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        check_ring(o);
        MultiPoly r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        check_ring(o);
        MultiPoly r(kind_, n_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MultiPoly operator*(const Scalar& c) const {
        MultiPoly r(kind_, n_);
        if (c == 0) return r;
        for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const {
        return kind_ == o.kind_ && n_ == o.n_ && terms_ == o.terms_;
    }

    MultiPoly pow(std::uint64_t k) const {
        MultiPoly acc = one(kind_, n_);
        MultiPoly base(*this);
        while (k > 0) {
            if (k & 1) acc *= base;
            if (k >>= 1) base *= base;
        }
        return acc;
    }

    /// If this is a unit (Laurent: c·monomial, polynomial: nonzero constant),
    /// return its inverse.
    std::optional<MultiPoly> unit_inverse() const {
        if (terms_.size() != 1) return std::nullopt;
        const auto& [m, c] = *terms_.begin();
        if (kind_ == RingKind::polynomial && !m.is_one()) return std::nullopt;
        return monomial(kind_, n_, m.inverse(), Scalar(1) / c);
    }

private:
    void check_ring(const MultiPoly& o) const {
        if (kind_ != o.kind_ || n_ != o.n_)
            throw ring_error("ring kind or arity mismatch");
    }
    void check_monomial(const Monomial& m) const {
        if (static_cast<int>(m.arity()) != n_) throw ring_error("monomial arity mismatch");
        if (kind_ == RingKind::polynomial)
            for (auto v : m.e)
                if (v < 0) throw ring_error("negative exponent in polynomial ring");
    }

    RingKind kind_ = RingKind::polynomial;
    int n_ = 0;
    TermMap terms_;
};

/// Image of p under z_i -> images[i], computed exactly. For negative
/// exponents the image must be invertible in the ring.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images);

} // namespace gwa
