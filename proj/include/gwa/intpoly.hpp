#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwa/scalar.hpp"

namespace gwa {

/// Univariate polynomial over Z, coefficients stored low to high with no
/// trailing zeros. Only what the finite-order machinery needs.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Integer v) { return IntPoly(std::vector<Integer>{std::move(v)}); }
    /// x^d with coefficient 1.
    static IntPoly power(std::size_t d) {
        std::vector<Integer> v(d + 1, Integer(0));
        v[d] = 1;
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// degree of the zero polynomial is reported as -1 here
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }

    bool operator==(const IntPoly& o) const = default;

    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return IntPoly(std::move(r));
    }
    IntPoly operator-(const IntPoly& o) const {
        std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return IntPoly(std::move(r));
    }

    /// Exact division by a monic divisor; empty when the remainder is nonzero.
    std::optional<IntPoly> divide_exact(const IntPoly& divisor) const {
        if (divisor.is_zero() || divisor.leading() != 1)
            throw validation_error("divide_exact requires a monic divisor");
        if (is_zero()) return IntPoly{};
        if (degree() < divisor.degree()) return std::nullopt;
        std::vector<Integer> rem = c_;
        std::vector<Integer> quo(static_cast<std::size_t>(degree() - divisor.degree()) + 1,
                                 Integer(0));
        for (std::int64_t d = degree(); d >= divisor.degree();) {
            Integer lead = rem[static_cast<std::size_t>(d)];
            if (lead != 0) {
                std::size_t shift = static_cast<std::size_t>(d - divisor.degree());
                quo[shift] = lead;
                for (std::size_t i = 0; i < divisor.c_.size(); ++i)
                    rem[shift + i] -= lead * divisor.c_[i];
            }
            --d;
        }
        for (const auto& v : rem)
            if (v != 0) return std::nullopt;
        return IntPoly(std::move(quo));
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

std::uint64_t euler_phi(std::uint64_t d);

/// The d-th cyclotomic polynomial, computed by exact division of x^d - 1 by
/// the lower cyclotomics.
IntPoly cyclotomic(std::uint64_t d);

/// All indices d with phi(d) <= n, ascending. These are the only cyclotomic
/// polynomials that can divide a degree-n characteristic polynomial.
std::vector<std::uint64_t> cyclotomic_indices_up_to_degree(std::uint64_t n);

} // namespace gwa
