#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gwa/errors.hpp"

namespace gwa {

/// Exact rational scalar. Always kept canonical (lowest terms, positive
/// denominator); gmp guarantees this for arithmetic results, and the helpers
/// below canonicalize anything built from raw parts.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar make_scalar(long num, long den = 1) {
    if (den == 0) throw validation_error("scalar with zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

inline Scalar make_scalar(const Integer& num, const Integer& den) {
    if (den == 0) throw validation_error("scalar with zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

/// s^e for any integer e; e < 0 inverts (s must be nonzero).
inline Scalar scalar_pow(const Scalar& s, std::int64_t e) {
    if (e == 0) return Scalar(1);
    if (s == 0) {
        if (e < 0) throw validation_error("cannot invert zero scalar");
        return Scalar(0);
    }
    Scalar base = e > 0 ? s : Scalar(1) / s;
    std::uint64_t k = e > 0 ? static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(-e);
    Scalar acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

/// Reads "p" or "p/q" with optional sign; rejects anything else.
inline Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw parse_error("empty scalar", 0);
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) throw parse_error("expected integer in scalar '" + text + "'", i);
    std::size_t slash = i;
    if (i < text.size()) {
        if (text[i] != '/') throw parse_error("unexpected character in scalar '" + text + "'", i);
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++den_digits;
        if (den_digits == 0 || i != text.size())
            throw parse_error("expected positive integer denominator in '" + text + "'", i);
    }
    if (slash == text.size()) return Scalar(Integer(text));
    // den = 0 must be caught before gmp canonicalizes
    return make_scalar(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

inline std::string format_scalar(const Scalar& s) { return s.get_str(); }

} // namespace gwa
