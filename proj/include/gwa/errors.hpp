#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwa {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax error while reading an expression; `pos` is a 0-based byte offset.
struct parse_error : error {
    std::size_t pos;
    parse_error(const std::string& msg, std::size_t position)
        : error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

/// Arity or ring-kind mismatch between operands.
struct ring_error : error {
    explicit ring_error(const std::string& msg) : error(msg) {}
};

/// A plane endomorphism failed the automorphism checks; carries the obstruction.
struct not_an_automorphism : error {
    std::string obstruction;
    explicit not_an_automorphism(const std::string& what_failed)
        : error("not an automorphism: " + what_failed), obstruction(what_failed) {}
};

/// Bad input payload (CLI/JSON schema violations, precondition failures).
struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

} // namespace gwa
