#pragma once

#include <string>

#include "gwa/multipoly.hpp"

namespace gwa {

/// Parses the ASCII expression grammar
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' int)?
///   coeff  := int ('/' posint)?
///   var    := 'z' posint
/// Whitespace is insignificant; exponents may be negative in Laurent rings.
MultiPoly parse_poly(const std::string& text, const RingDesc& ring);

/// Canonical rendering (descending graded-lex term order); round-trips
/// through parse_poly.
std::string format_poly(const MultiPoly& p);

} // namespace gwa
