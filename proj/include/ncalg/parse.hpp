#pragma once

#include <string_view>

#include "ncalg/alphabet.hpp"
#include "ncalg/polynomial.hpp"

namespace ncalg {

/// Reads a noncommutative polynomial.
///
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [coeff '*'] factor ('*' factor)* | coeff
///   coeff  := int | int '/' int
///   factor := var ['^' nat]
///
/// Whitespace is ignored; products are read left to right. Like terms are
/// collected and zero terms dropped. Throws ParseError on malformed text,
/// unknown variables and zero denominators.
Polynomial parse_polynomial(std::string_view text, const Alphabet& alphabet);

}  // namespace ncalg
