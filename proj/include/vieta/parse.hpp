#pragma once

#include <cstddef>
#include <string_view>

#include "vieta/laurent.hpp"

namespace vieta {

// poly   := term (('+' | '-') term)*      (a leading sign is allowed)
// term   := [coeff] ['*'] factor ('*'? factor)*  |  coeff
// factor := 't' index ['^' signed-integer]
// coeff  := integer ['/' positive-integer]
// Whitespace is ignored and U+2212 is read as '-'. Variables are t1..tn.
// Throws ParseError with the byte offset of the problem.
LaurentPolynomial parse_laurent(std::string_view text, std::size_t n);

} // namespace vieta
