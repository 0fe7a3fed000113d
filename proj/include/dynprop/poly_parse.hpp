#ifndef DYNPROP_POLY_PARSE_HPP
#define DYNPROP_POLY_PARSE_HPP

#include <string>

#include "dynprop/unipoly.hpp"

namespace dynprop {

// Accepts either an ascending coefficient list "[-1, 0, 1]" or expression
// syntax "x^2 - 1" in the single variable x. Whitespace-insensitive;
// rationals written "a/b"; juxtaposition like "2x" or "3(x+1)" multiplies;
// '/' divides by a constant. Malformed input raises ContractError.
UniPoly parse_poly(const std::string& text);

}  // namespace dynprop

#endif
