#ifndef DYNPROP_RATIONAL_ROOTS_HPP
#define DYNPROP_RATIONAL_ROOTS_HPP

#include <vector>

#include "dynprop/config.hpp"
#include "dynprop/unipoly.hpp"

namespace dynprop {

// All rational roots of f, multiplicity discarded, sorted ascending; every
// returned value is re-verified by exact evaluation. Works at dynatomic
// scale: roots are recovered from a squarefree-certified modular image by
// Hensel lifting and rational reconstruction, never by factoring the huge
// constant term.
std::vector<Rational> rational_roots(const UniPoly& f, const Config& cfg = {});

}  // namespace dynprop

#endif
