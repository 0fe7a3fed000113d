#ifndef DYNPROP_RATIONAL_HPP
#define DYNPROP_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace dynprop {

// The ambient exact scalars. mpq_class keeps values canonical (lowest terms,
// positive denominator, 0 stored as 0/1), which is exactly the invariant the
// rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(const Integer& n);
Integer next_prime_after(const Integer& n);

// Exponent of p in r, additively normalized (v(p) = 1, v(u) = 0 for units).
// Returns std::nullopt for r = 0, the +infinity convention.
// Rejects non-prime p.
std::optional<long> padic_valuation(const Rational& r, const Integer& p);
std::optional<long> padic_valuation(const Integer& n, const Integer& p);

// Rationals serialize as "a/b" (or "a" when b = 1), never as floats.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);
Rational parse_rational(const std::string& text);

}  // namespace dynprop

#endif
