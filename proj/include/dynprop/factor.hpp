#ifndef DYNPROP_FACTOR_HPP
#define DYNPROP_FACTOR_HPP

#include <map>
#include <vector>

#include "dynprop/config.hpp"
#include "dynprop/rational.hpp"

namespace dynprop {

// Signed prime-power decomposition. Keys are distinct primes, exponents are
// nonzero (negative entries appear when factoring a rational). Reconstructing
// the product always recovers the original value exactly.
struct PrimeFactorization {
    int sign = 1;  // +1 or -1
    std::map<Integer, Integer> factors;

    // Expands the product. Only safe for small exponents; callers holding
    // towers keep values factored instead (see Config::display_digit_cap).
    Integer value() const;
    Rational rational_value() const;

    // Exponent of p (0 when absent).
    Integer exponent_of(const Integer& p) const;

    // Decimal-digit estimate of |value| (upper bound), without expanding.
    double digits_estimate() const;
};

// Trial division to 10^6, then Pollard-Brent rho; every reported factor
// passes a Miller-Rabin-style primality certificate. Inputs at or above
// cfg.factor_cap are rejected; if rho fails to split within its budget the
// failure is surfaced as an explicit incomplete-factorization ResourceError,
// never guessed.
PrimeFactorization factor_integer(const Integer& n, const Config& cfg = {});

// Factorization of a nonzero rational: factor(num) minus factor(den).
PrimeFactorization factor_rational(const Rational& r, const Config& cfg = {});

// Moebius function, n >= 1.
int moebius(const Integer& n, const Config& cfg = {});

// All positive divisors, ascending. Guarded by `max_count`.
std::vector<Integer> divisors(const PrimeFactorization& f, long max_count = 1000000);

std::vector<long> divisors_of_long(long n);

}  // namespace dynprop

#endif
