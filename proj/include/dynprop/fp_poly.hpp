#ifndef DYNPROP_FP_POLY_HPP
#define DYNPROP_FP_POLY_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "dynprop/unipoly.hpp"

namespace dynprop {

// Dense polynomial over F_p for a word-sized prime p (p < 2^31). Coefficients
// ascending, reduced to [0, p); zero polynomial is the empty list.
struct FpPoly {
    uint64_t p = 0;
    std::vector<uint64_t> c;

    static FpPoly make(uint64_t p, std::vector<uint64_t> coeffs);
    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    uint64_t evaluate(uint64_t x) const;
    FpPoly derivative() const;
    FpPoly monic() const;  // scale by inverse of leading coefficient
};

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_rem(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);  // monic gcd

// Reduce a rational polynomial mod p. Rejects coefficients whose denominator
// vanishes mod p (no p-integral model).
FpPoly reduce_mod_p(const UniPoly& f, const Integer& p);
FpPoly reduce_mod_p(const std::vector<Integer>& coeffs, uint64_t p);

// Distinct-degree factorization degrees, the inertia-degree workhorse.
struct FpFactorDegrees {
    bool squarefree = false;                  // false means "not squarefree" signal
    std::multiset<long> degrees;              // degrees of monic irreducible factors
};
FpFactorDegrees fp_factor_degrees(const FpPoly& f);

// Roots in F_p by direct evaluation (p scans are cheap at word size).
std::vector<uint64_t> fp_roots(const FpPoly& f);

bool fp_is_irreducible(const FpPoly& f);

}  // namespace dynprop

#endif
