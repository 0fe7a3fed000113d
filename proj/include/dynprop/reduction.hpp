#ifndef DYNPROP_REDUCTION_HPP
#define DYNPROP_REDUCTION_HPP

#include <set>
#include <vector>

#include "dynprop/config.hpp"
#include "dynprop/dynamics.hpp"
#include "dynprop/unipoly.hpp"

namespace dynprop {

// Per-prime record that every coefficient passed the valuation test:
// v_p(a_i) >= 0 for all i and v_p(a_d) = 0, in additive normalization.
struct GoodReductionWitness {
    Integer prime;
    std::vector<long> coeff_valuations;  // ascending, one per coefficient
    bool leading_is_unit = false;
    bool good = false;
};

// The two-prime period bound: any rational point of exact period n for a
// polynomial with good reduction at p and q satisfies
// n <= (p^(2 f_p) - 1) (q^(2 f_q) - 1).
struct PeriodBoundCertificate {
    Integer p, q;
    long inertia_p = 1, inertia_q = 1;
    Integer bound;
    GoodReductionWitness witness_p, witness_q;

    Integer recompute_bound() const;  // closed form from (p, q, f_p, f_q)
};

// Complete enumeration below the certified bound. `complete` is an honest
// flag: periods whose dynatomic degree exceeds the cap are skipped and
// recorded in `omitted_periods`, never silently assumed empty.
struct CertifiedOrbits {
    std::vector<PeriodicOrbit> orbits;
    PeriodBoundCertificate certificate;
    bool complete = true;
    std::vector<long> omitted_periods;
};

// True iff all coefficients are p-integral and the leading one is a p-unit.
bool has_good_reduction(const UniPoly& f, const Integer& p);

GoodReductionWitness good_reduction_witness(const UniPoly& f, const Integer& p);

// The smallest `count` primes of good reduction, scanning primes in order.
// Terminates because only primes dividing a denominator or the leading
// numerator can fail.
std::vector<Integer> good_reduction_primes(const UniPoly& f, long count);

// Certificate from the two smallest good-reduction primes; over Q both
// inertia degrees are 1.
PeriodBoundCertificate period_bound(const UniPoly& f);

CertifiedOrbits certified_rational_periodic_points(const UniPoly& f, const Config& cfg = {});

// Degrees of the irreducible factors of minpoly mod p, interpreted as
// inertia degrees of the primes above p when p is unramified in the field
// cut out by minpoly. The caller certifies irreducibility separately (the
// tower does so via Eisenstein).
struct InertiaProfile {
    bool ramified_or_indistinct = false;
    std::multiset<long> degrees;
};
InertiaProfile inertia_profile(const UniPoly& minpoly, const Integer& p);

}  // namespace dynprop

#endif
