#ifndef DYNPROP_TOWER_HPP
#define DYNPROP_TOWER_HPP

#include <optional>
#include <vector>

#include "dynprop/config.hpp"
#include "dynprop/factor.hpp"
#include "dynprop/height.hpp"
#include "dynprop/reduction.hpp"
#include "dynprop/unipoly.hpp"

namespace dynprop {

// A positive real of the form prod p_i^(e_i) with rational exponents. The
// common-denominator power of the element is an honest integer, recoverable
// as a PrimeFactorization without ever expanding it.
struct RadicalElement {
    std::map<Integer, Rational> exponents;  // prime -> nonzero rational

    Integer common_denominator() const;  // least D with D*e integral for all e
    PrimeFactorization power(const Integer& k) const;  // element^k, k multiple of D
    HeightValue height() const;  // sum of max(e, 0) log p
    std::string to_string() const;
};

// One step of the proof bookkeeping: the exponent of the unique prime above
// `prime` in the radicand ideal, the ramification index feeding it, and the
// divisibility chain that lets the new prime stay coprime to the exponent.
struct RamificationEntry {
    Integer prime;                // p_i
    Integer ramification_index;   // e of the prime above p_i at the base of the step
    Integer radicand_exponent;    // exponent of that prime in (p_n * alpha_(n-1)) O
    Integer divisor_bound;        // p_1 ... p_(n-1); the exponent divides it
    bool exponent_integral = false;
    bool divides_bound = false;
    bool new_prime_coprime = false;  // p_n does not divide the bound
    bool ok = false;
};

struct RamificationCertificate {
    long level = 0;                  // certifies the step K_(level-1) -> K_level
    Integer new_prime;               // p_level
    bool base_case_eisenstein = false;  // level 1: Eisenstein at p_1
    std::vector<RamificationEntry> entries;
    bool valid = false;
};

struct TowerLevel {
    long index = 0;  // n, starting at 1
    Integer prime;   // p_n
    RadicalElement alpha;
    Integer degree;  // p_1 ... p_n
    PrimeFactorization minpoly_constant;  // M_n, minimal polynomial x^degree - M_n
    std::optional<Integer> minpoly_constant_expanded;  // only below the digit cap
    Integer eisenstein_prime;  // p_1
    RamificationCertificate ramification;
    HeightValue height;
};

// The radical tower alpha_n = (p_n * alpha_(n-1))^(1/p_n) over Q. Every level
// is built with its power identity checked symbolically and its ramification
// step certified.
class Tower {
public:
    static Tower build(const std::vector<Integer>& primes, long depth, const Config& cfg = {});

    const std::vector<Integer>& primes() const { return primes_; }
    const std::vector<TowerLevel>& levels() const { return levels_; }
    const TowerLevel& level(long n) const;  // 1-based
    long depth() const { return static_cast<long>(levels_.size()); }
    const Config& config() const { return cfg_; }

private:
    Tower() = default;
    std::vector<Integer> primes_;
    std::vector<TowerLevel> levels_;
    Config cfg_;
};

// v_(p1)(M_n) = 1, hence x^(p1...pn) - M_n is Eisenstein at p_1, hence
// irreducible with [K_n : Q] = p_1...p_n. For small degrees the polynomial
// is also constructed and run through the generic Eisenstein check.
bool eisenstein_certificate(const Tower& tower, long level);

// Re-derives the step certificate for K_(level-1) -> K_level from the raw
// exponent vectors (also stored on the level at build time).
RamificationCertificate verify_total_ramification(const Tower& tower, long level);

// Heights of alpha_1..alpha_depth. Verifies the recurrence
// p_(n+1) h(alpha_(n+1)) - h(alpha_n) = log p_(n+1) as an exact coefficient
// identity and h(alpha_n) < 1 at every level before returning.
std::vector<HeightValue> tower_heights(const Tower& tower);

// Smallest level of the consecutive-prime tower (2, 3, 5, ...) whose height
// drops below eps, together with that height.
std::pair<long, HeightValue> first_height_level_below(const Rational& eps, long max_level,
                                                      const Config& cfg = {});

// Frozen inertia data of a tower prime, computed at the level where freezing
// starts (level = index of the prime - 1) and constant up the tower by the
// total-ramification certificates.
struct InertiaRecord {
    Integer prime;
    long prime_index = 0;     // i with p_i = prime (1-based)
    long computed_at_level = 0;  // i - 1
    std::multiset<long> degrees;
    long frozen_through_level = 0;  // tower depth: constancy certified this far
};
InertiaRecord tower_inertia_track(const Tower& tower, const Integer& prime, long level);

// Two-prime period bound over the tower: picks the two smallest-index tower
// primes of good reduction for f and uses their minimal frozen inertia
// degrees. f must have rational coefficients.
PeriodBoundCertificate tower_p2_bound(const Tower& tower, const UniPoly& f);

// The degree-gap witness for backward orbits: with p_(level+1) > deg f, a
// preimage of beta outside the level cannot live anywhere in the tower, since
// adjoining it gives an extension of degree in [2, deg f] while the minimal
// proper step is p_(level+1).
struct P1StepWitness {
    long level = 0;
    Integer next_prime;
    long poly_degree = 0;
    std::vector<Rational> rational_preimages;
    bool leaves_all_levels = false;  // no rational preimage: orbit exits the tower
};
P1StepWitness p1_step_witness(const Tower& tower, long level, const UniPoly& f,
                              const Rational& beta);

}  // namespace dynprop

#endif
