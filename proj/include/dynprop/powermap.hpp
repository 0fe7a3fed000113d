#ifndef DYNPROP_POWERMAP_HPP
#define DYNPROP_POWERMAP_HPP

#include <vector>

#include "dynprop/config.hpp"
#include "dynprop/factor.hpp"

namespace dynprop {

// Arithmetic of x -> x^d on exact-period-n points: those are the primitive
// m-th roots of unity for m = d^n - 1, indexed by the unit group (Z/m)*,
// where the map acts as multiplication by d.
struct PowermapReport {
    long d = 0, n = 0;
    Integer modulus;           // m = d^n - 1
    Integer unit_group_order;  // phi(m)
    Integer unit_group_exponent;  // Carmichael lambda(m)
    long order_of_d = 0;       // multiplicative order of d mod m; always n
    long cyclic_subgroup_exponent = 0;  // exponent of <d>, = n
    long orbit_count = 0;      // r = phi(m)/n
    bool orbits_all_size_n = false;
    bool exponent_at_least_25 = false;  // n >= 25: the hypothesis threshold over Q
};
PowermapReport powermap_galois(long d, long n, const Config& cfg = {});

// Action of multiplication-by-k on the multiplication-by-d orbits of units
// mod d^n - 1. If every orbit is stabilized the action lives in (Z/n)^r and
// `shifts` holds the component tuple; otherwise `orbit_permutation` records
// how the orbits move.
struct OrbitAction {
    long period = 0;  // n, the common orbit size
    Integer modulus;  // m = d^n - 1
    long orbit_count = 0;
    std::vector<Integer> orbit_representatives;  // minimal element of each orbit
    bool stabilizes_all = false;
    std::vector<long> shifts;             // in Z/n, one per orbit (when stabilizing)
    std::vector<long> orbit_permutation;  // image orbit index per orbit (otherwise)
};
OrbitAction powermap_orbit_action(long d, long n, const Integer& k, const Config& cfg = {});

}  // namespace dynprop

#endif
