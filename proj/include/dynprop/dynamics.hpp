#ifndef DYNPROP_DYNAMICS_HPP
#define DYNPROP_DYNAMICS_HPP

#include <optional>
#include <vector>

#include "dynprop/config.hpp"
#include "dynprop/unipoly.hpp"

namespace dynprop {

// One rational cycle: f maps each point to the next and the last back to the
// first, and no proper divisor of exact_period closes the loop. Points are
// rotated so the minimal one (numerator/denominator lexicographic) is first.
struct PeriodicOrbit {
    long exact_period = 0;
    std::vector<Rational> points;

    bool operator==(const PeriodicOrbit&) const = default;
};

struct PreimageTreeNode {
    Rational value;
    long depth = 0;
    long parent = -1;  // -1 at the root
    std::vector<long> children;
};

// Breadth-first tree of rational preimages: every edge satisfies
// f(child) = parent. `terminated` means every branch died strictly before
// the requested depth, a finite-backward-orbit witness at desk scale.
struct PreimageTree {
    Rational root;
    long depth_limit = 0;
    std::vector<PreimageTreeNode> nodes;  // BFS order, node 0 is the root
    std::vector<long> nodes_per_depth;    // indexed 0..depth_limit
    bool terminated = false;
    long first_empty_depth = -1;  // meaningful when terminated
};

// f^k(x0) by repeated exact evaluation (f^0 = identity).
Rational iterate(const UniPoly& f, long k, const Rational& x0);

// The expanded polynomial f^k; (deg f)^k above the symbolic cap is a
// resource error.
UniPoly iterate_poly(const UniPoly& f, long k, const Config& cfg = {});

// Dynatomic polynomial: the Moebius product of (f^d - x) over divisors d | n.
// The divisor product always divides exactly; a nonzero remainder signals a
// bug, not bad input.
UniPoly dynatomic(const UniPoly& f, long n, const Config& cfg = {});
long dynatomic_degree(long poly_degree, long n);  // sum of mu(n/d) * deg^d

// Smallest n <= n_max with f^n(beta) = beta, or nullopt.
std::optional<long> exact_period(const UniPoly& f, const Rational& beta, long n_max);

// Scans periods one at a time while sharing the expanded f^k cache, so a
// bound-driven enumeration does not recompute iterates per period.
class DynatomicScanner {
public:
    DynatomicScanner(UniPoly f, Config cfg = {});

    bool period_fits_cap(long n) const;  // (deg f)^n within the symbolic cap
    UniPoly dynatomic_poly(long n);
    // orbits of exact period n: dynatomic roots re-verified by iteration,
    // discarding lower-period multiplicity collisions
    std::vector<PeriodicOrbit> orbits_of_period(long n);

private:
    const UniPoly& iterate_power(long k);
    UniPoly f_;
    Config cfg_;
    std::vector<UniPoly> powers_;
};

// All rational orbits of exact period n <= n_max. A period whose dynatomic
// degree exceeds the cap raises a resource error naming the offending n.
std::vector<PeriodicOrbit> rational_periodic_points(const UniPoly& f, long n_max,
                                                    const Config& cfg = {});

// Rational solutions of f(x) = beta, each listed once.
std::vector<Rational> preimages(const UniPoly& f, const Rational& beta);

PreimageTree preimage_tree(const UniPoly& f, const Rational& alpha0, long depth,
                           const Config& cfg = {});

// Monic integer Chebyshev polynomial normalized by C_d(z + 1/z) = z^d + z^-d.
UniPoly chebyshev(long d);
// Exact check of z^d * C_d(z + 1/z) = z^(2d) + 1 in the polynomial ring.
bool verify_chebyshev_identity(long d, const Config& cfg = {});

}  // namespace dynprop

#endif
