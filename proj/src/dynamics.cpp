#include "dynprop/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dynprop/errors.hpp"
#include "dynprop/factor.hpp"
#include "dynprop/rational_roots.hpp"

namespace dynprop {

namespace {

// (deg f)^k if it stays within `cap`
std::optional<long> pow_capped(long base, long k, long cap) {
    long r = 1;
    for (long i = 0; i < k; ++i) {
        if (r > cap / base) return std::nullopt;
        r *= base;
    }
    return r;
}

// numerator/denominator lexicographic order for orbit canonicalization
bool numden_less(const Rational& a, const Rational& b) {
    int c = cmp(a.get_num(), b.get_num());
    if (c != 0) return c < 0;
    return cmp(a.get_den(), b.get_den()) < 0;
}

std::vector<Rational> canonical_rotation(std::vector<Rational> pts) {
    size_t min_at = 0;
    for (size_t i = 1; i < pts.size(); ++i)
        if (numden_less(pts[i], pts[min_at])) min_at = i;
    std::rotate(pts.begin(), pts.begin() + min_at, pts.end());
    return pts;
}

}  // namespace

Rational iterate(const UniPoly& f, long k, const Rational& x0) {
    if (k < 0) throw ContractError("iterate: k must be nonnegative");
    Rational x = x0;
    for (long i = 0; i < k; ++i) x = f.evaluate(x);
    return x;
}

UniPoly iterate_poly(const UniPoly& f, long k, const Config& cfg) {
    if (k < 1) throw ContractError("iterate_poly: k must be positive");
    if (f.degree() >= 2 && !pow_capped(f.degree(), k, cfg.poly_degree_cap))
        throw ResourceError("poly_degree_cap", cfg.poly_degree_cap,
                            "degree " + std::to_string(f.degree()) + "^" + std::to_string(k) +
                                " exceeds the symbolic degree cap");
    UniPoly r = f;
    for (long i = 1; i < k; ++i) r = f.compose(r);
    return r;
}

long dynatomic_degree(long poly_degree, long n) {
    long deg = 0;
    for (long d : divisors_of_long(n)) {
        long pw = 1;
        for (long i = 0; i < d; ++i) pw *= poly_degree;
        deg += moebius(Integer(n / d)) * pw;
    }
    return deg;
}

DynatomicScanner::DynatomicScanner(UniPoly f, Config cfg) : f_(std::move(f)), cfg_(std::move(cfg)) {
    if (f_.degree() < 2) throw ContractError("dynatomic: deg f must be >= 2");
    powers_.push_back(f_);
}

bool DynatomicScanner::period_fits_cap(long n) const {
    return pow_capped(f_.degree(), n, cfg_.poly_degree_cap).has_value();
}

const UniPoly& DynatomicScanner::iterate_power(long k) {
    while (static_cast<long>(powers_.size()) < k) {
        long next = static_cast<long>(powers_.size()) + 1;
        if (!pow_capped(f_.degree(), next, cfg_.poly_degree_cap))
            throw ResourceError("poly_degree_cap", cfg_.poly_degree_cap,
                                "iterate " + std::to_string(next) + " exceeds the symbolic degree cap");
        powers_.push_back(f_.compose(powers_.back()));
    }
    return powers_[k - 1];
}

UniPoly DynatomicScanner::dynatomic_poly(long n) {
    if (n < 1) throw ContractError("dynatomic: n must be positive");
    if (!period_fits_cap(n))
        throw ResourceError("poly_degree_cap", cfg_.poly_degree_cap,
                            "dynatomic degree for n = " + std::to_string(n) +
                                " exceeds the symbolic degree cap");
    // Moebius product: multiply the mu = +1 factors, divide by the mu = -1 ones
    UniPoly num = UniPoly::constant(1), den = UniPoly::constant(1);
    const UniPoly x = UniPoly::x();
    for (long d : divisors_of_long(n)) {
        int mu = moebius(Integer(n / d));
        if (mu == 0) continue;
        UniPoly factor = iterate_power(d) - x;
        if (mu == 1)
            num = (num.degree() <= factor.degree()) ? factor * num : num * factor;
        else
            den = (den.degree() <= factor.degree()) ? factor * den : den * factor;
    }
    UniPoly phi = UniPoly::exact_div(num, den);
    if (phi.degree() != dynatomic_degree(f_.degree(), n))
        throw InternalError("dynatomic: degree does not match the Moebius formula");
    return phi;
}

std::vector<PeriodicOrbit> DynatomicScanner::orbits_of_period(long n) {
    std::vector<PeriodicOrbit> orbits;
    std::set<std::vector<Rational>> seen;
    for (const Rational& root : rational_roots(dynatomic_poly(n), cfg_)) {
        if (exact_period(f_, root, n) != n) continue;  // lower-period collision
        std::vector<Rational> pts;
        pts.reserve(n);
        Rational x = root;
        for (long i = 0; i < n; ++i) {
            pts.push_back(x);
            x = f_.evaluate(x);
        }
        pts = canonical_rotation(std::move(pts));
        if (seen.insert(pts).second) orbits.push_back(PeriodicOrbit{n, pts});
    }
    std::sort(orbits.begin(), orbits.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
        return numden_less(a.points.front(), b.points.front());
    });
    return orbits;
}

UniPoly dynatomic(const UniPoly& f, long n, const Config& cfg) {
    DynatomicScanner scanner(f, cfg);
    return scanner.dynatomic_poly(n);
}

std::optional<long> exact_period(const UniPoly& f, const Rational& beta, long n_max) {
    if (n_max < 1) throw ContractError("exact_period: n_max must be >= 1");
    // stop early once the orbit enters a cycle that does not contain beta
    std::map<Rational, long> seen;
    Rational x = beta;
    seen[x] = 0;
    for (long n = 1; n <= n_max; ++n) {
        x = f.evaluate(x);
        if (x == beta) return n;
        auto [it, fresh] = seen.emplace(x, n);
        (void)it;
        if (!fresh) return std::nullopt;
    }
    return std::nullopt;
}

std::vector<PeriodicOrbit> rational_periodic_points(const UniPoly& f, long n_max, const Config& cfg) {
    if (n_max < 1) throw ContractError("rational_periodic_points: n_max must be >= 1");
    DynatomicScanner scanner(f, cfg);
    std::vector<PeriodicOrbit> orbits;
    for (long n = 1; n <= n_max; ++n) {
        if (!scanner.period_fits_cap(n))
            throw ResourceError("poly_degree_cap", cfg.poly_degree_cap,
                                "period " + std::to_string(n) + " needs a dynatomic degree above the cap");
        for (auto& orbit : scanner.orbits_of_period(n)) orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<Rational> preimages(const UniPoly& f, const Rational& beta) {
    if (f.degree() < 2) throw ContractError("preimages: deg f must be >= 2");
    return rational_roots(f - UniPoly::constant(beta));
}

PreimageTree preimage_tree(const UniPoly& f, const Rational& alpha0, long depth, const Config& cfg) {
    if (f.degree() < 2) throw ContractError("preimage_tree: deg f must be >= 2");
    if (depth < 0) throw ContractError("preimage_tree: depth must be >= 0");
    PreimageTree tree;
    tree.root = alpha0;
    tree.depth_limit = depth;
    tree.nodes.push_back(PreimageTreeNode{alpha0, 0, -1, {}});
    tree.nodes_per_depth.assign(depth + 1, 0);
    tree.nodes_per_depth[0] = 1;
    size_t head = 0;
    while (head < tree.nodes.size()) {
        const long idx = static_cast<long>(head);
        const long node_depth = tree.nodes[head].depth;
        const Rational value = tree.nodes[head].value;
        ++head;
        if (node_depth == depth) continue;
        for (const Rational& pre : preimages(f, value)) {
            if (static_cast<long>(tree.nodes.size()) >= cfg.tree_node_cap)
                throw ResourceError("tree_node_cap", cfg.tree_node_cap,
                                    "preimage tree exceeded the node budget");
            tree.nodes.push_back(PreimageTreeNode{pre, node_depth + 1, idx, {}});
            tree.nodes[idx].children.push_back(static_cast<long>(tree.nodes.size()) - 1);
            tree.nodes_per_depth[node_depth + 1]++;
        }
    }
    for (long d = 0; d <= depth; ++d) {
        if (tree.nodes_per_depth[d] == 0) {
            tree.terminated = true;
            tree.first_empty_depth = d;
            break;
        }
    }
    return tree;
}

UniPoly chebyshev(long d) {
    if (d < 1) throw ContractError("chebyshev: d must be >= 1");
    UniPoly prev = UniPoly::constant(2);  // C_0
    UniPoly cur = UniPoly::x();           // C_1
    const UniPoly x = UniPoly::x();
    for (long k = 1; k < d; ++k) {
        UniPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool verify_chebyshev_identity(long d, const Config& cfg) {
    if (d < 1) throw ContractError("verify_chebyshev_identity: d must be >= 1");
    if (2 * d > cfg.poly_degree_cap)
        throw ResourceError("poly_degree_cap", cfg.poly_degree_cap,
                            "identity check needs degree 2d above the cap");
    UniPoly c = chebyshev(d);
    // z^d * C_d((z^2+1)/z) expanded in z: sum of c_i (z^2+1)^i z^(d-i)
    const UniPoly zsq1 = UniPoly::from_coeffs({1, 0, 1});
    std::vector<UniPoly> pows(d + 1);
    pows[0] = UniPoly::constant(1);
    for (long i = 1; i <= d; ++i) pows[i] = pows[i - 1] * zsq1;
    UniPoly lhs = UniPoly::zero();
    for (long i = 0; i <= d; ++i) {
        if (c.coeff(i) == 0) continue;
        std::vector<Rational> shifted(d - i, Rational(0));
        for (const auto& v : pows[i].coeffs()) shifted.push_back(v * c.coeff(i));
        lhs = lhs + UniPoly(std::move(shifted));
    }
    std::vector<Rational> rhs(2 * d + 1, Rational(0));
    rhs[0] = 1;
    rhs[2 * d] = 1;
    return lhs == UniPoly(std::move(rhs));
}

}  // namespace dynprop
