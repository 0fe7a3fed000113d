#include "dynprop/powermap.hpp"

#include <numeric>

#include "dynprop/errors.hpp"

namespace dynprop {

namespace {

Integer pow_integer(long d, long n) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
    return r;
}

Integer carmichael_of_factored(const PrimeFactorization& f) {
    Integer lambda = 1;
    for (const auto& [p, e] : f.factors) {
        Integer le;
        long ee = e.get_si();
        if (p == 2) {
            le = (ee == 1) ? Integer(1) : (ee == 2) ? Integer(2) : Integer(Integer(1) << (ee - 2));
        } else {
            Integer pe1;
            mpz_pow_ui(pe1.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(ee - 1));
            le = pe1 * (p - 1);
        }
        mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), le.get_mpz_t());
    }
    return lambda;
}

Integer euler_phi_of_factored(const PrimeFactorization& f) {
    Integer phi = 1;
    for (const auto& [p, e] : f.factors) {
        Integer pe1;
        mpz_pow_ui(pe1.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e.get_si() - 1));
        phi *= pe1 * (p - 1);
    }
    return phi;
}

// multiplicative order via exponent reduction from lambda(m)
long order_mod(const Integer& a, const Integer& m, const Integer& lambda, const Config& cfg) {
    Integer e = lambda;
    for (const auto& [q, qe] : factor_integer(lambda, cfg).factors) {
        (void)qe;
        for (;;) {
            if (!mpz_divisible_p(e.get_mpz_t(), q.get_mpz_t())) break;
            Integer trial = e / q;
            Integer r;
            mpz_powm(r.get_mpz_t(), a.get_mpz_t(), trial.get_mpz_t(), m.get_mpz_t());
            if (r != 1) break;
            e = trial;
        }
    }
    if (!e.fits_slong_p()) throw InternalError("order_mod: order does not fit a long");
    return e.get_si();
}

}  // namespace

PowermapReport powermap_galois(long d, long n, const Config& cfg) {
    if (d < 2) throw ContractError("powermap: d must be >= 2");
    if (n < 1) throw ContractError("powermap: n must be >= 1");
    Integer m = pow_integer(d, n) - 1;
    if (m > cfg.group_order_cap)
        throw ResourceError("group_order_cap", cfg.group_order_cap,
                            "d^n - 1 exceeds the enumeration cap");

    PowermapReport rep;
    rep.d = d;
    rep.n = n;
    rep.modulus = m;
    PrimeFactorization mf = factor_integer(m, cfg);
    rep.unit_group_order = euler_phi_of_factored(mf);
    rep.unit_group_exponent = carmichael_of_factored(mf);
    rep.order_of_d = (m == 1) ? 1 : order_mod(Integer(d), m, rep.unit_group_exponent, cfg);
    if (rep.order_of_d != n)
        throw InternalError("powermap: order of d mod d^n - 1 is not n");
    rep.cyclic_subgroup_exponent = rep.order_of_d;  // <d> is cyclic of order n
    rep.exponent_at_least_25 = (n >= 25);

    // orbit partition of the units under multiplication by d
    if (m == 1) {  // d = 2, n = 1: a single degenerate class
        rep.orbit_count = 1;
        rep.orbits_all_size_n = true;
        return rep;
    }
    long mm = m.get_si();
    std::vector<char> visited(mm, 0);
    long orbits = 0;
    bool all_n = true;
    for (long u = 1; u < mm; ++u) {
        if (visited[u] || gcd(Integer(u), m) != 1) continue;
        long size = 0;
        long v = u;
        while (!visited[v]) {
            visited[v] = 1;
            ++size;
            v = Integer(Integer(v) * d % m).get_si();
        }
        ++orbits;
        if (size != n) all_n = false;
    }
    rep.orbit_count = orbits;
    rep.orbits_all_size_n = all_n;
    if (all_n && rep.unit_group_order != Integer(orbits) * n)
        throw InternalError("powermap: orbit count times n is not phi(m)");
    return rep;
}

OrbitAction powermap_orbit_action(long d, long n, const Integer& k, const Config& cfg) {
    if (d < 2) throw ContractError("powermap: d must be >= 2");
    if (n < 1) throw ContractError("powermap: n must be >= 1");
    Integer m = pow_integer(d, n) - 1;
    if (m > cfg.group_order_cap)
        throw ResourceError("group_order_cap", cfg.group_order_cap,
                            "d^n - 1 exceeds the enumeration cap");
    if (gcd(k, m) != 1)
        throw ContractError("powermap_orbit_action: k must be a unit mod " + to_string(m));

    OrbitAction act;
    act.period = n;
    act.modulus = m;
    if (m == 1) {
        act.orbit_count = 1;
        act.orbit_representatives = {Integer(0)};
        act.stabilizes_all = true;
        act.shifts = {0};
        act.orbit_permutation = {0};
        return act;
    }
    long mm = m.get_si();

    std::vector<long> orbit_of(mm, -1);
    std::vector<Integer> reps;
    for (long u = 1; u < mm; ++u) {
        if (orbit_of[u] >= 0 || gcd(Integer(u), m) != 1) continue;
        long id = static_cast<long>(reps.size());
        reps.emplace_back(u);  // u is minimal in its orbit by scan order
        long v = u;
        while (orbit_of[v] < 0) {
            orbit_of[v] = id;
            v = Integer(Integer(v) * d % m).get_si();
        }
    }
    act.orbit_count = static_cast<long>(reps.size());
    act.orbit_representatives = reps;

    Integer kk = ((k % m) + m) % m;
    act.stabilizes_all = true;
    for (long i = 0; i < act.orbit_count; ++i) {
        Integer image = reps[i] * kk % m;
        long j = orbit_of[image.get_si()];
        act.orbit_permutation.push_back(j);
        if (j != i) act.stabilizes_all = false;
    }
    if (act.stabilizes_all) {
        for (long i = 0; i < act.orbit_count; ++i) {
            Integer target = reps[i] * kk % m;
            Integer v = reps[i];
            long s = 0;
            while (v != target) {
                v = v * d % m;
                if (++s > n) throw InternalError("powermap: shift exceeded the orbit size");
            }
            act.shifts.push_back(s);
        }
    }
    return act;
}

}  // namespace dynprop
