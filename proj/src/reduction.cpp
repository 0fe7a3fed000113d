#include "dynprop/reduction.hpp"

#include "dynprop/errors.hpp"
#include "dynprop/fp_poly.hpp"
#include "dynprop/rational_roots.hpp"

namespace dynprop {

Integer PeriodBoundCertificate::recompute_bound() const {
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), p.get_mpz_t(), 2 * static_cast<unsigned long>(inertia_p));
    mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), 2 * static_cast<unsigned long>(inertia_q));
    return (a - 1) * (b - 1);
}

GoodReductionWitness good_reduction_witness(const UniPoly& f, const Integer& p) {
    if (f.degree() < 2) throw ContractError("good reduction: deg f must be >= 2");
    if (!is_prime(p)) throw ContractError("good reduction: p must be prime");
    GoodReductionWitness w;
    w.prime = p;
    w.good = true;
    for (long i = 0; i <= f.degree(); ++i) {
        auto v = padic_valuation(f.coeff(i), p);
        // v = +infinity for zero coefficients; record as 0 in the witness
        long vi = v.has_value() ? *v : 0;
        w.coeff_valuations.push_back(vi);
        if (v.has_value() && *v < 0) w.good = false;
    }
    w.leading_is_unit = (*padic_valuation(f.leading(), p) == 0);
    if (!w.leading_is_unit) w.good = false;
    return w;
}

bool has_good_reduction(const UniPoly& f, const Integer& p) {
    return good_reduction_witness(f, p).good;
}

std::vector<Integer> good_reduction_primes(const UniPoly& f, long count) {
    if (count < 1) throw ContractError("good_reduction_primes: count must be >= 1");
    if (f.degree() < 2) throw ContractError("good_reduction_primes: deg f must be >= 2");
    std::vector<Integer> out;
    Integer p(1);
    while (static_cast<long>(out.size()) < count) {
        p = next_prime_after(p);
        if (has_good_reduction(f, p)) out.push_back(p);
    }
    return out;
}

PeriodBoundCertificate period_bound(const UniPoly& f) {
    std::vector<Integer> ps = good_reduction_primes(f, 2);
    PeriodBoundCertificate cert;
    cert.p = ps[0];
    cert.q = ps[1];
    cert.inertia_p = cert.inertia_q = 1;  // base field Q
    cert.witness_p = good_reduction_witness(f, cert.p);
    cert.witness_q = good_reduction_witness(f, cert.q);
    cert.bound = cert.recompute_bound();
    return cert;
}

CertifiedOrbits certified_rational_periodic_points(const UniPoly& f, const Config& cfg) {
    if (f.degree() < 2) throw ContractError("certified enumeration: deg f must be >= 2");
    CertifiedOrbits out;
    out.certificate = period_bound(f);
    if (!out.certificate.bound.fits_slong_p())
        throw ResourceError("period_bound", cfg.poly_degree_cap,
                            "period bound too large to enumerate");
    const long bound = out.certificate.bound.get_si();

    DynatomicScanner scanner(f, cfg);
    for (long n = 1; n <= bound; ++n) {
        if (!scanner.period_fits_cap(n)) {
            out.complete = false;
            out.omitted_periods.push_back(n);
            continue;
        }
        for (auto& orbit : scanner.orbits_of_period(n)) out.orbits.push_back(std::move(orbit));
    }
    return out;
}

InertiaProfile inertia_profile(const UniPoly& minpoly, const Integer& p) {
    if (!minpoly.is_monic()) throw ContractError("inertia_profile: minpoly must be monic");
    if (minpoly.degree() < 1) throw ContractError("inertia_profile: degree must be >= 1");
    InertiaProfile out;
    FpPoly fp = reduce_mod_p(minpoly, p);
    if (fp.degree() != minpoly.degree())
        throw InternalError("inertia_profile: monic polynomial degenerated mod p");
    FpFactorDegrees d = fp_factor_degrees(fp);
    if (!d.squarefree) {
        out.ramified_or_indistinct = true;
        return out;
    }
    out.degrees = d.degrees;
    return out;
}

}  // namespace dynprop
