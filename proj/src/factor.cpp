#include "dynprop/factor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "dynprop/errors.hpp"

namespace dynprop {

namespace {

constexpr uint32_t kTrialLimit = 1000000;

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<uint32_t> ps;
        for (uint32_t i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

// Pollard-Brent rho. Returns a nontrivial factor of composite n, or 0 if the
// iteration budget runs out.
Integer pollard_brent(const Integer& n, unsigned long seed, long iteration_budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    while (iteration_budget > 0) {
        Integer y = rng.get_z_range(n - 3) + 2;
        Integer c = rng.get_z_range(n - 1) + 1;
        Integer x, ys, q = 1, g = 1;
        long r = 1;
        const long m = 128;
        while (g == 1 && iteration_budget > 0) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && g == 1) {
                ys = y;
                long lim = std::min(m, r - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x - y) % n;
                }
                g = gcd(q, n);
                k += m;
                iteration_budget -= lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time through the last batch
            g = 1;
            for (long i = 0; i < 4096 && g == 1; ++i) {
                ys = (ys * ys + c) % n;
                g = gcd(Integer(x - ys), n);
            }
        }
        if (g != n && g > 1) return g;
        // cycle degenerated; retry with fresh parameters
    }
    return 0;
}

void factor_into(const Integer& n, std::map<Integer, Integer>& out, long budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_brent(n, 0x9e3779b9u + static_cast<unsigned long>(mpz_fdiv_ui(n.get_mpz_t(), 1000003)), budget);
    if (d == 0 || d == 1 || d == n)
        throw ResourceError("factor_rho_budget", budget,
                            "incomplete factorization: rho failed to split " + to_string(n));
    factor_into(d, out, budget);
    factor_into(Integer(n / d), out, budget);
}

}  // namespace

Integer PrimeFactorization::value() const {
    Integer v = sign;
    for (const auto& [p, e] : factors) {
        if (e < 0) throw ContractError("PrimeFactorization::value: negative exponent");
        if (!e.fits_ulong_p()) throw ResourceError("exponent", 0, "exponent too large to expand");
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e.get_ui());
        v *= pe;
    }
    return v;
}

Rational PrimeFactorization::rational_value() const {
    Rational v = sign;
    for (const auto& [p, e] : factors) {
        if (!e.fits_slong_p()) throw ResourceError("exponent", 0, "exponent too large to expand");
        long ex = e.get_si();
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(ex)));
        if (ex >= 0)
            v *= Rational(pe);
        else
            v /= Rational(pe);
    }
    return v;
}

Integer PrimeFactorization::exponent_of(const Integer& p) const {
    auto it = factors.find(p);
    return it == factors.end() ? Integer(0) : it->second;
}

double PrimeFactorization::digits_estimate() const {
    double d = 0;
    for (const auto& [p, e] : factors)
        d += std::abs(e.get_d()) * std::log10(p.get_d());
    return d;
}

PrimeFactorization factor_integer(const Integer& n, const Config& cfg) {
    if (n == 0) throw ContractError("factor_integer: n must be nonzero");
    Integer a = abs(n);
    if (a >= cfg.factor_cap)
        throw ContractError("factor_integer: |n| exceeds factor_cap");
    PrimeFactorization out;
    out.sign = (n < 0) ? -1 : 1;
    for (uint32_t p : small_primes()) {
        if (a == 1) break;
        if (Integer(p) * p > a) break;
        if (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
            long e = static_cast<long>(mpz_remove(a.get_mpz_t(), a.get_mpz_t(), Integer(p).get_mpz_t()));
            out.factors[p] = e;
        }
    }
    if (a > 1) {
        if (is_prime(a))
            out.factors[a] += 1;
        else
            factor_into(a, out.factors, 50000000);
    }
    // Each factor must carry a primality certificate.
    for (const auto& [p, e] : out.factors) {
        (void)e;
        if (!is_prime(p)) throw InternalError("factor_integer produced a composite factor");
    }
    return out;
}

PrimeFactorization factor_rational(const Rational& r, const Config& cfg) {
    if (r == 0) throw ContractError("factor_rational: r must be nonzero");
    PrimeFactorization num = factor_integer(Integer(r.get_num()), cfg);
    PrimeFactorization den = factor_integer(Integer(r.get_den()), cfg);
    for (const auto& [p, e] : den.factors) {
        num.factors[p] -= e;
        if (num.factors[p] == 0) num.factors.erase(p);
    }
    return num;
}

int moebius(const Integer& n, const Config& cfg) {
    if (n < 1) throw ContractError("moebius: n must be >= 1");
    if (n == 1) return 1;
    PrimeFactorization f = factor_integer(n, cfg);
    for (const auto& [p, e] : f.factors) {
        (void)p;
        if (e >= 2) return 0;
    }
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

std::vector<Integer> divisors(const PrimeFactorization& f, long max_count) {
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : f.factors) {
        if (e < 0) throw ContractError("divisors: negative exponent");
        if (!e.fits_slong_p()) throw ResourceError("divisor_count", max_count, "divisor set too large");
        long ecount = e.get_si();
        if (static_cast<long>(ds.size()) * (ecount + 1) > max_count)
            throw ResourceError("divisor_count", max_count, "divisor set too large");
        std::vector<Integer> next;
        next.reserve(ds.size() * (ecount + 1));
        Integer pe = 1;
        for (long k = 0; k <= ecount; ++k) {
            for (const auto& d : ds) next.push_back(d * pe);
            pe *= p;
        }
        ds = std::move(next);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<long> divisors_of_long(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace dynprop
