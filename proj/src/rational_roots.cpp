#include "dynprop/rational_roots.hpp"

#include <algorithm>
#include <optional>

#include "dynprop/errors.hpp"
#include "dynprop/fp_poly.hpp"

namespace dynprop {

namespace {

using ZPoly = std::vector<Integer>;  // ascending, no trailing zeros

long zdeg(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }

void zstrip(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zderivative(const ZPoly& f) {
    if (f.size() <= 1) return {};
    ZPoly d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<long>(i);
    return d;
}

void make_primitive(ZPoly& f) {
    Integer g = 0;
    for (const auto& v : f) g = gcd(g, v);
    if (g > 1)
        for (auto& v : f) v /= g;
    if (!f.empty() && f.back() < 0)
        for (auto& v : f) v = -v;
}

// Exact trial division of primitive polynomials over Z. Returns the quotient
// when d divides f, nullopt as soon as a step fails to divide.
std::optional<ZPoly> zdivide_exact(const ZPoly& f, const ZPoly& d) {
    if (d.empty()) throw ContractError("zdivide_exact: zero divisor");
    if (zdeg(f) < zdeg(d)) return std::nullopt;
    ZPoly r = f;
    const long dd = zdeg(d);
    const long dq = zdeg(f) - dd;
    ZPoly q(dq + 1);
    for (long k = dq; k >= 0; --k) {
        if (r[k + dd] == 0) {
            q[k] = 0;
            continue;
        }
        Integer qk, rem;
        mpz_tdiv_qr(qk.get_mpz_t(), rem.get_mpz_t(), r[k + dd].get_mpz_t(), d[dd].get_mpz_t());
        if (rem != 0) return std::nullopt;
        q[k] = qk;
        for (long i = 0; i <= dd; ++i) r[k + i] -= qk * d[i];
    }
    for (long i = 0; i < dd; ++i)
        if (r[i] != 0) return std::nullopt;
    zstrip(q);
    return q;
}

// Certified gcd of primitive integer polynomials by modular images + CRT.
// The returned divisor is primitive, divides both inputs exactly, and has
// the minimal degree observed among good primes, which pins it as the gcd.
ZPoly zgcd_certified(const ZPoly& a, const ZPoly& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    Integer lead_gcd = gcd(a.back(), b.back());

    Integer modulus = 1;
    std::vector<Integer> crt;  // symmetric-range coefficients of lead_gcd * gcd
    long best_deg = -1;
    ZPoly last_candidate;
    int primes_used = 0;

    Integer p(2);
    for (int iter = 0; iter < 300; ++iter) {
        p = next_prime_after(p);
        uint64_t pp = p.get_ui();
        if (mpz_fdiv_ui(a.back().get_mpz_t(), pp) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), pp) == 0)
            continue;
        FpPoly gp = fp_gcd(reduce_mod_p(a, pp), reduce_mod_p(b, pp));
        if (gp.degree() == 0) return {Integer(1)};
        // Brown's normalization: scale the monic image by lead_gcd
        uint64_t scale = mpz_fdiv_ui(lead_gcd.get_mpz_t(), pp);
        std::vector<Integer> img(gp.c.size());
        for (size_t i = 0; i < gp.c.size(); ++i) {
            uint64_t v = static_cast<uint64_t>((static_cast<unsigned __int128>(gp.c[i]) * scale) % pp);
            img[i] = Integer(static_cast<unsigned long>(v));
        }

        if (best_deg < 0 || gp.degree() < best_deg) {
            best_deg = gp.degree();
            modulus = p;
            crt.assign(img.begin(), img.end());
            primes_used = 1;
        } else if (gp.degree() == best_deg) {
            // CRT combine into symmetric range
            Integer minv;
            if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t()) == 0)
                throw InternalError("zgcd_certified: CRT inversion failed");
            Integer new_modulus = modulus * p;
            for (size_t i = 0; i < crt.size(); ++i) {
                Integer ri = img[i] - crt[i];
                Integer t = (ri * minv) % p;
                crt[i] += modulus * t;
                crt[i] %= new_modulus;
                if (crt[i] < 0) crt[i] += new_modulus;
            }
            modulus = new_modulus;
            ++primes_used;
        } else {
            continue;  // unlucky prime, image degree too small elsewhere
        }

        ZPoly cand(crt.size());
        Integer half = modulus / 2;
        for (size_t i = 0; i < crt.size(); ++i) {
            cand[i] = crt[i] % modulus;
            if (cand[i] < 0) cand[i] += modulus;
            if (cand[i] > half) cand[i] -= modulus;
        }
        zstrip(cand);
        make_primitive(cand);
        if (primes_used >= 2 && cand == last_candidate) {
            if (auto qa = zdivide_exact(a, cand); qa.has_value())
                if (auto qb = zdivide_exact(b, cand); qb.has_value()) return cand;
        }
        last_candidate = cand;
    }
    throw ResourceError("gcd_prime_budget", 300, "integer polynomial gcd did not stabilize");
}

Integer zeval(const ZPoly& f, const Integer& x, const Integer& mod) {
    Integer r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        r = (r * x + *it) % mod;
    }
    if (r < 0) r += mod;
    return r;
}

// Rational reconstruction of r mod m with |num| <= bound, 0 < den <= bound.
std::optional<Rational> rational_reconstruct(const Integer& r, const Integer& m, const Integer& bound) {
    Integer r0 = m, t0 = 0, r1 = r % m, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    if (abs(t1) > bound) return std::nullopt;
    Integer num = r1, den = t1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (gcd(num, den) != 1) return std::nullopt;
    Rational out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& f, const Config& cfg) {
    (void)cfg;
    if (f.is_zero()) throw ContractError("rational_roots: zero polynomial");

    std::vector<Rational> roots;

    UniPoly::IntegerModel model = f.integer_model();
    ZPoly F = model.coeffs;

    // strip powers of x; 0 is a root iff the constant term vanished
    size_t shift = 0;
    while (shift < F.size() && F[shift] == 0) ++shift;
    if (shift > 0) {
        F.erase(F.begin(), F.begin() + shift);
        roots.emplace_back(0);
    }
    make_primitive(F);

    const long deg = zdeg(F);
    if (deg == 1) {
        Rational r(-F[0], F[1]);
        r.canonicalize();
        roots.push_back(r);
    } else if (deg == 2) {
        Integer disc = F[1] * F[1] - 4 * F[0] * F[2];
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            Integer s = sqrt(disc);
            for (int sgn : {1, -1}) {
                Rational r(-F[1] + sgn * s, 2 * F[2]);
                r.canonicalize();
                roots.push_back(r);
                if (s == 0) break;
            }
        }
    } else if (deg >= 3) {
        // multi-prime emptiness prefilter: a rational root u/v reduces to a
        // root of F mod p whenever p does not divide the leading coefficient,
        // so one rootless good prime settles the question
        bool maybe_roots = true;
        {
            Integer p(2);
            int good = 0;
            for (int iter = 0; iter < 100 && good < 6; ++iter) {
                p = next_prime_after(p);
                uint64_t pp = p.get_ui();
                if (mpz_fdiv_ui(F.back().get_mpz_t(), pp) == 0) continue;
                ++good;
                if (fp_roots(reduce_mod_p(F, pp)).empty()) {
                    maybe_roots = false;
                    break;
                }
            }
        }

        // squarefree part: first look for a prime certifying gcd(F, F') = 1,
        // otherwise compute the certified integer gcd and divide it out
        ZPoly S;
        if (maybe_roots) {
            ZPoly Fd = zderivative(F);
            bool coprime = false;
            Integer p(2);
            for (int tries = 0; tries < 8 && !coprime; ++tries) {
                p = next_prime_after(p);
                uint64_t pp = p.get_ui();
                if (mpz_fdiv_ui(F.back().get_mpz_t(), pp) == 0) continue;
                if (fp_gcd(reduce_mod_p(F, pp), reduce_mod_p(Fd, pp)).degree() == 0) coprime = true;
            }
            if (coprime) {
                S = F;
            } else {
                ZPoly G = zgcd_certified(F, Fd);
                auto q = zdivide_exact(F, G);
                if (!q.has_value()) throw InternalError("rational_roots: gcd fails to divide");
                S = *q;
                make_primitive(S);
            }
        }

        if (maybe_roots && zdeg(S) >= 1) {
            // pick a prime with S squarefree mod p; stop early if some prime
            // shows no roots at all (then no rational root can exist)
            ZPoly Sd = zderivative(S);
            std::optional<uint64_t> chosen;
            std::vector<uint64_t> chosen_roots;
            bool no_roots = false;
            Integer p(2);
            int good_seen = 0;
            for (int iter = 0; iter < 500 && good_seen < 6; ++iter) {
                p = next_prime_after(p);
                uint64_t pp = p.get_ui();
                if (mpz_fdiv_ui(S.back().get_mpz_t(), pp) == 0) continue;
                FpPoly Sp = reduce_mod_p(S, pp);
                if (fp_gcd(Sp, reduce_mod_p(Sd, pp)).degree() != 0) continue;
                ++good_seen;
                std::vector<uint64_t> rs = fp_roots(Sp);
                if (rs.empty()) {
                    no_roots = true;
                    break;
                }
                if (!chosen || rs.size() < chosen_roots.size()) {
                    chosen = pp;
                    chosen_roots = rs;
                }
            }
            if (!chosen && !no_roots)
                throw ResourceError("root_prime_scan", 500,
                                    "no squarefree modular image found for root search");

            if (!no_roots) {
                // size bound on numerator and denominator of any rational root
                Integer H = 0;
                for (const auto& v : S) H = std::max(H, Integer(abs(v)));
                Integer B = abs(S.back()) + H;
                Integer target = 2 * B * B + 1;

                uint64_t pp = *chosen;
                for (uint64_t r0 : chosen_roots) {
                    // Newton lift r against S to modulus > 2B^2
                    Integer modulus(pp);
                    Integer r(r0);
                    while (modulus < target) {
                        modulus *= modulus;
                        Integer val = zeval(S, r, modulus);
                        Integer der = zeval(Sd, r, modulus);
                        Integer inv;
                        if (mpz_invert(inv.get_mpz_t(), der.get_mpz_t(), modulus.get_mpz_t()) == 0)
                            throw InternalError("rational_roots: derivative not invertible in lift");
                        r = (r - val * inv) % modulus;
                        if (r < 0) r += modulus;
                    }
                    auto cand = rational_reconstruct(r, modulus, B);
                    if (cand && f.evaluate(*cand) == 0) roots.push_back(*cand);
                }
            }
        }
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const auto& r : roots)
        if (f.evaluate(r) != 0) throw InternalError("rational_roots: verification failed");
    return roots;
}

}  // namespace dynprop
