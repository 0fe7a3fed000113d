#include "dynprop/fp_poly.hpp"

#include <algorithm>

#include "dynprop/errors.hpp"

namespace dynprop {

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

void strip(std::vector<uint64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly fp_powmod(const FpPoly& base, uint64_t exp, const FpPoly& mod) {
    FpPoly r = FpPoly::make(mod.p, {1});
    FpPoly sq = fp_rem(base, mod);
    while (exp) {
        if (exp & 1) r = fp_rem(fp_mul(r, sq), mod);
        exp >>= 1;
        if (exp) sq = fp_rem(fp_mul(sq, sq), mod);
    }
    return r;
}

}  // namespace

FpPoly FpPoly::make(uint64_t p, std::vector<uint64_t> coeffs) {
    if (p < 2 || p >= (uint64_t(1) << 31)) throw ContractError("FpPoly: p must be a prime below 2^31");
    FpPoly f;
    f.p = p;
    f.c = std::move(coeffs);
    for (auto& v : f.c) v %= p;
    strip(f.c);
    return f;
}

uint64_t FpPoly::evaluate(uint64_t x) const {
    uint64_t r = 0;
    x %= p;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = (mulmod(r, x, p) + *it) % p;
    return r;
}

FpPoly FpPoly::derivative() const {
    if (degree() <= 0) return FpPoly::make(p, {});
    std::vector<uint64_t> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = mulmod(c[i], i % p, p);
    return FpPoly::make(p, std::move(d));
}

FpPoly FpPoly::monic() const {
    if (is_zero() || c.back() == 1) return *this;
    uint64_t inv = invmod(c.back(), p);
    FpPoly f = *this;
    for (auto& v : f.c) v = mulmod(v, inv, p);
    return f;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    std::vector<uint64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = (c[i] + b.c[i]) % a.p;
    return FpPoly::make(a.p, std::move(c));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    std::vector<uint64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = (c[i] + a.p - b.c[i]) % a.p;
    return FpPoly::make(a.p, std::move(c));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly::make(a.p, {});
    std::vector<uint64_t> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = (c[i + j] + static_cast<unsigned __int128>(a.c[i]) * b.c[j]) % a.p;
    }
    return FpPoly::make(a.p, std::move(c));
}

namespace {

// quotient and remainder in one pass
std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw ContractError("fp_divrem: division by zero polynomial");
    std::vector<uint64_t> r = a.c;
    const long db = b.degree();
    const long dq = static_cast<long>(r.size()) - 1 - db;
    std::vector<uint64_t> q(dq >= 0 ? dq + 1 : 0, 0);
    uint64_t lead_inv = invmod(b.c.back(), a.p);
    for (long k = static_cast<long>(r.size()) - 1; k >= db; --k) {
        if (r[k] == 0) continue;
        uint64_t qk = mulmod(r[k], lead_inv, a.p);
        q[k - db] = qk;
        for (long i = 0; i <= db; ++i)
            r[k - db + i] = (r[k - db + i] + a.p - mulmod(qk, b.c[i], a.p)) % a.p;
    }
    r.resize(db > 0 ? db : 0);
    return {FpPoly::make(a.p, std::move(q)), FpPoly::make(a.p, std::move(r))};
}

}  // namespace

FpPoly fp_rem(const FpPoly& a, const FpPoly& b) { return fp_divrem(a, b).second; }

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = fp_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpPoly reduce_mod_p(const UniPoly& f, const Integer& p) {
    if (!p.fits_ulong_p() || p >= (Integer(1) << 31))
        throw ContractError("reduce_mod_p: p must fit below 2^31");
    uint64_t pp = p.get_ui();
    std::vector<uint64_t> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        const Rational& v = f.coeffs()[i];
        uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), pp);
        if (den == 0)
            throw ContractError("reduce_mod_p: coefficient is not p-integral at p = " + to_string(p));
        uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), pp);
        c[i] = mulmod(num, invmod(den, pp), pp);
    }
    return FpPoly::make(pp, std::move(c));
}

FpPoly reduce_mod_p(const std::vector<Integer>& coeffs, uint64_t p) {
    std::vector<uint64_t> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = mpz_fdiv_ui(coeffs[i].get_mpz_t(), p);
    return FpPoly::make(p, std::move(c));
}

FpFactorDegrees fp_factor_degrees(const FpPoly& f) {
    if (f.degree() < 1) throw ContractError("fp_factor_degrees: degree must be >= 1");
    if (!f.is_monic()) throw ContractError("fp_factor_degrees: polynomial must be monic");
    FpFactorDegrees out;
    // squarefree test in the residue field; f' = 0 (p-th power) is never squarefree here
    FpPoly d = f.derivative();
    if (d.is_zero() || fp_gcd(f, d).degree() > 0) {
        out.squarefree = false;
        return out;
    }
    out.squarefree = true;
    // distinct-degree factorization
    FpPoly rest = f;
    FpPoly h = FpPoly::make(f.p, {0, 1});  // x
    const FpPoly x = h;
    for (long k = 1; 2 * k <= rest.degree(); ++k) {
        h = fp_powmod(h, f.p, rest);  // h = x^(p^k) mod rest
        FpPoly g = fp_gcd(rest, fp_sub(h, x));
        if (g.degree() > 0) {
            for (long i = 0; i < g.degree() / k; ++i) out.degrees.insert(k);
            auto [quot, rem] = fp_divrem(rest, g);
            if (!rem.is_zero()) throw InternalError("fp_factor_degrees: gcd does not divide");
            rest = quot;
            if (rest.degree() < 1) break;
            h = fp_rem(h, rest);
        }
    }
    if (rest.degree() > 0) out.degrees.insert(rest.degree());
    return out;
}

std::vector<uint64_t> fp_roots(const FpPoly& f) {
    if (f.is_zero()) throw ContractError("fp_roots: zero polynomial");
    if (f.p > (uint64_t(1) << 22))
        throw ResourceError("fp_root_scan", 1 << 22, "root scan only implemented for small p");
    std::vector<uint64_t> roots;
    for (uint64_t r = 0; r < f.p; ++r)
        if (f.evaluate(r) == 0) roots.push_back(r);
    return roots;
}

bool fp_is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) return false;
    FpFactorDegrees d = fp_factor_degrees(f.monic());
    return d.squarefree && d.degrees.size() == 1 && *d.degrees.begin() == f.degree();
}

}  // namespace dynprop
