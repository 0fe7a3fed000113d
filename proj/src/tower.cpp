#include "dynprop/tower.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dynprop/dynamics.hpp"
#include "dynprop/errors.hpp"
#include "dynprop/fp_poly.hpp"

namespace dynprop {

Integer RadicalElement::common_denominator() const {
    Integer d = 1;
    for (const auto& [p, e] : exponents) {
        (void)p;
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_den().get_mpz_t());
    }
    return d;
}

PrimeFactorization RadicalElement::power(const Integer& k) const {
    PrimeFactorization f;
    f.sign = 1;
    for (const auto& [p, e] : exponents) {
        Rational ke = e * Rational(k);
        if (ke.get_den() != 1)
            throw ContractError("RadicalElement::power: exponent " + dynprop::to_string(ke) +
                                " is not integral at k = " + dynprop::to_string(k));
        if (ke != 0) f.factors[p] = Integer(ke.get_num());
    }
    return f;
}

HeightValue RadicalElement::height() const {
    HeightValue h;
    for (const auto& [p, e] : exponents)
        if (e > 0) h = h + HeightValue::log_of_integer_power(p, e);
    return h;
}

std::string RadicalElement::to_string() const {
    if (exponents.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : exponents) {
        if (!first) os << " * ";
        first = false;
        os << p.get_str() << "^(" << dynprop::to_string(e) << ")";
    }
    return os.str();
}

namespace {

RamificationCertificate certify_step(const std::vector<Integer>& primes,
                                     const std::vector<RadicalElement>& alphas, long level,
                                     const Config& cfg) {
    RamificationCertificate cert;
    cert.level = level;
    cert.new_prime = primes[level - 1];

    if (level == 1) {
        // base case: p_1 totally ramified in Q(p_1^(1/p_1)) via Eisenstein
        if (primes[0] <= cfg.poly_degree_cap) {
            std::vector<Rational> c(primes[0].get_ui() + 1, Rational(0));
            c[0] = Rational(Integer(-primes[0]));
            c.back() = 1;
            cert.base_case_eisenstein = is_eisenstein(UniPoly(std::move(c)), primes[0]);
        } else {
            // the polynomial is too large to build; v_(p1)(p1) = 1 is checked
            // on the exponent directly
            cert.base_case_eisenstein = (alphas[0].power(primes[0]).exponent_of(primes[0]) == 1);
        }
        cert.valid = cert.base_case_eisenstein;
        return cert;
    }

    // step K_(level-1) -> K_level: radicand is p_level * alpha_(level-1),
    // an element of K_(level-1)
    const RadicalElement& alpha_prev = alphas[level - 2];  // alpha_(level-1)
    Integer bound = 1;                                     // p_1 ... p_(level-1)
    for (long j = 0; j < level - 1; ++j) bound *= primes[j];

    cert.valid = true;
    for (long i = 1; i <= level; ++i) {
        RamificationEntry entry;
        entry.prime = primes[i - 1];
        // ramification index of the prime(s) above p_i in K_(level-1):
        // p_i ... p_(level-1) for certified lower steps, 1 for the new prime
        entry.ramification_index = 1;
        for (long j = i; j <= level - 1; ++j) entry.ramification_index *= primes[j - 1];

        // exponent of that prime in (p_level * alpha_(level-1)) O_(K_(level-1)),
        // from the exact exponent vector: e_index * (v_(p_i) of the radicand)
        Rational vp(0);
        auto it = alpha_prev.exponents.find(entry.prime);
        if (it != alpha_prev.exponents.end()) vp = it->second;
        if (entry.prime == cert.new_prime) vp += 1;
        Rational exact = vp * Rational(entry.ramification_index);
        entry.exponent_integral = (exact.get_den() == 1);
        entry.radicand_exponent = Integer(exact.get_num());
        entry.divisor_bound = bound;
        entry.divides_bound =
            entry.exponent_integral && entry.radicand_exponent != 0 &&
            mpz_divisible_p(bound.get_mpz_t(), entry.radicand_exponent.get_mpz_t());
        entry.new_prime_coprime =
            !mpz_divisible_p(bound.get_mpz_t(), cert.new_prime.get_mpz_t()) &&
            !mpz_divisible_p(entry.radicand_exponent.get_mpz_t(), cert.new_prime.get_mpz_t());
        entry.ok = entry.exponent_integral && entry.divides_bound && entry.new_prime_coprime;
        cert.valid = cert.valid && entry.ok;
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

}  // namespace

Tower Tower::build(const std::vector<Integer>& primes, long depth, const Config& cfg) {
    if (depth < 1) throw ContractError("build_tower: depth must be >= 1");
    if (static_cast<long>(primes.size()) < depth)
        throw ContractError("build_tower: need at least `depth` primes");
    std::set<Integer> distinct(primes.begin(), primes.end());
    if (static_cast<long>(distinct.size()) != static_cast<long>(primes.size()))
        throw ContractError("build_tower: primes must be pairwise distinct");
    for (const auto& p : primes)
        if (!is_prime(p)) throw ContractError("build_tower: " + to_string(p) + " is not prime");

    Tower t;
    t.primes_ = primes;
    t.cfg_ = cfg;

    std::vector<RadicalElement> alphas;  // alpha_1 .. alpha_depth
    RadicalElement prev;                 // alpha_0 = 1, empty exponent vector
    Integer degree = 1;
    for (long n = 1; n <= depth; ++n) {
        const Integer& pn = primes[n - 1];
        degree *= pn;

        RadicalElement alpha;
        for (const auto& [q, e] : prev.exponents) alpha.exponents[q] = e / Rational(pn);
        Rational& epn = alpha.exponents[pn];
        epn += Rational(1, pn);
        if (epn == 0) alpha.exponents.erase(pn);

        // power identity: alpha_n^(p_1...p_n) = prod p_i^(p_1...p_(i-1)),
        // checked symbolically on the exponent vector
        PrimeFactorization mn = alpha.power(degree);
        Integer expected_exp = 1;
        for (long i = 1; i <= n; ++i) {
            if (mn.exponent_of(primes[i - 1]) != expected_exp)
                throw InternalError("build_tower: power identity fails at level " +
                                    std::to_string(n));
            expected_exp *= primes[i - 1];
        }
        if (static_cast<long>(mn.factors.size()) != n)
            throw InternalError("build_tower: stray primes in the power identity");

        TowerLevel lvl;
        lvl.index = n;
        lvl.prime = pn;
        lvl.alpha = alpha;
        lvl.degree = degree;
        lvl.minpoly_constant = mn;
        if (mn.digits_estimate() <= static_cast<double>(cfg.display_digit_cap))
            lvl.minpoly_constant_expanded = mn.value();
        lvl.eisenstein_prime = primes[0];
        lvl.height = alpha.height();

        alphas.push_back(alpha);
        lvl.ramification = certify_step(primes, alphas, n, cfg);
        if (!lvl.ramification.valid)
            throw InternalError("build_tower: ramification certificate failed at level " +
                                std::to_string(n));

        t.levels_.push_back(std::move(lvl));
        prev = std::move(alpha);
    }
    return t;
}

const TowerLevel& Tower::level(long n) const {
    if (n < 1 || n > depth()) throw ContractError("tower level out of range");
    return levels_[n - 1];
}

bool eisenstein_certificate(const Tower& tower, long level) {
    const TowerLevel& lvl = tower.level(level);
    if (lvl.minpoly_constant.exponent_of(lvl.eisenstein_prime) != 1)
        throw InternalError("eisenstein_certificate: v_(p1)(M_n) != 1");
    // below the symbolic cap, build x^degree - M_n and run the generic check
    if (lvl.degree <= tower.config().poly_degree_cap && lvl.minpoly_constant_expanded) {
        std::vector<Rational> c(lvl.degree.get_ui() + 1, Rational(0));
        c[0] = Rational(Integer(-*lvl.minpoly_constant_expanded));
        c.back() = 1;
        if (!is_eisenstein(UniPoly(std::move(c)), lvl.eisenstein_prime))
            throw InternalError("eisenstein_certificate: explicit polynomial check failed");
    }
    return true;
}

RamificationCertificate verify_total_ramification(const Tower& tower, long level) {
    if (level < 1 || level > tower.depth())
        throw ContractError("verify_total_ramification: level out of range");
    std::vector<RadicalElement> alphas;
    for (const auto& lvl : tower.levels()) alphas.push_back(lvl.alpha);
    RamificationCertificate cert = certify_step(tower.primes(), alphas, level, tower.config());
    if (!cert.valid) {
        // surface the first failing prime index per the contract
        for (size_t i = 0; i < cert.entries.size(); ++i)
            if (!cert.entries[i].ok)
                throw InternalError("total ramification fails at prime index " +
                                    std::to_string(i + 1) + " of level " + std::to_string(level));
    }
    return cert;
}

std::vector<HeightValue> tower_heights(const Tower& tower) {
    std::vector<HeightValue> hs;
    hs.reserve(tower.depth());
    for (const auto& lvl : tower.levels()) hs.push_back(lvl.height);
    // recurrence p_(n+1) h(alpha_(n+1)) - h(alpha_n) = log p_(n+1), exactly
    for (long n = 0; n + 1 < tower.depth(); ++n) {
        const Integer& pnext = tower.primes()[n + 1];
        HeightValue lhs = hs[n + 1].scaled(Rational(pnext)) - hs[n];
        if (!(lhs == HeightValue::log_of_integer_power(pnext, Rational(1))))
            throw InternalError("tower_heights: recurrence fails after level " +
                                std::to_string(n + 1));
    }
    // base case h(alpha_1) = (1/p_1) log p_1 and the h < 1 invariant
    if (!hs.empty()) {
        const Integer& p1 = tower.primes()[0];
        if (!(hs[0] == HeightValue::log_of_integer_power(p1, Rational(1, p1))))
            throw InternalError("tower_heights: base height is not (1/p1) log p1");
    }
    for (long n = 0; n < tower.depth(); ++n)
        if (!hs[n].less_than(Rational(1), tower.config()))
            throw InternalError("tower_heights: h(alpha_n) >= 1 at level " + std::to_string(n + 1));
    return hs;
}

std::pair<long, HeightValue> first_height_level_below(const Rational& eps, long max_level,
                                                      const Config& cfg) {
    if (eps <= 0) throw ContractError("first_height_level_below: eps must be positive");
    // heights follow the recurrence; track the exact term map level by level
    HeightValue h;
    Integer p(1);
    for (long n = 1; n <= max_level; ++n) {
        p = next_prime_after(p);
        h = (h + HeightValue::log_of_integer_power(p, Rational(1))).scaled(Rational(1, p));
        if (h.less_than(eps, cfg)) return {n, h};
    }
    throw ResourceError("height_level_budget", max_level,
                        "height did not drop below " + to_string(eps));
}

InertiaRecord tower_inertia_track(const Tower& tower, const Integer& prime, long level) {
    long index = 0;
    for (size_t i = 0; i < tower.primes().size(); ++i)
        if (tower.primes()[i] == prime) index = static_cast<long>(i) + 1;
    if (index == 0)
        throw ContractError("tower_inertia_track: " + to_string(prime) + " is not a tower prime");
    if (level != index - 1)
        throw ContractError("tower_inertia_track: inertia of p_" + std::to_string(index) +
                            " freezes at level " + std::to_string(index - 1) +
                            "; query exactly that level");

    InertiaRecord rec;
    rec.prime = prime;
    rec.prime_index = index;
    rec.computed_at_level = level;
    rec.frozen_through_level = tower.depth();

    if (level == 0) {
        rec.degrees = {1};  // base field Q
        return rec;
    }

    const TowerLevel& lvl = tower.level(level);
    if (lvl.degree > tower.config().poly_degree_cap)
        throw ResourceError("poly_degree_cap", tower.config().poly_degree_cap,
                            "level minimal polynomial too large to reduce");

    // x^degree - M_level mod prime, with M reduced by powering the factored form
    uint64_t pp = prime.get_ui();
    Integer m_mod(0);
    {
        Integer acc(1);
        for (const auto& [q, e] : lvl.minpoly_constant.factors) {
            Integer t;
            mpz_powm(t.get_mpz_t(), q.get_mpz_t(), e.get_mpz_t(), prime.get_mpz_t());
            acc = (acc * t) % prime;
        }
        m_mod = acc;
    }
    std::vector<uint64_t> c(lvl.degree.get_ui() + 1, 0);
    c[0] = (pp - m_mod.get_ui() % pp) % pp;
    c.back() = 1;
    FpFactorDegrees d = fp_factor_degrees(FpPoly::make(pp, std::move(c)));
    if (!d.squarefree)
        throw ContractError("tower_inertia_track: ramified or indistinct at p = " +
                            to_string(prime) + "; the prime ramifies at this level");
    rec.degrees = d.degrees;

    // constancy up the tower: every higher step certificate must be valid
    for (long n = level + 1; n <= tower.depth(); ++n)
        if (!tower.level(n).ramification.valid)
            throw InternalError("tower_inertia_track: missing ramification certificate");
    return rec;
}

PeriodBoundCertificate tower_p2_bound(const Tower& tower, const UniPoly& f) {
    if (f.degree() < 2) throw ContractError("tower_p2_bound: deg f must be >= 2");
    struct Tracked {
        Integer prime;
        long min_inertia;
    };
    std::vector<Tracked> good;
    for (size_t i = 0; i < tower.primes().size() && good.size() < 2; ++i) {
        if (static_cast<long>(i) > tower.depth()) break;  // freeze level must be certified
        const Integer& p = tower.primes()[i];
        if (!has_good_reduction(f, p)) continue;
        InertiaRecord rec = tower_inertia_track(tower, p, static_cast<long>(i));
        long min_f = *std::min_element(rec.degrees.begin(), rec.degrees.end());
        good.push_back({p, min_f});
    }
    if (good.size() < 2)
        throw ContractError(
            "tower_p2_bound: fewer than two tracked primes of good reduction; "
            "build a deeper or wider tower");
    PeriodBoundCertificate cert;
    cert.p = good[0].prime;
    cert.q = good[1].prime;
    cert.inertia_p = good[0].min_inertia;
    cert.inertia_q = good[1].min_inertia;
    cert.witness_p = good_reduction_witness(f, cert.p);
    cert.witness_q = good_reduction_witness(f, cert.q);
    cert.bound = cert.recompute_bound();
    return cert;
}

P1StepWitness p1_step_witness(const Tower& tower, long level, const UniPoly& f,
                              const Rational& beta) {
    if (f.degree() < 2) throw ContractError("p1_step_witness: deg f must be >= 2");
    if (level < 0 || level >= static_cast<long>(tower.primes().size()))
        throw ContractError("p1_step_witness: no tower prime after this level");
    P1StepWitness w;
    w.level = level;
    w.next_prime = tower.primes()[level];
    w.poly_degree = f.degree();
    if (w.next_prime <= f.degree())
        throw ContractError("p1_step_witness: requires p_(level+1) > deg f; got " +
                            to_string(w.next_prime) + " <= " + std::to_string(f.degree()));
    w.rational_preimages = preimages(f, beta);
    w.leaves_all_levels = w.rational_preimages.empty();
    return w;
}

}  // namespace dynprop
