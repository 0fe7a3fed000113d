#include "dynprop/height.hpp"

#include <mpfr.h>

#include <cmath>

#include "dynprop/errors.hpp"

namespace dynprop {

namespace {

// one directed-rounding bound for sum q log p
void eval_directed(const std::map<Integer, Rational>& terms, mpfr_t out, mpfr_prec_t prec,
                   bool lower) {
    mpfr_set_prec(out, prec);
    mpfr_set_zero(out, 1);
    mpfr_t lg;
    mpfr_init2(lg, prec);
    const mpfr_rnd_t dir = lower ? MPFR_RNDD : MPFR_RNDU;
    const mpfr_rnd_t anti = lower ? MPFR_RNDU : MPFR_RNDD;
    mpfr_t parg;
    mpfr_init2(parg, prec);
    for (const auto& [p, q] : terms) {
        if (q == 0) continue;
        // log p > 0 for p >= 2: round the log toward `dir` when q > 0,
        // away from it when q < 0, so the product moves toward `dir`
        mpfr_set_z(parg, p.get_mpz_t(), MPFR_RNDD);  // exact for our sizes
        mpfr_log(lg, parg, (q > 0) ? dir : anti);
        mpfr_mul_q(lg, lg, q.get_mpq_t(), dir);
        mpfr_add(out, out, lg, dir);
    }
    mpfr_clear(lg);
    mpfr_clear(parg);
}

constexpr mpfr_prec_t kPrecisionCeiling = mpfr_prec_t(1) << 22;

}  // namespace

HeightValue HeightValue::log_of_integer_power(const Integer& p, const Rational& coeff) {
    if (p < 2) throw ContractError("HeightValue: base must be at least 2");
    HeightValue h;
    h.insert_term(p, coeff);
    return h;
}

void HeightValue::insert_term(const Integer& p, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(p, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool HeightValue::nonnegative_coefficients() const {
    for (const auto& [p, q] : terms_) {
        (void)p;
        if (q < 0) return false;
    }
    return true;
}

HeightValue HeightValue::operator+(const HeightValue& rhs) const {
    HeightValue out = *this;
    for (const auto& [p, q] : rhs.terms_) out.insert_term(p, q);
    return out;
}

HeightValue HeightValue::operator-(const HeightValue& rhs) const {
    HeightValue out = *this;
    for (const auto& [p, q] : rhs.terms_) out.insert_term(p, Rational(-q));
    return out;
}

HeightValue HeightValue::scaled(const Rational& a) const {
    HeightValue out;
    if (a == 0) return out;
    for (const auto& [p, q] : terms_) out.terms_[p] = q * a;
    return out;
}

int HeightValue::compare(const HeightValue& rhs, const Config& cfg) const {
    if (terms_ == rhs.terms_) return 0;
    return (*this - rhs).compare_rational(Rational(0), cfg);
}

int HeightValue::compare_rational(const Rational& tau, const Config& cfg) const {
    if (terms_.empty()) return cmp(Rational(0), tau);
    // nonequal by transcendence of e^tau for rational tau != 0 and by unique
    // factorization for tau = 0, so interval refinement separates
    mpfr_t lo, hi, t;
    mpfr_init2(lo, cfg.precision_bits);
    mpfr_init2(hi, cfg.precision_bits);
    mpfr_init2(t, cfg.precision_bits);
    int result = 0;
    bool decided = false;
    for (mpfr_prec_t prec = cfg.precision_bits; prec <= kPrecisionCeiling; prec *= 2) {
        eval_directed(terms_, lo, prec, true);
        eval_directed(terms_, hi, prec, false);
        if (mpfr_cmp_q(lo, tau.get_mpq_t()) > 0) {
            result = 1;
            decided = true;
            break;
        }
        if (mpfr_cmp_q(hi, tau.get_mpq_t()) < 0) {
            result = -1;
            decided = true;
            break;
        }
    }
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(t);
    if (!decided)
        throw ResourceError("height_precision", kPrecisionCeiling,
                            "interval refinement did not separate");
    return result;
}

std::pair<std::string, std::string> HeightValue::decimal_interval(const Config& cfg) const {
    mpfr_t v;
    mpfr_init2(v, cfg.precision_bits);
    char buf[128];
    eval_directed(terms_, v, cfg.precision_bits, true);
    mpfr_snprintf(buf, sizeof buf, "%.20RDf", v);
    std::string lo(buf);
    eval_directed(terms_, v, cfg.precision_bits, false);
    mpfr_snprintf(buf, sizeof buf, "%.20RUf", v);
    std::string hi(buf);
    mpfr_clear(v);
    return {lo, hi};
}

double HeightValue::approx() const {
    double s = 0;
    for (const auto& [p, q] : terms_) s += q.get_d() * std::log(p.get_d());
    return s;
}

}  // namespace dynprop
