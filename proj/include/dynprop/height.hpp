#ifndef DYNPROP_HEIGHT_HPP
#define DYNPROP_HEIGHT_HPP

#include <map>
#include <string>
#include <utility>

#include "dynprop/config.hpp"
#include "dynprop/rational.hpp"

namespace dynprop {

// A formal rational combination sum q_p * log p over primes, kept exact so
// height identities are checked term by term rather than in floating point.
// Numeric questions are decided by directed-rounding interval evaluation at
// increasing precision; separation always terminates because distinct term
// maps denote distinct reals (unique factorization), and a nonzero
// combination never equals a nonzero rational.
class HeightValue {
public:
    HeightValue() = default;

    static HeightValue log_of_integer_power(const Integer& p, const Rational& coeff);

    const std::map<Integer, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // heights proper have nonnegative coefficients; differences built via
    // operator- may not, and only support comparison against rationals
    bool nonnegative_coefficients() const;

    HeightValue operator+(const HeightValue& rhs) const;
    HeightValue operator-(const HeightValue& rhs) const;
    HeightValue scaled(const Rational& a) const;
    bool operator==(const HeightValue& rhs) const { return terms_ == rhs.terms_; }

    // exact order decisions
    int compare(const HeightValue& rhs, const Config& cfg = {}) const;  // -1 / 0 / +1
    int compare_rational(const Rational& tau, const Config& cfg = {}) const;
    bool less_than(const Rational& tau, const Config& cfg = {}) const {
        return compare_rational(tau, cfg) < 0;
    }

    // directed-rounding enclosure rendered in decimal; first < value < second
    std::pair<std::string, std::string> decimal_interval(const Config& cfg = {}) const;
    double approx() const;  // display only, never decides anything

private:
    void insert_term(const Integer& p, const Rational& coeff);
    std::map<Integer, Rational> terms_;
};

}  // namespace dynprop

#endif
