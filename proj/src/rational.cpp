#include "dynprop/rational.hpp"

#include <cctype>

#include "dynprop/errors.hpp"

namespace dynprop {

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    // 40 Miller-Rabin rounds on top of GMP's BPSW-style test.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Integer next_prime_after(const Integer& n) {
    Integer p;
    mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
    return p;
}

std::optional<long> padic_valuation(const Integer& n, const Integer& p) {
    if (!is_prime(p)) throw ContractError("padic_valuation: p = " + to_string(p) + " is not prime");
    if (n == 0) return std::nullopt;
    Integer m = n;
    return static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> padic_valuation(const Rational& r, const Integer& p) {
    if (!is_prime(p)) throw ContractError("padic_valuation: p = " + to_string(p) + " is not prime");
    if (r == 0) return std::nullopt;
    Integer num = r.get_num(), den = r.get_den();
    long v = 0;
    if (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t()))
        v = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    else if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
        v = -static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    return v;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ContractError("parse_rational: empty input");
    auto slash = s.find('/');
    Integer num, den;
    try {
        if (slash == std::string::npos) {
            num = Integer(s);
            den = 1;
        } else {
            num = Integer(s.substr(0, slash));
            den = Integer(s.substr(slash + 1));
        }
    } catch (const std::invalid_argument&) {
        throw ContractError("parse_rational: malformed rational '" + text + "'");
    }
    if (den == 0) throw ContractError("parse_rational: zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace dynprop
