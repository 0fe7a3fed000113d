#ifndef DYNPROP_UNIPOLY_HPP
#define DYNPROP_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "dynprop/config.hpp"
#include "dynprop/rational.hpp"

namespace dynprop {

// Dense univariate polynomial over Q, coefficients ascending. The zero
// polynomial is the empty coefficient list (degree -1). All arithmetic is
// exact; division with a nonzero remainder is reported, never truncated.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& a);
    static UniPoly x();
    // c0 + c1*x + ... from any list of ints/rationals
    static UniPoly from_coeffs(std::initializer_list<long> coeffs);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    // coefficient of x^i, zero beyond the degree
    const Rational& coeff(long i) const;
    const Rational& leading() const;
    const Rational& constant_term() const;

    bool is_integer() const;  // all coefficients integral
    bool is_monic() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    bool operator==(const UniPoly& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const UniPoly& rhs) const { return c_ != rhs.c_; }

    UniPoly scaled(const Rational& a) const;
    UniPoly derivative() const;

    Rational evaluate(const Rational& x) const;

    // f(g): expand the composition.
    UniPoly compose(const UniPoly& g) const;

    // Quotient and remainder with deg r < deg divisor. Zero divisor rejected.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& num, const UniPoly& den);
    // Division known to be exact by construction; a nonzero remainder is an
    // internal-consistency error, not bad input.
    static UniPoly exact_div(const UniPoly& num, const UniPoly& den);

    // lowest-terms integer model: primitive integer coefficients C and
    // positive scale (n, d) with poly = (n/d) * C, content(C) = 1.
    struct IntegerModel {
        std::vector<Integer> coeffs;
        Integer num_scale;
        Integer den_scale;
    };
    IntegerModel integer_model() const;

    std::string to_expression() const;             // "x^2 - 1/2" style
    std::vector<std::string> coeff_strings() const;  // ascending "a/b" list

private:
    void normalize();
    std::vector<Rational> c_;
};

// Multiplication with an explicit schoolbook threshold; above it the product
// is computed by Kronecker substitution through one big-integer multiply.
UniPoly mul(const UniPoly& a, const UniPoly& b, long schoolbook_threshold);

// Eisenstein criterion at p for a monic integer polynomial of degree >= 1:
// p divides every non-leading coefficient and p^2 does not divide the
// constant term. Non-integer or non-monic input is rejected.
bool is_eisenstein(const UniPoly& f, const Integer& p);

}  // namespace dynprop

#endif
