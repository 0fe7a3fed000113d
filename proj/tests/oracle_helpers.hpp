#ifndef DYNPROP_TESTS_ORACLE_HELPERS_HPP
#define DYNPROP_TESTS_ORACLE_HELPERS_HPP

#include <set>
#include <vector>

#include "dynprop/unipoly.hpp"

namespace dynprop::testing {

// Brute-force periodic-point oracle for integer-coefficient f of degree >= 2:
// scan every lowest-terms rational num/den in the box and test
// f^k(x) = x for k <= max_period by exact iteration.
//
// The only shortcut is an exact escape-radius abort: with H = max |c_i| and
// L the leading coefficient, |y| >= 1 and |L||y| - H*d >= 2 force
// |f(y)| >= 2|y|, so once an iterate passes
// escape_abs = max((H*d + 2)/|L|, box + 1) the orbit grows in absolute value
// forever and can never return to the box.
inline std::set<Rational> box_periodic_points(const UniPoly& f, long box, long max_period) {
    if (!f.is_integer()) throw ContractError("box oracle expects integer coefficients");
    const long d = f.degree();
    Integer lead = abs(f.leading().get_num());
    Integer H = 0;
    for (long i = 0; i <= d; ++i) H = std::max(H, Integer(abs(f.coeff(i).get_num())));
    Rational escape_abs = std::max(Rational(H * d + 2, lead), Rational(box + 1));

    std::set<Rational> found;
    for (long den = 1; den <= box; ++den) {
        for (long num = -box; num <= box; ++num) {
            if (gcd(Integer(num), Integer(den)) != 1) continue;
            Rational x(num, den);
            Rational y = x;
            for (long k = 1; k <= max_period; ++k) {
                y = f.evaluate(y);
                if (y == x) {
                    found.insert(x);
                    break;
                }
                if (abs(y) > escape_abs) break;
            }
        }
    }
    return found;
}

}  // namespace dynprop::testing

#endif
