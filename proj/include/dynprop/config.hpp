#ifndef DYNPROP_CONFIG_HPP
#define DYNPROP_CONFIG_HPP

#include <gmpxx.h>

#include "dynprop/errors.hpp"

namespace dynprop {

// Runtime limits and tunables shared by all modules. Every cap breach raises
// a ResourceError naming the cap, so "complete" results are never assumed.
struct Config {
    int precision_bits = 128;        // working precision for height numerics
    long poly_degree_cap = 4096;     // largest symbolic polynomial degree
    long tree_node_cap = 100000;     // preimage-tree node budget
    long group_order_cap = 1000000;  // largest group enumerated in full
    long mul_schoolbook_threshold = 32;  // below this, schoolbook multiplication
    long display_digit_cap = 10000;  // expand factored integers only below this
    mpz_class factor_cap = mpz_class(1) << 64;  // factor_integer input bound

    void validate() const {
        if (precision_bits < 53) throw ContractError("precision_bits must be at least 53");
        if (poly_degree_cap < 1 || tree_node_cap < 1 || group_order_cap < 1 ||
            mul_schoolbook_threshold < 1 || display_digit_cap < 1 || factor_cap < 2)
            throw ContractError("all caps must be positive");
    }
};

}  // namespace dynprop

#endif
