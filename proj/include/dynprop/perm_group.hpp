#ifndef DYNPROP_PERM_GROUP_HPP
#define DYNPROP_PERM_GROUP_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynprop/config.hpp"
#include "dynprop/perm.hpp"
#include "dynprop/rational.hpp"

namespace dynprop {

// A subgroup reported by the normal-subgroup search: its sorted element
// indices into the parent enumeration, a small generating set, and a label
// when the subgroup is recognized (trivial, A_n, S_n, V_4, ...).
struct SubgroupInfo {
    std::vector<int> element_indices;
    std::vector<Perm> generators;
    long order = 0;
    std::string label;
};

// Finite permutation group given by generators, enumerated on demand under
// the group-order cap.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> generators);

    static PermGroup symmetric(int n);
    static PermGroup alternating(int n);
    static PermGroup cyclic(int n);
    static PermGroup direct_product(const std::vector<PermGroup>& factors);
    // named constructions "S5", "A6", "C12"
    static PermGroup from_name(const std::string& name);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

    const std::vector<Perm>& elements(const Config& cfg = {}) const;
    long order(const Config& cfg = {}) const { return static_cast<long>(elements(cfg).size()); }
    int element_index(const Perm& p, const Config& cfg = {}) const;  // -1 if absent

    // lcm of element orders
    Integer exponent(const Config& cfg = {}) const;

    // conjugacy classes as element-index lists, identity's class first
    std::vector<std::vector<int>> conjugacy_classes(const Config& cfg = {}) const;

    // All normal subgroups via conjugacy-class unions: normal closures of
    // single classes, closed under join. Sorted by order.
    std::vector<SubgroupInfo> normal_subgroups(const Config& cfg = {}) const;

private:
    std::vector<int> closure_of(std::vector<int> generator_indices, const Config& cfg) const;
    std::string recognize(const std::vector<int>& element_indices, const Config& cfg) const;

    int degree_;
    std::vector<Perm> gens_;
    mutable std::vector<Perm> elements_;
    mutable std::unordered_map<std::string, int> index_;  // image-table key -> index
};

// Normal subgroups of A_(n1) x ... x A_(nr) confirmed to be exactly the 2^r
// sub-products. Exhaustive under the cap, otherwise structural (each factor
// verified simple, product classification applied).
struct GoursatReport {
    std::vector<long> factors;
    bool exhaustive = false;
    long normal_subgroup_count = 0;                // exhaustive mode
    bool all_normals_are_subproducts = false;      // exhaustive mode
    std::vector<std::vector<bool>> descriptors;    // 2^r factor masks
};
GoursatReport goursat_normals_of_alternating_product(const std::vector<long>& ns,
                                                     const Config& cfg = {});

}  // namespace dynprop

#endif
