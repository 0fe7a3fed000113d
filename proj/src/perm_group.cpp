#include "dynprop/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dynprop/errors.hpp"

namespace dynprop {

namespace {

std::string image_key(const Perm& p) {
    std::string k;
    k.reserve(p.degree());
    for (int v : p.images()) k += static_cast<char>(v);
    return k;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> generators) : degree_(degree) {
    if (degree < 1 || degree > 127) throw ContractError("PermGroup: degree must be in 1..127");
    for (const auto& g : generators) {
        if (g.degree() != degree) throw ContractError("PermGroup: generator degree mismatch");
        if (!g.is_identity()) gens_.push_back(g);
    }
    if (gens_.empty()) gens_.push_back(Perm(degree));
}

PermGroup PermGroup::symmetric(int n) {
    if (n < 1) throw ContractError("symmetric: n must be >= 1");
    std::vector<Perm> gens;
    if (n >= 2) gens.push_back(Perm::parse_cycles("(1 2)", n));
    if (n >= 3) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
        gens.push_back(Perm::from_images(img));
    }
    return PermGroup(n, gens);
}

PermGroup PermGroup::alternating(int n) {
    if (n < 3) return PermGroup(std::max(n, 1), {});
    std::vector<Perm> gens;
    for (int i = 1; i + 2 <= n; ++i)
        gens.push_back(Perm::parse_cycles("(" + std::to_string(i) + " " + std::to_string(i + 1) +
                                              " " + std::to_string(i + 2) + ")",
                                          n));
    return PermGroup(n, gens);
}

PermGroup PermGroup::cyclic(int n) {
    if (n < 1) throw ContractError("cyclic: n must be >= 1");
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return PermGroup(n, {Perm::from_images(img)});
}

PermGroup PermGroup::direct_product(const std::vector<PermGroup>& factors) {
    if (factors.empty()) throw ContractError("direct_product: need at least one factor");
    int degree = 0;
    for (const auto& f : factors) degree += f.degree();
    std::vector<Perm> gens;
    int offset = 0;
    for (const auto& f : factors) {
        for (const auto& g : f.generators()) {
            std::vector<int> img(degree);
            std::iota(img.begin(), img.end(), 0);
            for (int i = 0; i < f.degree(); ++i) img[offset + i] = offset + g.apply(i);
            gens.push_back(Perm::from_images(img));
        }
        offset += f.degree();
    }
    return PermGroup(degree, gens);
}

PermGroup PermGroup::from_name(const std::string& name) {
    if (name.size() < 2) throw ContractError("group name must look like S5, A6, or C12");
    char kind = name[0];
    int n;
    try {
        n = std::stoi(name.substr(1));
    } catch (const std::exception&) {
        throw ContractError("group name must look like S5, A6, or C12; got " + name);
    }
    switch (kind) {
        case 'S':
        case 's':
            return symmetric(n);
        case 'A':
        case 'a':
            return alternating(n);
        case 'C':
        case 'c':
            return cyclic(n);
        default:
            throw ContractError("unknown group family '" + std::string(1, kind) + "' in " + name);
    }
}

const std::vector<Perm>& PermGroup::elements(const Config& cfg) const {
    if (!elements_.empty()) return elements_;
    std::vector<Perm> elems{Perm(degree_)};
    index_.clear();
    index_[image_key(elems[0])] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
        Perm cur = elems[head];
        for (const auto& g : gens_) {
            Perm nxt = cur.compose(g);
            std::string key = image_key(nxt);
            if (index_.contains(key)) continue;
            if (static_cast<long>(elems.size()) >= cfg.group_order_cap)
                throw ResourceError("group_order_cap", cfg.group_order_cap,
                                    "group enumeration exceeded the cap");
            index_[key] = static_cast<int>(elems.size());
            elems.push_back(std::move(nxt));
        }
    }
    elements_ = std::move(elems);
    return elements_;
}

int PermGroup::element_index(const Perm& p, const Config& cfg) const {
    elements(cfg);
    auto it = index_.find(image_key(p));
    return it == index_.end() ? -1 : it->second;
}

Integer PermGroup::exponent(const Config& cfg) const {
    Integer e = 1;
    for (const auto& p : elements(cfg)) mpz_lcm_ui(e.get_mpz_t(), e.get_mpz_t(), p.order());
    return e;
}

std::vector<std::vector<int>> PermGroup::conjugacy_classes(const Config& cfg) const {
    const auto& elems = elements(cfg);
    std::vector<int> class_of(elems.size(), -1);
    std::vector<std::vector<int>> classes;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (class_of[i] >= 0) continue;
        int id = static_cast<int>(classes.size());
        std::vector<int> orbit{static_cast<int>(i)};
        class_of[i] = id;
        for (size_t head = 0; head < orbit.size(); ++head) {
            const Perm& x = elems[orbit[head]];
            for (const auto& g : gens_) {
                int j = element_index(x.conjugated_by(g), cfg);
                if (class_of[j] < 0) {
                    class_of[j] = id;
                    orbit.push_back(j);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    // identity's class first, then by size
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if ((a[0] == 0) != (b[0] == 0)) return a[0] == 0;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return classes;
}

// subgroup generated by the given elements, as sorted element indices
std::vector<int> PermGroup::closure_of(std::vector<int> generator_indices, const Config& cfg) const {
    const auto& elems = elements(cfg);
    std::vector<char> inside(elems.size(), 0);
    std::vector<int> members{0};
    inside[0] = 1;
    for (int gi : generator_indices) {
        if (!inside[gi]) {
            inside[gi] = 1;
            members.push_back(gi);
        }
    }
    for (size_t head = 0; head < members.size(); ++head) {
        const Perm& x = elems[members[head]];
        for (int gi : generator_indices) {
            int j = element_index(x.compose(elems[gi]), cfg);
            if (!inside[j]) {
                inside[j] = 1;
                members.push_back(j);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::string PermGroup::recognize(const std::vector<int>& idx, const Config& cfg) const {
    const auto& elems = elements(cfg);
    long n = static_cast<long>(idx.size());
    if (n == 1) return "1";
    if (n == static_cast<long>(elems.size())) return "G";
    // Klein four inside S4, alternating subgroups: recognize by order and
    // evenness on the moved points
    bool all_even = true;
    for (int i : idx) {
        long transpositions = 0;
        for (const auto& cyc : elems[i].cycles()) transpositions += cyc.size() - 1;
        if (transpositions % 2) all_even = false;
    }
    long fact = 1;
    for (long k = 2; k <= degree_; ++k) {
        fact *= k;
        if (fact / 2 == n && all_even) return "A" + std::to_string(k);
        if (fact == n && !all_even) return "S" + std::to_string(k) + "-like";
    }
    if (n == 4 && all_even) return "V4";
    return "order " + std::to_string(n);
}

std::vector<SubgroupInfo> PermGroup::normal_subgroups(const Config& cfg) const {
    const auto& elems = elements(cfg);
    auto classes = conjugacy_classes(cfg);

    // normal closure of each conjugacy class: generate from one class
    // representative, alternately closing under multiplication and
    // conjugation by the group generators
    auto normal_closure = [&](int rep) {
        std::vector<int> gens_idx{rep};
        std::vector<int> members;
        for (;;) {
            members = closure_of(gens_idx, cfg);
            std::vector<char> inside(elems.size(), 0);
            for (int i : members) inside[i] = 1;
            bool grew = false;
            size_t current = gens_idx.size();
            for (size_t gi = 0; gi < current && !grew; ++gi) {
                for (const auto& g : gens_) {
                    int c = element_index(elems[gens_idx[gi]].conjugated_by(g), cfg);
                    if (!inside[c]) {
                        gens_idx.push_back(c);
                        grew = true;
                        break;
                    }
                }
            }
            if (!grew) return std::pair{members, gens_idx};
        }
    };

    std::set<std::vector<int>> seen;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> lattice;  // (members, gens)
    auto add = [&](std::pair<std::vector<int>, std::vector<int>> cand) {
        if (seen.insert(cand.first).second) lattice.push_back(std::move(cand));
    };
    add({std::vector<int>{0}, std::vector<int>{}});
    for (const auto& cls : classes) add(normal_closure(cls[0]));

    // join-closure: every normal subgroup is generated by the classes it
    // contains, hence is a join of single-class closures
    for (size_t a = 0; a < lattice.size(); ++a) {
        for (size_t b = a + 1; b < lattice.size(); ++b) {
            std::vector<int> joined = lattice[a].second;
            joined.insert(joined.end(), lattice[b].second.begin(), lattice[b].second.end());
            std::vector<int> members = closure_of(joined, cfg);
            add({std::move(members), std::move(joined)});
        }
    }

    std::vector<SubgroupInfo> out;
    for (auto& [members, gen_idx] : lattice) {
        SubgroupInfo info;
        info.order = static_cast<long>(members.size());
        info.label = recognize(members, cfg);
        for (int gi : gen_idx) info.generators.push_back(elems[gi]);
        info.element_indices = std::move(members);
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const SubgroupInfo& a, const SubgroupInfo& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.element_indices < b.element_indices;
    });
    return out;
}

GoursatReport goursat_normals_of_alternating_product(const std::vector<long>& ns, const Config& cfg) {
    if (ns.empty()) throw ContractError("goursat: need at least one factor");
    for (long n : ns)
        if (n < 5) throw ContractError("goursat: factors must be alternating of degree >= 5");

    GoursatReport report;
    report.factors = ns;

    Integer product = 1;
    for (long n : ns) {
        Integer half_fact = 1;
        for (long k = 3; k <= n; ++k) half_fact *= k;  // n!/2
        product *= half_fact;
    }
    report.exhaustive = product <= cfg.group_order_cap;

    const size_t r = ns.size();
    for (size_t mask = 0; mask < (size_t(1) << r); ++mask) {
        std::vector<bool> desc(r);
        for (size_t i = 0; i < r; ++i) desc[i] = (mask >> i) & 1;
        report.descriptors.push_back(std::move(desc));
    }

    if (report.exhaustive) {
        std::vector<PermGroup> factors;
        std::vector<int> offsets;
        int off = 0;
        for (long n : ns) {
            factors.push_back(PermGroup::alternating(static_cast<int>(n)));
            offsets.push_back(off);
            off += static_cast<int>(n);
        }
        PermGroup g = PermGroup::direct_product(factors);
        auto normals = g.normal_subgroups(cfg);
        report.normal_subgroup_count = static_cast<long>(normals.size());

        // each normal subgroup must be the product of its projections, each
        // projection trivial or the whole factor
        std::set<std::vector<bool>> found_masks;
        report.all_normals_are_subproducts = true;
        const auto& elems = g.elements(cfg);
        for (const auto& sub : normals) {
            Integer proj_product = 1;
            std::vector<bool> mask(r);
            for (size_t i = 0; i < r; ++i) {
                std::set<std::vector<int>> proj;
                for (int ei : sub.element_indices) {
                    std::vector<int> block(ns[i]);
                    for (long j = 0; j < ns[i]; ++j)
                        block[j] = elems[ei].apply(offsets[i] + static_cast<int>(j)) - offsets[i];
                    proj.insert(std::move(block));
                }
                long fsize = factors[i].order(cfg);
                long psize = static_cast<long>(proj.size());
                if (psize != 1 && psize != fsize) report.all_normals_are_subproducts = false;
                mask[i] = psize > 1;
                proj_product *= psize;
            }
            if (proj_product != sub.order) report.all_normals_are_subproducts = false;
            found_masks.insert(mask);
        }
        if (static_cast<long>(found_masks.size()) != report.normal_subgroup_count)
            report.all_normals_are_subproducts = false;
        if (report.normal_subgroup_count != (1L << r)) report.all_normals_are_subproducts = false;
    } else {
        // structural mode: verify each factor is simple, then the
        // classification of normal subgroups of products of nonabelian
        // simple groups gives exactly the sub-products
        for (long n : ns) {
            PermGroup a = PermGroup::alternating(static_cast<int>(n));
            Integer half_fact = 1;
            for (long k = 3; k <= n; ++k) half_fact *= k;
            if (half_fact > cfg.group_order_cap)
                throw ResourceError("group_order_cap", cfg.group_order_cap,
                                    "factor A_" + std::to_string(n) +
                                        " too large to verify simplicity");
            auto normals = a.normal_subgroups(cfg);
            if (normals.size() != 2)
                throw InternalError("goursat: A_" + std::to_string(n) + " is not simple?");
        }
    }
    return report;
}

}  // namespace dynprop
