#include "dynprop/report.hpp"

#include <sstream>

namespace dynprop::report {

namespace {

json rational_json(const Rational& r) { return to_string(r); }
json integer_json(const Integer& n) { return n.get_str(); }

json rational_list_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rational_json(r));
    return a;
}

}  // namespace

json poly_json(const UniPoly& f) {
    return json{{"degree", f.degree()},
                {"expression", f.to_expression()},
                {"coefficients", f.coeff_strings()}};
}

json orbit_json(const PeriodicOrbit& orbit) {
    return json{{"period", orbit.exact_period}, {"points", rational_list_json(orbit.points)}};
}

json bound_certificate_json(const PeriodBoundCertificate& cert) {
    auto witness = [](const GoodReductionWitness& w) {
        return json{{"prime", integer_json(w.prime)},
                    {"coefficient_valuations", w.coeff_valuations},
                    {"leading_is_unit", w.leading_is_unit},
                    {"good", w.good}};
    };
    return json{{"primes", json::array({integer_json(cert.p), integer_json(cert.q)})},
                {"inertia", json::array({cert.inertia_p, cert.inertia_q})},
                {"bound", integer_json(cert.bound)},
                {"good_reduction_witnesses", json::array({witness(cert.witness_p), witness(cert.witness_q)})}};
}

json certified_orbits_json(const CertifiedOrbits& res) {
    json j = bound_certificate_json(res.certificate);
    j["complete"] = res.complete;
    json orbits = json::array();
    for (const auto& o : res.orbits) orbits.push_back(orbit_json(o));
    j["orbits"] = std::move(orbits);
    j["omitted_periods"] = res.omitted_periods;
    return j;
}

json preimage_tree_json(const PreimageTree& tree) {
    json nodes = json::array();
    for (const auto& n : tree.nodes)
        nodes.push_back(json{{"value", rational_json(n.value)},
                             {"depth", n.depth},
                             {"parent", n.parent},
                             {"children", n.children}});
    return json{{"root", rational_json(tree.root)},
                {"depth_limit", tree.depth_limit},
                {"nodes", std::move(nodes)},
                {"nodes_per_depth", tree.nodes_per_depth},
                {"terminated", tree.terminated},
                {"first_empty_depth", tree.first_empty_depth}};
}

json factorization_json(const PrimeFactorization& f) {
    json factors = json::object();
    for (const auto& [p, e] : f.factors) factors[p.get_str()] = integer_json(e);
    return json{{"sign", f.sign}, {"factors", std::move(factors)}};
}

json height_json(const HeightValue& h, const Config& cfg) {
    json terms = json::object();
    for (const auto& [p, q] : h.terms()) terms[p.get_str()] = rational_json(q);
    auto [lo, hi] = h.decimal_interval(cfg);
    return json{{"terms", std::move(terms)}, {"decimal_lower", lo}, {"decimal_upper", hi}};
}

json ramification_json(const RamificationCertificate& cert) {
    json entries = json::array();
    for (const auto& e : cert.entries)
        entries.push_back(json{{"prime", integer_json(e.prime)},
                               {"ramification_index", integer_json(e.ramification_index)},
                               {"radicand_exponent", integer_json(e.radicand_exponent)},
                               {"divisor_bound", integer_json(e.divisor_bound)},
                               {"exponent_integral", e.exponent_integral},
                               {"divides_bound", e.divides_bound},
                               {"new_prime_coprime", e.new_prime_coprime},
                               {"ok", e.ok}});
    return json{{"level", cert.level},
                {"new_prime", integer_json(cert.new_prime)},
                {"base_case_eisenstein", cert.base_case_eisenstein},
                {"entries", std::move(entries)},
                {"valid", cert.valid}};
}

json tower_level_json(const TowerLevel& level, const Config& cfg) {
    json alpha = json::object();
    for (const auto& [p, e] : level.alpha.exponents) alpha[p.get_str()] = rational_json(e);
    json minpoly = json{{"factored", factorization_json(level.minpoly_constant)}};
    if (level.minpoly_constant_expanded)
        minpoly["expanded"] = integer_json(*level.minpoly_constant_expanded);
    return json{{"index", level.index},
                {"prime", integer_json(level.prime)},
                {"alpha", std::move(alpha)},
                {"degree", integer_json(level.degree)},
                {"minpoly_constant", std::move(minpoly)},
                {"eisenstein_prime", integer_json(level.eisenstein_prime)},
                {"ramification", ramification_json(level.ramification)},
                {"height", height_json(level.height, cfg)}};
}

json tower_json(const Tower& tower) {
    json primes = json::array();
    for (const auto& p : tower.primes()) primes.push_back(integer_json(p));
    json levels = json::array();
    for (const auto& l : tower.levels()) levels.push_back(tower_level_json(l, tower.config()));
    return json{{"primes", std::move(primes)}, {"depth", tower.depth()}, {"levels", std::move(levels)}};
}

json inertia_record_json(const InertiaRecord& rec) {
    return json{{"prime", integer_json(rec.prime)},
                {"prime_index", rec.prime_index},
                {"computed_at_level", rec.computed_at_level},
                {"degrees", std::vector<long>(rec.degrees.begin(), rec.degrees.end())},
                {"frozen_through_level", rec.frozen_through_level}};
}

json inertia_profile_json(const InertiaProfile& prof) {
    return json{{"ramified_or_indistinct", prof.ramified_or_indistinct},
                {"degrees", std::vector<long>(prof.degrees.begin(), prof.degrees.end())}};
}

json p1_witness_json(const P1StepWitness& w) {
    return json{{"level", w.level},
                {"next_prime", integer_json(w.next_prime)},
                {"poly_degree", w.poly_degree},
                {"rational_preimages", rational_list_json(w.rational_preimages)},
                {"leaves_all_levels", w.leaves_all_levels},
                {"conclusion", w.leaves_all_levels
                                   ? "no rational preimage: any preimage would generate an "
                                     "extension of degree between 2 and deg f, below the next "
                                     "prime degree step, so the backward orbit leaves every level"
                                   : "rational preimages stay in the level: descend and recurse"}};
}

json subgroup_json(const SubgroupInfo& sub) {
    json gens = json::array();
    for (const auto& g : sub.generators) gens.push_back(g.to_cycle_string());
    return json{{"order", sub.order}, {"label", sub.label}, {"generators", std::move(gens)}};
}

json group_exponent_json(const PermGroup& g, const Config& cfg) {
    Integer e = g.exponent(cfg);
    long order = g.order(cfg);
    json r{{"exponent", e.get_str()},
           {"group_order", order},
           {"exponent_equals_order", Integer(order) == e}};
    if (Integer(order) != e)
        r["note"] = "the exponent (lcm of element orders) is smaller than the group order";
    return r;
}

json goursat_json(const GoursatReport& rep) {
    json descs = json::array();
    for (const auto& mask : rep.descriptors) {
        json d = json::array();
        for (size_t i = 0; i < mask.size(); ++i)
            d.push_back(mask[i] ? "A" + std::to_string(rep.factors[i]) : "1");
        descs.push_back(std::move(d));
    }
    json j{{"factors", rep.factors},
           {"mode", rep.exhaustive ? "exhaustive" : "structural"},
           {"subproduct_descriptors", std::move(descs)}};
    if (rep.exhaustive) {
        j["normal_subgroup_count"] = rep.normal_subgroup_count;
        j["all_normals_are_subproducts"] = rep.all_normals_are_subproducts;
    }
    return j;
}

json powermap_json(const PowermapReport& rep) {
    return json{{"d", rep.d},
                {"n", rep.n},
                {"modulus", integer_json(rep.modulus)},
                {"unit_group_order", integer_json(rep.unit_group_order)},
                {"unit_group_exponent", integer_json(rep.unit_group_exponent)},
                {"order_of_d", rep.order_of_d},
                {"cyclic_subgroup_exponent", rep.cyclic_subgroup_exponent},
                {"orbit_count", rep.orbit_count},
                {"orbits_all_size_n", rep.orbits_all_size_n},
                {"exponent_at_least_25", rep.exponent_at_least_25}};
}

json orbit_action_json(const OrbitAction& act) {
    json reps = json::array();
    for (const auto& r : act.orbit_representatives) reps.push_back(integer_json(r));
    json j{{"period", act.period},
           {"modulus", integer_json(act.modulus)},
           {"orbit_count", act.orbit_count},
           {"orbit_representatives", std::move(reps)},
           {"stabilizes_all", act.stabilizes_all}};
    if (act.stabilizes_all)
        j["shifts"] = act.shifts;
    else
        j["orbit_permutation"] = act.orbit_permutation;
    return j;
}

json envelope(const std::string& command, json result) {
    return json{{"schema", "dynprop/v1"}, {"command", command}, {"result", std::move(result)}};
}

namespace {

void render_value(std::ostringstream& os, const json& v, int indent) {
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                os << pad << it.key() << ":\n";
                render_value(os, it.value(), indent + 2);
            } else {
                os << pad << it.key() << ": " << (it.value().is_string()
                                                      ? it.value().get<std::string>()
                                                      : it.value().dump())
                   << "\n";
            }
        }
    } else if (v.is_array()) {
        bool scalars = true;
        for (const auto& e : v) scalars = scalars && !e.is_object() && !e.is_array();
        if (scalars) {
            os << pad << "[";
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) os << ", ";
                os << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            }
            os << "]\n";
        } else {
            int i = 0;
            for (const auto& e : v) {
                os << pad << "- [" << i++ << "]\n";
                render_value(os, e, indent + 2);
            }
        }
    } else {
        os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

std::string render_human(const json& rep) {
    std::ostringstream os;
    os << "command: " << rep.at("command").get<std::string>() << "\n";
    render_value(os, rep.at("result"), 0);
    return os.str();
}

}  // namespace dynprop::report
