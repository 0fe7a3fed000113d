#ifndef DYNPROP_REPORT_HPP
#define DYNPROP_REPORT_HPP

#include <json.hpp>

#include "dynprop/dynamics.hpp"
#include "dynprop/factor.hpp"
#include "dynprop/height.hpp"
#include "dynprop/perm_group.hpp"
#include "dynprop/powermap.hpp"
#include "dynprop/reduction.hpp"
#include "dynprop/tower.hpp"

namespace dynprop::report {

using nlohmann::json;

// Rationals serialize as strings "a/b", never floats; heights carry both the
// exact term map and a directed-rounding decimal enclosure.
json poly_json(const UniPoly& f);
json orbit_json(const PeriodicOrbit& orbit);
json bound_certificate_json(const PeriodBoundCertificate& cert);
json certified_orbits_json(const CertifiedOrbits& res);
json preimage_tree_json(const PreimageTree& tree);
json factorization_json(const PrimeFactorization& f);
json height_json(const HeightValue& h, const Config& cfg = {});
json ramification_json(const RamificationCertificate& cert);
json tower_level_json(const TowerLevel& level, const Config& cfg = {});
json tower_json(const Tower& tower);
json inertia_record_json(const InertiaRecord& rec);
json inertia_profile_json(const InertiaProfile& prof);
json p1_witness_json(const P1StepWitness& w);
json subgroup_json(const SubgroupInfo& sub);
json group_exponent_json(const PermGroup& g, const Config& cfg = {});
json goursat_json(const GoursatReport& rep);
json powermap_json(const PowermapReport& rep);
json orbit_action_json(const OrbitAction& act);

json envelope(const std::string& command, json result);

// Text rendering of a report envelope. Derived from the JSON object itself,
// so both output modes agree on every number by construction.
std::string render_human(const json& report);

}  // namespace dynprop::report

#endif
