#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include "dynprop/errors.hpp"
#include "dynprop/poly_parse.hpp"
#include "dynprop/rational_roots.hpp"
#include "dynprop/report.hpp"

using namespace dynprop;
using report::json;

namespace {

std::vector<Integer> parse_integer_list(const std::string& text) {
    std::vector<Integer> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.emplace_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (out.empty()) throw ContractError("expected a comma-separated integer list");
    return out;
}

void apply_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) continue;
        try {
            if (key == "precision_bits") cfg.precision_bits = std::stoi(value);
            else if (key == "poly_degree_cap") cfg.poly_degree_cap = std::stol(value);
            else if (key == "tree_node_cap") cfg.tree_node_cap = std::stol(value);
            else if (key == "group_order_cap") cfg.group_order_cap = std::stol(value);
            else if (key == "mul_schoolbook_threshold") cfg.mul_schoolbook_threshold = std::stol(value);
            else if (key == "display_digit_cap") cfg.display_digit_cap = std::stol(value);
            else throw ContractError("unknown config key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw ContractError("bad value for config key '" + key + "'");
        }
    }
}

json config_json(const Config& cfg) {
    return json{{"precision_bits", cfg.precision_bits},
                {"poly_degree_cap", cfg.poly_degree_cap},
                {"tree_node_cap", cfg.tree_node_cap},
                {"group_order_cap", cfg.group_order_cap}};
}

PermGroup group_from_options(const std::string& name, const std::string& gens, int degree) {
    if (!name.empty()) return PermGroup::from_name(name);
    if (gens.empty()) throw ContractError("provide --group NAME or --gens CYCLES with --degree");
    if (degree < 1) throw ContractError("--gens requires --degree");
    std::vector<Perm> ps;
    std::string cur;
    int open = 0;
    for (char c : gens + ",") {
        if (c == '(') ++open;
        if (c == ')') --open;
        if (c == ',' && open == 0) {
            if (!cur.empty()) ps.push_back(Perm::parse_cycles(cur, degree));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return PermGroup(degree, ps);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "dynprop: exact arithmetic for polynomial dynamics, periodic-point certificates,\n"
        "radical towers with ramification and height certificates, and permutation groups"};
    app.require_subcommand(1);

    Config cfg;
    std::string output = "human", config_file;
    app.add_option("--output", output, "report format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
    auto* opt_prec = app.add_option("--precision-bits", cfg.precision_bits, "height numeric precision");
    auto* opt_pcap = app.add_option("--poly-degree-cap", cfg.poly_degree_cap, "largest symbolic degree");
    auto* opt_tcap = app.add_option("--tree-node-cap", cfg.tree_node_cap, "preimage tree node budget");
    auto* opt_gcap = app.add_option("--group-order-cap", cfg.group_order_cap, "largest enumerated group");
    app.add_option("--config", config_file, "key = value configuration file");

    std::function<json()> run;

    std::string poly_text, beta_text = "0", x0_text = "0", eps_text, root_text = "0";
    std::string primes_text, group_name, gens_text, factors_text, n_text, k_text, prime_text = "2";
    long arg_n = 1, arg_k = 1, arg_depth = 1, arg_nmax = 0, arg_level = 0, arg_d = 2;
    int arg_degree = 0;
    bool verify_flag = false;

    auto* pp = app.add_subcommand("periodic-points",
                                  "complete rational periodic orbits with a period-bound certificate");
    pp->add_option("--poly", poly_text, "polynomial, e.g. \"x^2-1\" or \"[-1,0,1]\"")->required();
    pp->add_option("--nmax", arg_nmax, "scan periods 1..nmax instead of the certified bound");
    pp->callback([&] {
        run = [&]() -> json {
            UniPoly f = parse_poly(poly_text);
            if (arg_nmax > 0) {
                json orbits = json::array();
                for (const auto& o : rational_periodic_points(f, arg_nmax, cfg))
                    orbits.push_back(report::orbit_json(o));
                return report::envelope("periodic-points",
                                        json{{"orbits", orbits}, {"nmax", arg_nmax}});
            }
            return report::envelope(
                "periodic-points",
                report::certified_orbits_json(certified_rational_periodic_points(f, cfg)));
        };
    });

    auto* dyn = app.add_subcommand("dynatomic", "dynatomic polynomial of period n");
    dyn->add_option("--poly", poly_text)->required();
    dyn->add_option("--n", arg_n)->required();
    dyn->callback([&] {
        run = [&]() -> json {
            return report::envelope("dynatomic",
                                    report::poly_json(dynatomic(parse_poly(poly_text), arg_n, cfg)));
        };
    });

    auto* pb = app.add_subcommand("period-bound", "two-prime good-reduction period bound");
    pb->add_option("--poly", poly_text)->required();
    pb->callback([&] {
        run = [&]() -> json {
            return report::envelope(
                "period-bound", report::bound_certificate_json(period_bound(parse_poly(poly_text))));
        };
    });

    auto* pt = app.add_subcommand("preimage-tree", "breadth-first rational preimage tree");
    pt->add_option("--poly", poly_text)->required();
    pt->add_option("--root", root_text)->required();
    pt->add_option("--depth", arg_depth)->required();
    pt->callback([&] {
        run = [&]() -> json {
            return report::envelope(
                "preimage-tree",
                report::preimage_tree_json(preimage_tree(parse_poly(poly_text),
                                                         parse_rational(root_text), arg_depth, cfg)));
        };
    });

    auto* it = app.add_subcommand("iterate", "f^k(x0) by exact evaluation");
    it->add_option("--poly", poly_text)->required();
    it->add_option("--k", arg_k)->required();
    it->add_option("--x0", x0_text)->required();
    it->callback([&] {
        run = [&]() -> json {
            Rational v = iterate(parse_poly(poly_text), arg_k, parse_rational(x0_text));
            return report::envelope("iterate", json{{"value", to_string(v)}});
        };
    });

    auto* ep = app.add_subcommand("exact-period", "least n <= nmax with f^n(x0) = x0");
    ep->add_option("--poly", poly_text)->required();
    ep->add_option("--x0", x0_text)->required();
    ep->add_option("--nmax", arg_nmax)->required();
    ep->callback([&] {
        run = [&]() -> json {
            auto n = exact_period(parse_poly(poly_text), parse_rational(x0_text), arg_nmax);
            json r{{"periodic", n.has_value()}};
            if (n) r["period"] = *n;
            return report::envelope("exact-period", r);
        };
    });

    auto* pre = app.add_subcommand("preimages", "rational solutions of f(x) = beta");
    pre->add_option("--poly", poly_text)->required();
    pre->add_option("--beta", beta_text)->required();
    pre->callback([&] {
        run = [&]() -> json {
            json vals = json::array();
            for (const auto& r : preimages(parse_poly(poly_text), parse_rational(beta_text)))
                vals.push_back(to_string(r));
            return report::envelope("preimages", json{{"values", vals}});
        };
    });

    auto* rr = app.add_subcommand("rational-roots", "all rational roots, exactly");
    rr->add_option("--poly", poly_text)->required();
    rr->callback([&] {
        run = [&]() -> json {
            json vals = json::array();
            for (const auto& r : rational_roots(parse_poly(poly_text), cfg))
                vals.push_back(to_string(r));
            return report::envelope("rational-roots", json{{"values", vals}});
        };
    });

    auto* fa = app.add_subcommand("factor", "certified integer factorization");
    fa->add_option("--n", n_text)->required();
    fa->callback([&] {
        run = [&]() -> json {
            return report::envelope("factor",
                                    report::factorization_json(factor_integer(Integer(n_text), cfg)));
        };
    });

    auto* ip = app.add_subcommand(
        "inertia-profile", "degrees of irreducible factors of a monic minimal polynomial mod p");
    ip->add_option("--poly", poly_text)->required();
    ip->add_option("--p", prime_text)->required();
    ip->callback([&] {
        run = [&]() -> json {
            return report::envelope("inertia-profile",
                                    report::inertia_profile_json(
                                        inertia_profile(parse_poly(poly_text), Integer(prime_text))));
        };
    });

    auto* ch =
        app.add_subcommand("chebyshev", "monic Chebyshev normalized by C_d(z+1/z) = z^d + z^-d");
    ch->add_option("--d", arg_d)->required();
    ch->add_flag("--verify", verify_flag, "check the defining identity exactly");
    ch->callback([&] {
        run = [&]() -> json {
            json r{{"polynomial", report::poly_json(chebyshev(arg_d))}};
            if (verify_flag) r["identity_verified"] = verify_chebyshev_identity(arg_d, cfg);
            return report::envelope("chebyshev", r);
        };
    });

    auto* tower_cmd = app.add_subcommand("tower", "radical tower construction and certificates");
    tower_cmd->require_subcommand(1);
    auto add_tower_opts = [&](CLI::App* sub) {
        sub->add_option("--primes", primes_text, "comma-separated distinct primes")->required();
        sub->add_option("--depth", arg_depth)->required();
    };

    auto* tb = tower_cmd->add_subcommand("build", "build levels with power-identity checks");
    add_tower_opts(tb);
    tb->callback([&] {
        run = [&]() -> json {
            Tower t = Tower::build(parse_integer_list(primes_text), arg_depth, cfg);
            return report::envelope("tower-build", report::tower_json(t));
        };
    });

    auto* tv = tower_cmd->add_subcommand("verify",
                                         "Eisenstein and total-ramification certificates per level");
    add_tower_opts(tv);
    tv->callback([&] {
        run = [&]() -> json {
            Tower t = Tower::build(parse_integer_list(primes_text), arg_depth, cfg);
            json levels = json::array();
            bool all = true;
            for (long n = 1; n <= t.depth(); ++n) {
                RamificationCertificate cert = verify_total_ramification(t, n);
                bool eis = eisenstein_certificate(t, n);
                all = all && cert.valid && eis;
                levels.push_back(json{{"level", n},
                                      {"eisenstein", eis},
                                      {"ramification", report::ramification_json(cert)}});
            }
            return report::envelope("tower-verify", json{{"levels", levels}, {"all_valid", all}});
        };
    });

    auto* th = tower_cmd->add_subcommand("heights", "exact heights with the recurrence verified");
    add_tower_opts(th);
    th->add_option("--eps", eps_text, "also report the first consecutive-prime level below eps");
    th->callback([&] {
        run = [&]() -> json {
            Tower t = Tower::build(parse_integer_list(primes_text), arg_depth, cfg);
            json hs = json::array();
            for (const auto& h : tower_heights(t)) hs.push_back(report::height_json(h, cfg));
            json r{{"heights", hs}};
            if (!eps_text.empty()) {
                auto [lvl, h] = first_height_level_below(parse_rational(eps_text), 256, cfg);
                r["first_level_below_eps"] =
                    json{{"eps", eps_text}, {"level", lvl}, {"height", report::height_json(h, cfg)}};
            }
            return report::envelope("tower-heights", r);
        };
    });

    auto* tp2 = tower_cmd->add_subcommand(
        "p2-bound", "period bound from tracked tower primes and frozen inertia");
    add_tower_opts(tp2);
    tp2->add_option("--poly", poly_text)->required();
    tp2->callback([&] {
        run = [&]() -> json {
            Tower t = Tower::build(parse_integer_list(primes_text), arg_depth, cfg);
            return report::envelope(
                "tower-p2-bound",
                report::bound_certificate_json(tower_p2_bound(t, parse_poly(poly_text))));
        };
    });

    auto* tp1 = tower_cmd->add_subcommand("p1-witness", "degree-gap witness for backward orbits");
    add_tower_opts(tp1);
    tp1->add_option("--level", arg_level)->required();
    tp1->add_option("--poly", poly_text)->required();
    tp1->add_option("--beta", beta_text)->required();
    tp1->callback([&] {
        run = [&]() -> json {
            Tower t = Tower::build(parse_integer_list(primes_text), arg_depth, cfg);
            return report::envelope(
                "tower-p1-witness",
                report::p1_witness_json(
                    p1_step_witness(t, arg_level, parse_poly(poly_text), parse_rational(beta_text))));
        };
    });

    auto* grp = app.add_subcommand("group", "finite permutation group checks");
    grp->require_subcommand(1);
    auto add_group_opts = [&](CLI::App* sub) {
        sub->add_option("--group", group_name, "named group: S5, A6, C12");
        sub->add_option("--gens", gens_text, "generators in cycle notation, comma separated");
        sub->add_option("--degree", arg_degree, "degree for --gens");
    };

    auto* gn = grp->add_subcommand("normals", "all normal subgroups via conjugacy-class unions");
    add_group_opts(gn);
    gn->callback([&] {
        run = [&]() -> json {
            PermGroup g = group_from_options(group_name, gens_text, arg_degree);
            json subs = json::array();
            for (const auto& s : g.normal_subgroups(cfg)) subs.push_back(report::subgroup_json(s));
            return report::envelope(
                "group-normals",
                json{{"order", g.order(cfg)}, {"count", subs.size()}, {"normal_subgroups", subs}});
        };
    });

    auto* ge = grp->add_subcommand("exponent", "lcm of element orders");
    add_group_opts(ge);
    ge->callback([&] {
        run = [&]() -> json {
            PermGroup g = group_from_options(group_name, gens_text, arg_degree);
            return report::envelope("group-exponent", report::group_exponent_json(g, cfg));
        };
    });

    auto* gg = grp->add_subcommand("goursat", "normal subgroups of a product of alternating groups");
    gg->add_option("--factors", factors_text, "comma-separated degrees, each >= 5")->required();
    gg->callback([&] {
        run = [&]() -> json {
            std::vector<long> ns;
            for (const auto& p : parse_integer_list(factors_text)) ns.push_back(p.get_si());
            return report::envelope(
                "group-goursat",
                report::goursat_json(goursat_normals_of_alternating_product(ns, cfg)));
        };
    });

    auto* pm = app.add_subcommand("powermap", "x -> x^d on exact-period-n roots of unity");
    pm->add_option("--d", arg_d)->required();
    pm->add_option("--n", arg_n)->required();
    pm->add_option("--k", k_text, "also report the multiplication-by-k orbit action");
    pm->callback([&] {
        run = [&]() -> json {
            json r{{"galois", report::powermap_json(powermap_galois(arg_d, arg_n, cfg))}};
            if (!k_text.empty())
                r["orbit_action"] = report::orbit_action_json(
                    powermap_orbit_action(arg_d, arg_n, Integer(k_text), cfg));
            return report::envelope("powermap", r);
        };
    });

    // let global flags like --output appear after the subcommand too
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
        if (!config_file.empty()) {
            Config file_cfg;
            apply_config_file(file_cfg, config_file);
            // explicit flags beat the file; the file beats defaults
            Config flagged = cfg;
            cfg = file_cfg;
            if (opt_prec->count()) cfg.precision_bits = flagged.precision_bits;
            if (opt_pcap->count()) cfg.poly_degree_cap = flagged.poly_degree_cap;
            if (opt_tcap->count()) cfg.tree_node_cap = flagged.tree_node_cap;
            if (opt_gcap->count()) cfg.group_order_cap = flagged.group_order_cap;
        }
        if (const char* env = std::getenv("DYNPROP_PRECISION_BITS"); env && !opt_prec->count()) {
            try {
                cfg.precision_bits = std::stoi(env);
            } catch (const std::exception&) {
                throw ContractError("DYNPROP_PRECISION_BITS must be an integer");
            }
        }
        cfg.validate();

        json rep = run();
        rep["config"] = config_json(cfg);
        if (output == "json")
            std::cout << rep.dump(2) << "\n";
        else
            std::cout << report::render_human(rep);
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 0 for --help, 2 for usage errors
    } catch (const ContractError& e) {
        std::cerr << "error (contract): " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error (resource cap): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
