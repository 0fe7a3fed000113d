#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dynprop/dynamics.hpp"
#include "dynprop/errors.hpp"
#include "dynprop/poly_parse.hpp"
#include "oracle_helpers.hpp"

using namespace dynprop;

namespace {

Rational Q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("iterate examples") {
    CHECK(iterate(parse_poly("x^2-1"), 0, Q(5)) == Q(5));
    CHECK(iterate(parse_poly("x^2-1"), 2, Q(0)) == Q(0));
    CHECK(iterate(parse_poly("x^2"), 3, Q(2)) == Q(256));
    CHECK_THROWS_AS(iterate(parse_poly("x^2"), -1, Q(2)), ContractError);
}

TEST_CASE("iterate is a flow: f^(j+k) = f^j after f^k") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> dc(-3, 3);
    for (int t = 0; t < 40; ++t) {
        UniPoly f = UniPoly(std::vector<Rational>{Q(dc(rng)), Q(dc(rng)), Q(1)});
        Rational x = Q(dc(rng), 1 + (t % 3));
        long j = t % 4, k = (t / 4) % 4;
        CHECK(iterate(f, j + k, x) == iterate(f, j, iterate(f, k, x)));
    }
}

TEST_CASE("iterate_poly examples") {
    CHECK(iterate_poly(parse_poly("x^2-1"), 2) == parse_poly("x^4 - 2x^2"));
    CHECK(iterate_poly(parse_poly("x^2"), 3) == parse_poly("x^8"));
    CHECK(iterate_poly(parse_poly("2x+1"), 2) == parse_poly("4x+3"));
    Config tight;
    tight.poly_degree_cap = 16;
    CHECK_THROWS_AS(iterate_poly(parse_poly("x^2"), 5, tight), ResourceError);
    CHECK(iterate_poly(parse_poly("x^2"), 4, tight).degree() == 16);  // cap is inclusive
}

TEST_CASE("dynatomic examples") {
    CHECK(dynatomic(parse_poly("x^2"), 2) == parse_poly("x^2 + x + 1"));
    CHECK(dynatomic(parse_poly("x^2-1"), 2) == parse_poly("x^2 + x"));
    CHECK(dynatomic(parse_poly("x^2-3/4"), 2) == parse_poly("x^2 + x + 1/4"));
    CHECK_THROWS_AS(dynatomic(parse_poly("2x+1"), 2), ContractError);
}

TEST_CASE("dynatomic Moebius product round-trip and degree formula") {
    for (const char* fs : {"x^2", "x^2 - 1", "x^3 - x + 1", "x^3 + 2x"}) {
        UniPoly f = parse_poly(fs);
        DynatomicScanner scanner(f);
        for (long n = 1; n <= 6; ++n) {
            UniPoly product = UniPoly::constant(1);
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) product = product * scanner.dynatomic_poly(d);
            CHECK(product == iterate_poly(f, n) - UniPoly::x());
            CHECK(scanner.dynatomic_poly(n).degree() == dynatomic_degree(f.degree(), n));
        }
    }
}

TEST_CASE("exact_period examples") {
    CHECK(exact_period(parse_poly("x^2-1"), Q(0), 10) == 2);
    CHECK(exact_period(parse_poly("x^2-3/4"), Q(-1, 2), 10) == 1);
    CHECK(!exact_period(parse_poly("x^2"), Q(2), 10).has_value());
}

TEST_CASE("rational_periodic_points examples") {
    auto orbits = rational_periodic_points(parse_poly("x^2-1"), 3);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].exact_period == 2);
    CHECK(orbits[0].points == std::vector<Rational>{Q(-1), Q(0)});

    auto sq = rational_periodic_points(parse_poly("x^2"), 3);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].exact_period == 1);
    CHECK(sq[0].points == std::vector<Rational>{Q(0)});
    CHECK(sq[1].points == std::vector<Rational>{Q(1)});

    // the multiplicity-collision case: Phi_2 = (x + 1/2)^2 but -1/2 is fixed
    auto col = rational_periodic_points(parse_poly("x^2-3/4"), 2);
    REQUIRE(col.size() == 2);
    CHECK(col[0].exact_period == 1);
    CHECK(col[1].exact_period == 1);
    CHECK(col[0].points == std::vector<Rational>{Q(-1, 2)});
    CHECK(col[1].points == std::vector<Rational>{Q(3, 2)});
}

TEST_CASE("reported orbits re-verify: period exact, f cyclic on points") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> dc(-4, 4);
    for (int t = 0; t < 25; ++t) {
        UniPoly f = UniPoly(std::vector<Rational>{Q(dc(rng)), Q(dc(rng)), Q(1)});
        for (const auto& orbit : rational_periodic_points(f, 4)) {
            REQUIRE(static_cast<long>(orbit.points.size()) == orbit.exact_period);
            for (size_t i = 0; i < orbit.points.size(); ++i) {
                CHECK(f.evaluate(orbit.points[i]) ==
                      orbit.points[(i + 1) % orbit.points.size()]);
                CHECK(exact_period(f, orbit.points[i], orbit.exact_period) == orbit.exact_period);
            }
        }
    }
}

TEST_CASE("box oracle equivalence for small quadratics") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<long> dc(-3, 3);
    for (int t = 0; t < 10; ++t) {
        UniPoly f = UniPoly(std::vector<Rational>{Q(dc(rng)), Q(dc(rng)), Q(1)});
        auto oracle = testing::box_periodic_points(f, 50, 4);
        std::set<Rational> reported;
        for (const auto& orbit : rational_periodic_points(f, 4))
            for (const auto& p : orbit.points)
                if (abs(p.get_num()) <= 50 && p.get_den() <= 50) reported.insert(p);
        CHECK(reported == oracle);
    }
}

TEST_CASE("preimages examples") {
    CHECK(preimages(parse_poly("x^2"), Q(4)) == std::vector<Rational>{Q(-2), Q(2)});
    CHECK(preimages(parse_poly("x^2"), Q(2)).empty());
    CHECK(preimages(parse_poly("x^2-1"), Q(-1)) == std::vector<Rational>{Q(0)});
}

TEST_CASE("preimage_tree examples") {
    // 256 <- {+-16} <- {+-4} <- {+-2}
    PreimageTree t = preimage_tree(parse_poly("x^2"), Q(256), 3);
    CHECK(t.nodes_per_depth == std::vector<long>{1, 2, 2, 2});
    CHECK(!t.terminated);  // depth limit reached with live branches

    PreimageTree t5 = preimage_tree(parse_poly("x^2"), Q(3), 5);
    CHECK(t5.nodes_per_depth == std::vector<long>{1, 0, 0, 0, 0, 0});
    CHECK(t5.terminated);
    CHECK(t5.first_empty_depth == 1);

    PreimageTree t01 = preimage_tree(parse_poly("x^2-1"), Q(0), 2);
    // 0 <- {-1, 1}; -1 <- {0}; 1 <- {}
    CHECK(t01.nodes_per_depth == std::vector<long>{1, 2, 1});
    REQUIRE(t01.nodes.size() == 4);
    CHECK(t01.nodes[1].value == Q(-1));
    CHECK(t01.nodes[2].value == Q(1));
    CHECK(t01.nodes[3].value == Q(0));
    CHECK(t01.nodes[3].parent == 1);
}

TEST_CASE("preimage_tree edges verify and width bound holds") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> dc(-5, 5);
    for (int t = 0; t < 15; ++t) {
        UniPoly f = UniPoly(std::vector<Rational>{Q(dc(rng)), Q(dc(rng)), Q(1)});
        PreimageTree tree = preimage_tree(f, Q(dc(rng)), 4);
        long width = 1;
        for (long d = 0; d <= tree.depth_limit; ++d) {
            CHECK(tree.nodes_per_depth[d] <= width);
            if (width <= 1 << 20) width *= f.degree();
        }
        for (size_t i = 1; i < tree.nodes.size(); ++i)
            CHECK(f.evaluate(tree.nodes[i].value) == tree.nodes[tree.nodes[i].parent].value);
    }
}

TEST_CASE("preimage_tree node cap raises a resource error") {
    Config tight;
    tight.tree_node_cap = 4;
    CHECK_THROWS_AS(preimage_tree(parse_poly("x^2"), Q(65536), 8, tight), ResourceError);
}

TEST_CASE("rational_periodic_points names the offending period on cap breach") {
    Config tight;
    tight.poly_degree_cap = 16;
    try {
        rational_periodic_points(parse_poly("x^2"), 10, tight);
        FAIL("expected a ResourceError");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("period 5") != std::string::npos);
        CHECK(e.cap_name() == "poly_degree_cap");
    }
}

TEST_CASE("chebyshev examples and defining identity") {
    CHECK(chebyshev(1) == parse_poly("x"));
    CHECK(chebyshev(2) == parse_poly("x^2 - 2"));
    CHECK(chebyshev(3) == parse_poly("x^3 - 3x"));
    for (long d : {1L, 2L, 3L, 5L, 8L}) CHECK(verify_chebyshev_identity(d));
}
