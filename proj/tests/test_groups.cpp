#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dynprop/errors.hpp"
#include "dynprop/perm_group.hpp"
#include "dynprop/powermap.hpp"

using namespace dynprop;

TEST_CASE("perm basics and cycle notation") {
    Perm p = Perm::parse_cycles("(1 2 3)(4 5)", 6);
    CHECK(p.apply(0) == 1);
    CHECK(p.apply(3) == 4);
    CHECK(p.apply(5) == 5);
    CHECK(p.order() == 6);
    CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK_THROWS_AS(Perm::parse_cycles("(1 2)(2 3)", 4), ContractError);
    CHECK_THROWS_AS(Perm::parse_cycles("(1 9)", 4), ContractError);
}

TEST_CASE("enumeration examples") {
    PermGroup s4(4, {Perm::parse_cycles("(1 2)", 4), Perm::parse_cycles("(1 2 3 4)", 4)});
    CHECK(s4.order() == 24);
    PermGroup a5(5, {Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)});
    CHECK(a5.order() == 60);
    CHECK(PermGroup::symmetric(5).order() == 120);
    CHECK(PermGroup::alternating(6).order() == 360);
    CHECK(PermGroup::cyclic(6).order() == 6);
    CHECK(PermGroup::from_name("S5").order() == 120);

    Config tight;
    tight.group_order_cap = 100;
    CHECK_THROWS_AS(PermGroup::symmetric(5).elements(tight), ResourceError);
}

TEST_CASE("normal subgroups: S5, S4, A5") {
    auto n5 = PermGroup::symmetric(5).normal_subgroups();
    REQUIRE(n5.size() == 3);
    CHECK(n5[0].order == 1);
    CHECK(n5[1].order == 60);
    CHECK(n5[1].label == "A5");
    CHECK(n5[2].order == 120);

    auto n4 = PermGroup::symmetric(4).normal_subgroups();
    REQUIRE(n4.size() == 4);
    CHECK(n4[0].order == 1);
    CHECK(n4[1].order == 4);
    CHECK(n4[1].label == "V4");
    CHECK(n4[2].order == 12);
    CHECK(n4[3].order == 24);

    auto na5 = PermGroup::alternating(5).normal_subgroups();
    REQUIRE(na5.size() == 2);
    CHECK(na5[0].order == 1);
    CHECK(na5[1].order == 60);
}

TEST_CASE("normal subgroups are conjugation-closed") {
    for (const char* name : {"S4", "S5", "A5", "C12"}) {
        PermGroup g = PermGroup::from_name(name);
        const auto& elems = g.elements();
        for (const auto& sub : g.normal_subgroups()) {
            std::set<int> inside(sub.element_indices.begin(), sub.element_indices.end());
            for (int ei : sub.element_indices)
                for (const auto& gen : g.generators())
                    CHECK(inside.contains(g.element_index(elems[ei].conjugated_by(gen))));
        }
    }
}

TEST_CASE("normal subgroups of S6 and S7 are {1, A_n, S_n}") {
    auto n6 = PermGroup::symmetric(6).normal_subgroups();
    REQUIRE(n6.size() == 3);
    CHECK(n6[1].order == 360);

    auto n7 = PermGroup::symmetric(7).normal_subgroups();  // conjugacy-class method
    REQUIRE(n7.size() == 3);
    CHECK(n7[1].order == 2520);
}

TEST_CASE("exponent examples and divisibility properties") {
    PermGroup s4 = PermGroup::symmetric(4);
    CHECK(s4.exponent() == 12);  // lcm(1,2,3,4), not the group order 24
    CHECK(PermGroup::alternating(5).exponent() == 30);
    CHECK(PermGroup::cyclic(6).exponent() == 6);

    for (const char* name : {"S4", "A5", "C6", "S5"}) {
        PermGroup g = PermGroup::from_name(name);
        Integer e = g.exponent();
        // exponent divides |G|; every element order divides the exponent
        CHECK(Integer(g.order()) % e == 0);
        for (const auto& p : g.elements()) CHECK(e % Integer(p.order()) == 0);
    }
}

TEST_CASE("goursat: A5, A5 x A5, A5 x A6") {
    auto single = goursat_normals_of_alternating_product({5});
    CHECK(single.exhaustive);
    CHECK(single.normal_subgroup_count == 2);
    CHECK(single.all_normals_are_subproducts);

    auto pair = goursat_normals_of_alternating_product({5, 5});
    CHECK(pair.exhaustive);
    CHECK(pair.normal_subgroup_count == 4);  // 1, A5 x 1, 1 x A5, A5 x A5; diagonal is not normal
    CHECK(pair.all_normals_are_subproducts);
    CHECK(pair.descriptors.size() == 4);

    auto mixed = goursat_normals_of_alternating_product({5, 6});
    CHECK(mixed.exhaustive);
    CHECK(mixed.normal_subgroup_count == 4);
    CHECK(mixed.all_normals_are_subproducts);

    CHECK_THROWS_AS(goursat_normals_of_alternating_product({4}), ContractError);

    Config tight;
    tight.group_order_cap = 1000;  // forces structural mode, then factor checks fit
    auto structural = goursat_normals_of_alternating_product({5, 5}, tight);
    CHECK(!structural.exhaustive);
    CHECK(structural.descriptors.size() == 4);
}

TEST_CASE("powermap_galois examples") {
    auto r23 = powermap_galois(2, 3);
    CHECK(r23.modulus == 7);
    CHECK(r23.order_of_d == 3);
    CHECK(r23.unit_group_order == 6);
    CHECK(r23.orbit_count == 2);
    CHECK(r23.orbits_all_size_n);

    auto r32 = powermap_galois(3, 2);
    CHECK(r32.modulus == 8);
    CHECK(r32.order_of_d == 2);

    auto r24 = powermap_galois(2, 4);
    CHECK(r24.modulus == 15);
    CHECK(r24.order_of_d == 4);
    CHECK(r24.orbit_count == 2);  // phi(15) = 8 = 2 * 4
}

TEST_CASE("powermap orbits all have size n for small d, n") {
    for (long d : {2L, 3L})
        for (long n : {1L, 2L, 3L, 4L, 5L, 6L}) {
            auto rep = powermap_galois(d, n);
            CHECK(rep.orbits_all_size_n);
            CHECK(rep.order_of_d == n);
            if (rep.modulus > 1) CHECK(rep.unit_group_order == Integer(rep.orbit_count) * n);
        }
}

TEST_CASE("powermap_orbit_action examples") {
    auto a2 = powermap_orbit_action(2, 3, Integer(2));
    CHECK(a2.stabilizes_all);
    CHECK(a2.shifts == std::vector<long>{1, 1});
    CHECK(a2.orbit_representatives == std::vector<Integer>{1, 3});

    auto a1 = powermap_orbit_action(2, 3, Integer(1));
    CHECK(a1.stabilizes_all);
    CHECK(a1.shifts == std::vector<long>{0, 0});

    auto a3 = powermap_orbit_action(2, 3, Integer(3));
    CHECK(!a3.stabilizes_all);
    CHECK(a3.orbit_permutation == std::vector<long>{1, 0});  // swaps the two orbits

    CHECK_THROWS_AS(powermap_orbit_action(2, 4, Integer(3)), ContractError);  // 3 | 15
}

TEST_CASE("multiplication by d is always in N with shift 1 everywhere") {
    for (long d : {2L, 3L})
        for (long n : {2L, 3L, 4L, 5L}) {
            auto act = powermap_orbit_action(d, n, Integer(d));
            CHECK(act.stabilizes_all);
            for (long s : act.shifts) CHECK(s == 1);
        }
}
