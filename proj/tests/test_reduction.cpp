#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dynprop/errors.hpp"
#include "dynprop/factor.hpp"
#include "dynprop/poly_parse.hpp"
#include "dynprop/reduction.hpp"
#include "oracle_helpers.hpp"

using namespace dynprop;

namespace {

Rational Q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("has_good_reduction examples") {
    CHECK(has_good_reduction(parse_poly("x^2 - 1"), Integer(2)));
    CHECK(!has_good_reduction(parse_poly("x^2/3 + 1"), Integer(3)));
    CHECK(!has_good_reduction(parse_poly("3x^2 + 1/2"), Integer(2)));
}

TEST_CASE("good_reduction_primes examples") {
    CHECK(good_reduction_primes(parse_poly("x^2 - 1"), 2) == std::vector<Integer>{2, 3});
    CHECK(good_reduction_primes(parse_poly("x^2/3 - 1"), 2) == std::vector<Integer>{2, 5});
    CHECK(good_reduction_primes(parse_poly("6x^3 + x"), 3) == std::vector<Integer>{5, 7, 11});
}

TEST_CASE("bad primes are exactly those dividing the leading numerator or a denominator") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dc(-12, 12);
    std::uniform_int_distribution<long> dden(1, 12);
    for (int t = 0; t < 40; ++t) {
        std::vector<Rational> c(3 + (t % 3));
        for (auto& v : c) v = Q(dc(rng), dden(rng));
        if (c.back() == 0) c.back() = Q(1 + (t % 5));
        UniPoly f(std::move(c));
        std::set<Integer> expected;
        for (const auto& [p, e] : factor_integer(f.leading().get_num()).factors) {
            (void)e;
            expected.insert(p);
        }
        for (const auto& v : f.coeffs())
            if (v != 0 && v.get_den() > 1)
                for (const auto& [p, e] : factor_integer(Integer(v.get_den())).factors) {
                    (void)e;
                    expected.insert(p);
                }
        Integer p(1);
        for (int i = 0; i < 20; ++i) {
            p = next_prime_after(p);
            CHECK(has_good_reduction(f, p) == !expected.contains(p));
        }
    }
}

TEST_CASE("period_bound examples and recompute identity") {
    auto c1 = period_bound(parse_poly("x^2 - 1"));
    CHECK(c1.p == 2);
    CHECK(c1.q == 3);
    CHECK(c1.bound == 24);
    CHECK(c1.recompute_bound() == c1.bound);

    auto c2 = period_bound(parse_poly("x^2/3 - 1"));
    CHECK(c2.p == 2);
    CHECK(c2.q == 5);
    CHECK(c2.bound == 72);

    auto c3 = period_bound(parse_poly("x^3 + x + 1"));
    CHECK(c3.p == 2);
    CHECK(c3.q == 3);
    CHECK(c3.bound == 24);

    CHECK(c1.witness_p.good);
    CHECK(c1.witness_q.good);
}

TEST_CASE("certified enumeration examples") {
    Config cfg;
    cfg.poly_degree_cap = 512;  // plenty for the orbits below, keeps the scan quick

    auto r1 = certified_rational_periodic_points(parse_poly("x^2 - 1"), cfg);
    CHECK(r1.certificate.bound == 24);
    REQUIRE(r1.orbits.size() == 1);
    CHECK(r1.orbits[0].exact_period == 2);
    CHECK(r1.orbits[0].points == std::vector<Rational>{Q(-1), Q(0)});
    CHECK(!r1.complete);  // periods above the cap were skipped, honestly
    CHECK(!r1.omitted_periods.empty());

    auto r2 = certified_rational_periodic_points(parse_poly("x^2"), cfg);
    REQUIRE(r2.orbits.size() == 2);
    CHECK(r2.orbits[0].points == std::vector<Rational>{Q(0)});
    CHECK(r2.orbits[1].points == std::vector<Rational>{Q(1)});

    auto r3 = certified_rational_periodic_points(parse_poly("x^2 + 1"), cfg);
    CHECK(r3.orbits.empty());
    CHECK(r3.certificate.bound == 24);
}

TEST_CASE("certified enumeration matches the box oracle on random quadratics") {
    std::mt19937 rng(404);
    std::uniform_int_distribution<long> dc(-5, 5);
    Config cfg;
    cfg.poly_degree_cap = 256;  // covers periods up to 8 >= the oracle's 6
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> c{Q(dc(rng)), Q(dc(rng)), Q(dc(rng))};
        if (c.back() == 0) c.back() = Q(1 + (t % 5));
        UniPoly f(std::move(c));
        auto res = certified_rational_periodic_points(f, cfg);
        auto oracle = testing::box_periodic_points(f, 100, 6);
        std::set<Rational> reported;
        for (const auto& orbit : res.orbits)
            for (const auto& p : orbit.points)
                if (abs(p.get_num()) <= 100 && p.get_den() <= 100) reported.insert(p);
        CHECK(reported == oracle);
    }
}

TEST_CASE("inertia_profile examples") {
    auto p7 = inertia_profile(parse_poly("x^2 - 2"), Integer(7));
    CHECK(!p7.ramified_or_indistinct);
    CHECK(p7.degrees == std::multiset<long>{1, 1});

    auto p3 = inertia_profile(parse_poly("x^2 - 2"), Integer(3));
    CHECK(!p3.ramified_or_indistinct);
    CHECK(p3.degrees == std::multiset<long>{2});

    auto p2 = inertia_profile(parse_poly("x^2 - 2"), Integer(2));
    CHECK(p2.ramified_or_indistinct);

    CHECK_THROWS_AS(inertia_profile(parse_poly("2x^2 - 2"), Integer(3)), ContractError);
}

TEST_CASE("inertia_profile degrees sum to the polynomial degree") {
    std::mt19937 rng(52);
    std::uniform_int_distribution<long> dc(-9, 9);
    const Integer primes[] = {3, 5, 7, 11};
    for (int t = 0; t < 30; ++t) {
        std::vector<Rational> c(2 + (t % 5), Q(0));
        for (auto& v : c) v = Q(dc(rng));
        c.push_back(Q(1));
        UniPoly f(std::move(c));
        for (const auto& p : primes) {
            auto prof = inertia_profile(f, p);
            if (prof.ramified_or_indistinct) continue;
            long sum = 0;
            for (long d : prof.degrees) sum += d;
            CHECK(sum == f.degree());
        }
    }
}
