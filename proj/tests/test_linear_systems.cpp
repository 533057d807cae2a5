#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "delpezzo/errors.hpp"
#include "delpezzo/linear_systems.hpp"

using namespace delpezzo;

TEST_CASE("expected dimension of classical systems") {
    // cubics through 8 general points: the pencil minus one condition
    CHECK(expected_dim(LinearSystemSpec(3, std::vector<Int>(8, 1))) == 1);
    // cubics through 9 points: a single member
    CHECK(expected_dim(LinearSystemSpec(3, std::vector<Int>(9, 1))) == 0);
    // the sextic with seven double points and one triple point
    std::vector<Int> sextic_mults(7, 2);
    sextic_mults.push_back(3);
    CHECK(expected_dim(LinearSystemSpec(6, sextic_mults)) == 0);
    // quartics through 13 points / cubics through 13 points
    CHECK(expected_dim(LinearSystemSpec(4, std::vector<Int>(13, 1))) == 1);
    CHECK(expected_dim(LinearSystemSpec(3, std::vector<Int>(13, 1))) == -4);
    // no assigned points: the full space of degree-d curves
    CHECK(expected_dim(LinearSystemSpec(2, {})) == 5);
}

TEST_CASE("class version skips zero multiplicities") {
    CHECK(expected_dim_class(DivisorClass(3, {1, 1, 0, 0})) == 7);
    CHECK(expected_dim_class(DivisorClass(6, {2, 2, 2, 2, 2, 2, 2, 3})) == 0);
    CHECK_THROWS_AS(expected_dim_class(DivisorClass(0, {1})), Error);
    CHECK_THROWS_AS(expected_dim_class(DivisorClass(3, {-1})), Error);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(LinearSystemSpec(0, {}), Error);
    CHECK_THROWS_AS(LinearSystemSpec(3, {1, 0}), Error);
    CHECK_NOTHROW(LinearSystemSpec(1, {1}));
}

TEST_CASE("expected dimension is permutation invariant and monotone") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> mults;
        int n = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i)
            mults.emplace_back(1 + static_cast<long>(rng() % 4));
        Int d = 6 + static_cast<long>(rng() % 5);
        Int base = expected_dim(LinearSystemSpec(d, mults));

        auto shuffled = mults;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(expected_dim(LinearSystemSpec(d, shuffled)) == base);

        // one more simple point costs exactly one condition
        mults.emplace_back(1);
        CHECK(expected_dim(LinearSystemSpec(d, mults)) == base - 1);
    }
}

TEST_CASE("nonemptiness at general points") {
    CHECK(nonempty_at_general_points(LinearSystemSpec(3, std::vector<Int>(9, 1))));
    CHECK_FALSE(nonempty_at_general_points(LinearSystemSpec(3, std::vector<Int>(10, 1))));
    std::vector<Int> sextic_mults(7, 2);
    sextic_mults.push_back(3);
    CHECK(nonempty_at_general_points(LinearSystemSpec(6, sextic_mults)));
}

TEST_CASE("Bezout multiplicity bound") {
    // a line meets a cubic in 3 points: budget 2+1 fits, 4 does not
    CHECK(bezout_mult_bound(1, 3, 3));
    CHECK_FALSE(bezout_mult_bound(1, 3, 4));
    // the sextic against the cubic through all eight points: 17 <= 18
    CHECK(bezout_mult_bound(6, 3, 17));
    CHECK_FALSE(bezout_mult_bound(6, 3, 19));
    CHECK_THROWS_AS(bezout_mult_bound(0, 3, 0), Error);
}

TEST_CASE("component multiplicity budgets") {
    CHECK(component_mult_budget(1) == 2);
    CHECK(component_mult_budget(2) == 5);
    CHECK(component_mult_budget(3) == 8);
    CHECK(component_mult_budget(4) == 11);
    CHECK(component_mult_budget(5) == 14);
    CHECK(component_mult_budget(6) == 17);
    CHECK_THROWS_AS(component_mult_budget(0), Error);
}

TEST_CASE("the sextic decomposition cases are all excluded") {
    auto rep = decomposition_excluded_r7();
    CHECK(rep.required_total == 17);
    REQUIRE(rep.cases.size() == 4);
    CHECK(rep.all_excluded);

    auto find = [&](const std::string& name) -> const ExclusionCase& {
        for (const auto& c : rep.cases)
            if (c.name == name)
                return c;
        REQUIRE(false);
        return rep.cases.front();
    };

    const auto& cubics = find("two cubics");
    CHECK(cubics.degrees == std::vector<Int>{3, 3});
    CHECK(cubics.bounds == std::vector<Int>{8, 8});
    CHECK(cubics.total_bound == 16);

    const auto& quintic = find("quintic and line");
    CHECK(quintic.bounds == std::vector<Int>{14, 2});
    CHECK(quintic.total_bound == 16);

    const auto& quartic = find("quartic and conic");
    CHECK(quartic.bounds == std::vector<Int>{11, 5});
    CHECK(quartic.total_bound == 16);

    const auto& conics = find("three conics");
    CHECK(conics.bounds == std::vector<Int>{5, 5, 5});
    CHECK(conics.total_bound == 15);

    for (const auto& c : rep.cases) {
        CAPTURE(c.name);
        CHECK(c.excluded);
        CHECK(c.total_bound < rep.required_total);
        // each case really splits degree 6
        Int deg_sum = 0;
        for (const auto& k : c.degrees)
            deg_sum += k;
        CHECK(deg_sum == 6);
        // bounds recompute from the budget function
        REQUIRE(c.bounds.size() == c.degrees.size());
        for (size_t i = 0; i < c.degrees.size(); ++i)
            CHECK(c.bounds[i] == component_mult_budget(c.degrees[i]));
    }
}
