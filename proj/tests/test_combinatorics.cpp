#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "symsector/combinatorics.hpp"

using namespace symsector;

TEST_CASE("composition enumeration counts and order") {
    const auto c33 = enumerate_compositions(3, 3);
    REQUIRE(c33.size() == 10); // C(5,2)

    const auto c15 = enumerate_compositions(1, 5);
    REQUIRE(c15.size() == 1);
    REQUIRE(c15[0].counts == std::vector<int>{5});

    const auto c24 = enumerate_compositions(2, 4);
    REQUIRE(c24.size() == 5);
    REQUIRE(c24[0].counts == std::vector<int>{4, 0});
    REQUIRE(c24[1].counts == std::vector<int>{3, 1});
    REQUIRE(c24[2].counts == std::vector<int>{2, 2});
    REQUIRE(c24[3].counts == std::vector<int>{1, 3});
    REQUIRE(c24[4].counts == std::vector<int>{0, 4});
}

TEST_CASE("composition count matches binomial for all small d, n") {
    for (int d = 1; d <= 6; ++d)
        for (int n = 1; n <= 6; ++n)
            REQUIRE(enumerate_compositions(d, n).size() == binomial_checked(n + d - 1, d - 1));
}

TEST_CASE("multinomial values") {
    CHECK(multinomial(Composition{{1, 0, 3}}) == 4);
    CHECK(multinomial(Composition{{4, 0, 0}}) == 1);
    CHECK(multinomial(Composition{{1, 1, 1}}) == 6);
    CHECK(multinomial(Composition{{2, 2}}) == 6);
    CHECK_THROWS_AS(multinomial(Composition{{-1, 2}}), InputError);
    // 200!/(100!100!) overflows 64 bits
    CHECK_THROWS_AS(multinomial(Composition{{100, 100}}), SizeError);
}

TEST_CASE("orbit sizes partition all tuples") {
    for (int d = 2; d <= 4; ++d)
        for (int n = 2; n <= 5; ++n) {
            unsigned long long total = 0;
            for (const auto& k : enumerate_compositions(d, n)) total += multinomial(k);
            unsigned long long dn = 1;
            for (int i = 0; i < n; ++i) dn *= static_cast<unsigned long long>(d);
            REQUIRE(total == dn);
        }
}

TEST_CASE("multiset orbit contents") {
    const auto orbit = multiset_orbit(Composition{{1, 0, 3}});
    REQUIRE(orbit.size() == 4);
    const std::set<std::vector<int>> as_set(orbit.begin(), orbit.end());
    CHECK(as_set.count({0, 2, 2, 2}) == 1);
    CHECK(as_set.count({2, 0, 2, 2}) == 1);

    CHECK(multiset_orbit(Composition{{3, 0}}) ==
          std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(multiset_orbit(Composition{{1, 2}}) ==
          std::vector<std::vector<int>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

TEST_CASE("orbit ordering is lexicographic and size matches multinomial") {
    for (const auto& k : enumerate_compositions(3, 4)) {
        const auto orbit = multiset_orbit(k);
        REQUIRE(orbit.size() == multinomial(k));
        for (std::size_t i = 1; i < orbit.size(); ++i) REQUIRE(orbit[i - 1] < orbit[i]);
    }
}

TEST_CASE("permutation enumeration") {
    CHECK(enumerate_permutations(3).size() == 6);
    CHECK(enumerate_permutations(4).size() == 24);
    const auto p1 = enumerate_permutations(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == Permutation::identity(1));
    CHECK_THROWS_AS(enumerate_permutations(9), SizeError);
    CHECK(enumerate_permutations(9, 10).size() == 362880);
}

TEST_CASE("permutation composition and inverse") {
    const Permutation s{{1, 2, 0}};
    const Permutation t{{0, 2, 1}};
    const Permutation st = s * t;
    for (int i = 0; i < 3; ++i) REQUIRE(st(i) == s(t(i)));
    CHECK(s * s.inverse() == Permutation::identity(3));
    CHECK_THROWS_AS(validate_permutation(Permutation{{0, 0, 1}}), InputError);
}

TEST_CASE("cycle decomposition shapes") {
    const auto id_cycles = cycle_decomposition(Permutation::identity(4));
    REQUIRE(id_cycles.size() == 4);
    for (const auto& c : id_cycles) CHECK(c.length() == 1);

    // (0 1)(2 3) as an image list
    const auto two_swaps = cycle_decomposition(Permutation{{1, 0, 3, 2}});
    REQUIRE(two_swaps.size() == 2);
    CHECK(two_swaps[0].length() == 2);
    CHECK(two_swaps[1].length() == 2);

    const auto four_cycle = cycle_decomposition(Permutation{{1, 2, 3, 0}});
    REQUIRE(four_cycle.size() == 1);
    CHECK(four_cycle[0].length() == 4);
    CHECK(four_cycle[0].elements == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("cycles recompose and cover all points") {
    for (const auto& p : enumerate_permutations(5)) {
        const auto cycles = cycle_decomposition(p);
        int covered = 0;
        for (const auto& c : cycles) covered += c.length();
        REQUIRE(covered == 5);
        REQUIRE(permutation_from_cycles(cycles, 5) == p);
    }
}

TEST_CASE("S4 class census by cycle type") {
    std::map<std::multiset<int>, int> census;
    for (const auto& p : enumerate_permutations(4)) {
        std::multiset<int> type;
        for (const auto& c : cycle_decomposition(p)) type.insert(c.length());
        ++census[type];
    }
    CHECK(census[{1, 1, 1, 1}] == 1); // identity
    CHECK(census[{2, 1, 1}] == 6);    // transpositions
    CHECK(census[{2, 2}] == 3);       // double transpositions
    CHECK(census[{3, 1}] == 8);       // three-cycles
    CHECK(census[{4}] == 6);          // four-cycles
}
