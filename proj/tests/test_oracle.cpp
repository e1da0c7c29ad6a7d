#include "doctest.h"

#include <algorithm>
#include <array>
#include <vector>

#include "frob/oracle.hpp"

using namespace frob::oracle;

TEST_CASE("oracle frobenius examples") {
    CHECK(frobenius({3, 5, 7}, Convention::nonneg) == 4);
    CHECK(frobenius({3, 5, 7}, Convention::positive) == 19);
    CHECK(frobenius({5, 7, 9}, Convention::nonneg) == 13);
    CHECK(frobenius({3, 5, 8}, Convention::nonneg) == 7);
    CHECK(frobenius({2, 3, 5}, Convention::nonneg) == 1);
}

TEST_CASE("oracle frobenius is independent of ordering") {
    std::array<std::uint64_t, 3> g{5, 7, 9};
    const auto expected = frobenius(g, Convention::nonneg);
    std::sort(g.begin(), g.end());
    do {
        CHECK(frobenius(g, Convention::nonneg) == expected);
        CHECK(frobenius(g, Convention::positive) == expected + 21);
    } while (std::next_permutation(g.begin(), g.end()));
}

TEST_CASE("oracle guards") {
    CHECK_THROWS_AS(frobenius({10007, 10009, 10037}, Convention::nonneg), TooLarge);
    CHECK_THROWS_AS(frobenius({4, 6, 9}, Convention::nonneg), std::invalid_argument);
    CHECK_THROWS_AS(frobenius({1, 6, 7}, Convention::nonneg), std::invalid_argument);
    CHECK_THROWS_AS(least_multiple(6, 4, 9), std::invalid_argument);
}

TEST_CASE("sieve gaps for <3,5,7>") {
    RepresentabilitySieve s({3, 5, 7}, 40);
    std::vector<std::uint64_t> gaps;
    for (std::uint64_t n = 0; n <= s.bound(); ++n) {
        if (!s.representable(n)) gaps.push_back(n);
    }
    CHECK(gaps == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(s.largest_gap() == 4);
}

TEST_CASE("sieve self-consistency and agreement with enumeration") {
    const std::vector<std::uint64_t> gens{7, 11, 13};
    RepresentabilitySieve s(gens, 400);
    CHECK(s.representable(0));
    for (std::uint64_t n = 0; n <= 400; ++n) {
        CHECK(s.representable(n) == representable(n, gens, Convention::nonneg));
        for (std::uint64_t g : gens) {
            if (s.representable(n) && n + g <= 400) CHECK(s.representable(n + g));
        }
        if (n >= 31) {
            CHECK(representable(n, gens, Convention::positive) == s.representable(n - 31));
        }
    }
}

TEST_CASE("oracle representable examples") {
    const std::vector<std::uint64_t> g{3, 5, 7};
    CHECK_FALSE(representable(19, g, Convention::positive));
    CHECK(representable(20, g, Convention::positive));  // 3 + 2*5 + 7
    CHECK(representable(0, g, Convention::nonneg));
    CHECK_FALSE(representable(0, g, Convention::positive));
    CHECK_FALSE(representable(4, g, Convention::nonneg));
}

TEST_CASE("oracle least multiple examples") {
    Multiple m = least_multiple(5, 3, 7);
    CHECK(m.m == 2);
    CHECK(m.u == 1);
    CHECK(m.w == 1);

    m = least_multiple(3, 5, 7);
    CHECK(m.m == 4);

    m = least_multiple(8231, 7523, 9533);
    CHECK(m.m == 64);
    CHECK(m.u == 13);
    CHECK(m.w == 45);
}
