#include "doctest.h"

#include <random>
#include <vector>

#include "frob/errors.hpp"
#include "frob/modular.hpp"
#include "test_support.hpp"

using namespace frob;

TEST_CASE("ext_gcd small cases") {
    ExtGcdResult r = ext_gcd(5, 3);
    CHECK(r.g == 1);
    CHECK(r.s == -1);
    CHECK(r.t == 2);

    r = ext_gcd(6, 4);
    CHECK(r.g == 2);
    CHECK(r.s == 1);
    CHECK(r.t == -1);

    r = ext_gcd(0, 7);
    CHECK(r.g == 7);
    CHECK(r.s * 0 + r.t * 7 == 7);
}

TEST_CASE("ext_gcd(9533, 7001)") {
    // 1612*9533 = 15367196, 2195*7001 = 15367195
    CHECK(Integer(1612) * 9533 - Integer(2195) * 7001 == 1);
    const ExtGcdResult r = ext_gcd(9533, 7001);
    CHECK(r.g == 1);
    CHECK(r.s == 1612);
    CHECK(r.t == -2195);
}

TEST_CASE("ext_gcd rejects (0, 0) and negatives") {
    CHECK_THROWS_AS(ext_gcd(0, 0), InvalidInput);
    CHECK_THROWS_AS(ext_gcd(-3, 5), InvalidInput);
}

TEST_CASE("ext_gcd Bezout identity on random bignums up to 10^50") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const Integer x = test::random_big(rng, 1 + rng() % 50);
        const Integer y = test::random_big(rng, 1 + rng() % 50);
        if (x == 0 && y == 0) continue;
        const ExtGcdResult r = ext_gcd(x, y);
        REQUIRE(r.s * x + r.t * y == r.g);
        REQUIRE(r.g == gcd(x, y));
        if (r.g != 0) {
            CHECK(mpz_divisible_p(x.get_mpz_t(), r.g.get_mpz_t()));
            CHECK(mpz_divisible_p(y.get_mpz_t(), r.g.get_mpz_t()));
        }
    }
}

TEST_CASE("canonical_residue") {
    CHECK(canonical_residue(-5, 3) == 1);
    CHECK(canonical_residue(14, 5) == 4);
    CHECK(canonical_residue(0, 9533) == 0);
    CHECK(canonical_residue(-9533, 9533) == 0);
    CHECK_THROWS_AS(canonical_residue(4, 1), InvalidInput);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(4, 7) == 2);

    const Integer inv = mod_inverse(7001, 9533);
    CHECK(inv == 7338);
    CHECK(canonical_residue(Integer(7001) * 7338, 9533) == 1);

    CHECK(mod_inverse(-3, 7) == 2);  // -3 == 4 (mod 7)

    try {
        mod_inverse(6, 9);
        FAIL("expected NotInvertible");
    } catch (const NotInvertible& e) {
        CHECK(e.gcd() == 3);
    }
}

TEST_CASE("mod_inverse property on random moduli") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const Integer m = test::random_big(rng, 1 + rng() % 40) + 2;
        const Integer x = test::random_big(rng, 1 + rng() % 40) - test::random_big(rng, 20);
        if (gcd(canonical_residue(x, m), m) != 1) {
            CHECK_THROWS_AS(mod_inverse(x, m), NotInvertible);
            continue;
        }
        const Integer y = mod_inverse(x, m);
        CHECK(y >= 1);
        CHECK(y < m);
        CHECK(canonical_residue(x * y, m) == 1);
    }
}

namespace {

// Exhaustive scan for the CRT solution, independent of crt_combine.
long scan_crt(const std::vector<std::pair<long, long>>& cs) {
    long product = 1;
    for (auto [r, m] : cs) product *= m;
    for (long x = 0; x < product; ++x) {
        bool ok = true;
        for (auto [r, m] : cs) ok = ok && ((x - r) % m + m) % m == 0;
        if (ok) return x;
    }
    return -1;
}

}  // namespace

TEST_CASE("crt_combine examples") {
    CHECK(scan_crt({{4, 5}, {5, 7}, {1, 3}}) == 19);
    CHECK(scan_crt({{14, 5}, {12, 7}, {10, 3}}) == 19);

    std::vector<Congruence> cs{{4, 5}, {5, 7}, {1, 3}};
    CrtSolution s = crt_combine(cs);
    CHECK(s.solution == 19);
    CHECK(s.modulus_product == 105);

    cs = {{0, 5}, {0, 7}, {0, 3}};
    s = crt_combine(cs);
    CHECK(s.solution == 0);
    CHECK(s.modulus_product == 105);

    cs = {{14, 5}, {12, 7}, {10, 3}};
    CHECK(crt_combine(cs).solution == 19);

    cs = {{-1, 5}};
    CHECK(crt_combine(cs).solution == 4);
}

TEST_CASE("crt_combine errors") {
    std::vector<Congruence> cs;
    CHECK_THROWS_AS(crt_combine(cs), InvalidInput);

    cs = {{1, 4}, {1, 7}, {3, 6}};
    try {
        crt_combine(cs);
        FAIL("expected NotPairwiseCoprime");
    } catch (const NotPairwiseCoprime& e) {
        CHECK(e.first() == 4);
        CHECK(e.second() == 6);
    }

    cs = {{0, 1}, {1, 3}};
    CHECK_THROWS_AS(crt_combine(cs), InvalidInput);
}

TEST_CASE("crt_combine matches exhaustive scan on small moduli") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        long m[3];
        do {
            for (long& x : m) x = static_cast<long>(test::draw(rng, 2, 30));
        } while (!test::pairwise_coprime(m[0], m[1], m[2]));
        std::vector<std::pair<long, long>> raw;
        std::vector<Congruence> cs;
        for (long x : m) {
            const long r = static_cast<long>(test::draw(rng, 0, 200)) - 100;
            raw.emplace_back(r, x);
            cs.push_back({r, x});
        }
        CHECK(crt_combine(cs).solution == scan_crt(raw));
    }
}
