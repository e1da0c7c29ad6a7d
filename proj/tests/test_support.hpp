#pragma once

// Test-only helpers: random generators and brute-force checks that do not
// touch the code under test.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>

#include "frob/integer.hpp"

namespace frob::test {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

// Random nonnegative integer below 10^digits.
inline Integer random_big(std::mt19937_64& rng, unsigned digits) {
    std::string s;
    for (unsigned i = 0; i < digits; ++i) s += static_cast<char>('0' + rng() % 10);
    return Integer(s, 10);
}

inline bool pairwise_coprime(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1;
}

// n == u*x + w*y with u, w >= 1, by enumeration.
inline bool brute_pair_representable(std::uint64_t n, std::uint64_t x, std::uint64_t y) {
    for (std::uint64_t u = 1; u * x < n; ++u) {
        const std::uint64_t rest = n - u * x;
        if (rest >= y && rest % y == 0) return true;
    }
    return false;
}

}  // namespace frob::test
