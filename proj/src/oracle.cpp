#include "frob/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace frob::oracle {

namespace {

void require_coprime_generators(std::span<const std::uint64_t> gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] < 2) throw std::invalid_argument("oracle generators must be >= 2");
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (std::gcd(gens[i], gens[j]) != 1) {
                throw std::invalid_argument("oracle generators " + std::to_string(gens[i]) +
                                            " and " + std::to_string(gens[j]) +
                                            " are not coprime");
            }
        }
    }
}

// Nonnegative representability by recursion over the generator list.
bool nonneg_representable(std::uint64_t n, std::span<const std::uint64_t> gens) {
    if (n == 0) return true;
    if (gens.empty()) return false;
    if (gens.size() == 1) return n % gens[0] == 0;
    const std::uint64_t g = gens[0];
    for (std::uint64_t used = 0; used <= n; used += g) {
        if (nonneg_representable(n - used, gens.subspan(1))) return true;
    }
    return false;
}

}  // namespace

RepresentabilitySieve::RepresentabilitySieve(std::vector<std::uint64_t> generators,
                                             std::uint64_t bound)
    : generators_(std::move(generators)), bound_(bound), bits_(bound / 64 + 1, 0) {
    bits_[0] = 1;
    for (std::uint64_t n = 1; n <= bound_; ++n) {
        for (std::uint64_t g : generators_) {
            if (n >= g && representable(n - g)) {
                bits_[n >> 6] |= std::uint64_t{1} << (n & 63);
                break;
            }
        }
    }
}

std::int64_t RepresentabilitySieve::largest_gap() const {
    for (std::uint64_t n = bound_ + 1; n-- > 0;) {
        if (!representable(n)) return static_cast<std::int64_t>(n);
    }
    return -1;
}

std::int64_t frobenius(const std::array<std::uint64_t, 3>& generators, Convention convention) {
    require_coprime_generators(generators);
    const auto [lo, hi] = std::minmax({generators[0] * generators[1],
                                       generators[0] * generators[2],
                                       generators[1] * generators[2]});
    (void)hi;
    if (lo > kMaxPairProduct) {
        throw TooLarge("smallest pair product " + std::to_string(lo) + " exceeds the sieve guard");
    }
    const std::uint64_t sum = generators[0] + generators[1] + generators[2];
    RepresentabilitySieve sieve({generators.begin(), generators.end()}, lo + sum);
    const std::int64_t g = sieve.largest_gap();
    return convention == Convention::nonneg ? g : g + static_cast<std::int64_t>(sum);
}

Multiple least_multiple(std::uint64_t target, std::uint64_t x, std::uint64_t y) {
    const std::array<std::uint64_t, 3> all{target, x, y};
    require_coprime_generators(all);
    if (x * y > kMaxPairProduct) throw TooLarge("pair product exceeds the oracle guard");

    for (std::uint64_t m = 1; m <= x * y; ++m) {
        const std::uint64_t n = m * target;
        // if u > y works, so does u - y
        for (std::uint64_t u = 1; u <= y && u * x + y <= n; ++u) {
            const std::uint64_t rest = n - u * x;
            if (rest % y == 0) return {m, u, rest / y};
        }
    }
    throw std::logic_error("oracle least-multiple scan ran past the pair product");
}

bool representable(std::uint64_t n, std::span<const std::uint64_t> generators,
                   Convention convention) {
    if (convention == Convention::nonneg) return nonneg_representable(n, generators);
    std::uint64_t sum = 0;
    for (std::uint64_t g : generators) sum += g;
    return n >= sum && nonneg_representable(n - sum, generators);
}

}  // namespace frob::oracle
