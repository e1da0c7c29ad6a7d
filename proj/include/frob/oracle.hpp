#pragma once

// Brute-force ground truth for small inputs. Deliberately independent of the
// fast path: 64-bit integers, a DP sieve and plain enumeration.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace frob::oracle {

enum class Convention { nonneg, positive };

class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Largest pair product the sieve accepts (bit table of ~12.5 MB).
inline constexpr std::uint64_t kMaxPairProduct = 100'000'000;

// Bit table over [0, bound]; entry n set iff n is a nonnegative combination
// of the generators.
class RepresentabilitySieve {
public:
    RepresentabilitySieve(std::vector<std::uint64_t> generators, std::uint64_t bound);

    bool representable(std::uint64_t n) const {
        return (bits_[n >> 6] >> (n & 63)) & 1u;
    }
    std::uint64_t bound() const noexcept { return bound_; }
    const std::vector<std::uint64_t>& generators() const noexcept { return generators_; }

    // Largest n <= bound not representable, or -1 if every n is.
    std::int64_t largest_gap() const;

private:
    std::vector<std::uint64_t> generators_;
    std::uint64_t bound_;
    std::vector<std::uint64_t> bits_;
};

struct Multiple {
    std::uint64_t m = 0;
    std::uint64_t u = 0;
    std::uint64_t w = 0;
};

// Frobenius number of three pairwise-coprime generators >= 2 from a sieve of
// bound min pair product + sum of generators. Throws TooLarge when the
// smallest pair product exceeds kMaxPairProduct.
std::int64_t frobenius(const std::array<std::uint64_t, 3>& generators, Convention convention);

// Scans m = 1, 2, ... for the first m*target == u*x + w*y with u, w >= 1.
// Returns the representation with the smallest u.
Multiple least_multiple(std::uint64_t target, std::uint64_t x, std::uint64_t y);

// Enumerates coefficient tuples. Positive convention means every
// coefficient >= 1.
bool representable(std::uint64_t n, std::span<const std::uint64_t> generators,
                   Convention convention);

}  // namespace frob::oracle
