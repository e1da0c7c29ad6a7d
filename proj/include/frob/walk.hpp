#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frob/integer.hpp"

namespace frob {

// Roles of one least-multiple search: find the least m with
// m*target == u*pair_a + w*pair_c, u >= 1, w >= 1.
struct WalkInput {
    Integer target;  // b
    Integer pair_a;  // a
    Integer pair_c;  // c
};

// One row of the walk. k is 0 for the initial row (index 0).
struct WalkStep {
    std::size_t index = 0;
    Integer k;
    Integer p;
    Integer v;
};

// Execution record of the walk.
//
// The sequences satisfy p_i == v_i * p0 (mod c) throughout; the walk visits the
// successive record minima of m*p0 mod c, stepping with
//   k_i = 1 + floor(p_{i-2} / p_{i-1}),  p_i = k_i * p_{i-1} mod p_{i-2},
// where p_{-1} stands for c, and v_i = p_i * inv_p0 mod c.
struct WalkTrace {
    WalkInput input;
    Integer t0;      // (-b * c^-1) mod a
    Integer p0;      // (b + c*t0) / a
    Integer inv_p0;  // p0^-1 mod c

    WalkStep current;   // latest row (index 0 right after init_walk)
    Integer p_before;   // p_{i-1}; c while current.index == 0
    std::size_t steps_taken = 0;
    bool terminated = false;

    bool keep_history = true;
    std::vector<WalkStep> history;  // rows 0..current.index when keep_history
};

class MultipleCertificate {
public:
    // Throws InvariantViolation unless m*target == u*pair_a + w*pair_c with
    // m, u, w >= 1.
    MultipleCertificate(Integer target, Integer pair_a, Integer pair_c, Integer m, Integer u,
                        Integer w);

    const Integer& target() const noexcept { return target_; }
    const Integer& pair_a() const noexcept { return pair_a_; }
    const Integer& pair_c() const noexcept { return pair_c_; }
    const Integer& m() const noexcept { return m_; }
    const Integer& u() const noexcept { return u_; }
    const Integer& w() const noexcept { return w_; }

    // The least multiple itself, m * target.
    Integer value() const { return m_ * target_; }

    // "m·b = u·a + w·c"
    std::string identity() const;

private:
    Integer target_, pair_a_, pair_c_;
    Integer m_, u_, w_;
};

struct WalkOptions {
    std::optional<std::uint64_t> max_steps;  // default: step_budget(c, p0)
    bool keep_history = true;
};

struct LeastMultiple {
    MultipleCertificate certificate;
    WalkTrace trace;
};

// Throws InvalidInput / NotPairwiseCoprime unless all roles are >= 2 and
// pairwise coprime.
void validate_walk_input(const WalkInput& input);

WalkTrace init_walk(const WalkInput& input, bool keep_history = true);

// Advances one row. Requires !trace.terminated.
WalkTrace walk_step(WalkTrace trace);

// True once p*a < v*b, i.e. v*b - p*a is a positive multiple of c.
bool reached_target(const WalkTrace& trace);

// (p*a - v*b) / c for a row; exact by construction.
Integer row_quotient(const WalkInput& input, const WalkStep& row);

// Upper bound on the number of steps the walk can take before p reaches 1:
// the sum of the Euclid partial quotients of (c, p0 mod c), plus 2.
// Saturates at UINT64_MAX.
std::uint64_t step_budget(const Integer& c, const Integer& p0);

LeastMultiple find_least_multiple(const WalkInput& input, const WalkOptions& options = {});

// Whether n == u*x + w*y for some u, w >= 1. Requires n >= 1, x, y >= 2 and
// gcd(x, y) == 1.
bool pair_representable(const Integer& n, const Integer& x, const Integer& y);

// Aligned table, one row per step: step, k, v, p, (p*a - v*b)/c.
// Requires a trace recorded with history.
std::string format_trace_table(const WalkTrace& trace);

}  // namespace frob
