#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frob/integer.hpp"
#include "frob/modular.hpp"
#include "frob/walk.hpp"

namespace frob {

struct ValidatedTriple {
    std::array<Integer, 3> input;       // as supplied
    std::array<Integer, 3> generators;  // ascending: a1 < a2 < a3
    // Index into `generators` of a member positively representable by the
    // other two. Only the largest generator can be.
    std::optional<std::size_t> degenerate_member;

    Integer sum() const { return generators[0] + generators[1] + generators[2]; }
    Integer product() const { return generators[0] * generators[1] * generators[2]; }
};

// f_pos == first_coef * a[first] + second_coef * a[second], both coefficients
// >= 1. The term of generator `certified` is the least multiple of that
// generator representable by the other two.
struct Decomposition {
    std::size_t first = 0;
    std::size_t second = 0;
    Integer first_coef;
    Integer second_coef;
    std::size_t certified = 0;
};

// Least multiples L1, L2, L3 of a1, a2, a3, each over the other two.
struct TripleMultiples {
    std::vector<MultipleCertificate> certificates;
    std::array<std::uint64_t, 3> steps{};
};

using CongruenceSystem = std::array<Congruence, 3>;

struct FrobeniusResult {
    ValidatedTriple triple;
    Integer g;      // largest integer with no nonnegative representation
    Integer f_pos;  // largest integer with no all-positive representation
    std::optional<Integer> candidate_a;
    std::optional<Integer> candidate_b;
    std::optional<char> selected_system;  // 'A' or 'B'
    std::vector<MultipleCertificate> certificates;
    std::array<std::uint64_t, 3> walk_steps{};
    std::vector<Decomposition> decompositions;

    bool degenerate() const { return triple.degenerate_member.has_value(); }
};

ValidatedTriple validate_triple(const Integer& x1, const Integer& x2, const Integer& x3);

// x*y - x - y for coprime x, y >= 2.
Integer pair_frobenius(const Integer& x, const Integer& y);

// Runs the three walks; the smaller pair element always takes role "a".
TripleMultiples least_multiples_all(const ValidatedTriple& t);

// System A: L1 mod a3, L2 mod a1, L3 mod a2.
// System B: L1 mod a2, L2 mod a3, L3 mod a1.
// Residues are canonicalized.
std::pair<CongruenceSystem, CongruenceSystem> build_congruence_systems(
    const ValidatedTriple& t, const std::vector<MultipleCertificate>& multiples);

// CRT assembly from already computed least multiples, with every result
// invariant checked. Throws InvariantViolation if any fails.
FrobeniusResult assemble_frobenius(const ValidatedTriple& t, TripleMultiples multiples);

// Requires a non-degenerate triple.
FrobeniusResult frobenius_positive(const ValidatedTriple& t);

// Top-level entry. Degenerate triples reduce to the pair formula.
FrobeniusResult frobenius(const Integer& x1, const Integer& x2, const Integer& x3);

}  // namespace frob
