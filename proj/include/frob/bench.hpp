#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frob/integer.hpp"

namespace frob {

struct BenchConfig {
    unsigned digits = 100;
    std::size_t samples = 20;
    std::uint64_t seed = 42;
    std::optional<std::filesystem::path> output_path;  // CSV destination
    bool full_values = false;  // append the full triple to each CSV row
    unsigned threads = 1;
};

struct BenchRecord {
    std::size_t sample_index = 0;
    unsigned digits = 0;
    std::array<Integer, 3> triple;
    std::array<std::uint64_t, 3> steps{};  // walks for a1, a2, a3 (ascending)
    double walk_ms = 0;
    double crt_ms = 0;
    double total_ms = 0;

    std::uint64_t steps_total() const { return steps[0] + steps[1] + steps[2]; }
    // "first8...last8(ndigits)" per generator, joined by '/'.
    std::string digest() const;
};

struct StepStats {
    double mean = 0;
    double median = 0;
    std::uint64_t max = 0;
};

struct BenchSummary {
    std::array<StepStats, 3> per_walk;
    StepStats total;
    double mean_total_ms = 0;
};

struct BenchReport {
    BenchConfig config;
    std::vector<BenchRecord> records;
    BenchSummary summary;
};

using BenchRng = std::mt19937_64;

// Generator for one sample; depends only on (seed, sample_index).
BenchRng sample_rng(std::uint64_t seed, std::size_t sample_index);

// Uniform integer with exactly `digits` decimal digits.
Integer random_with_digits(unsigned digits, BenchRng& rng);

// Resamples until the triple is pairwise coprime, distinct and has no member
// positively representable by the other two. Gives up after 1000 attempts.
std::array<Integer, 3> random_coprime_triple(unsigned digits, BenchRng& rng);

// Throws InvalidInput on an invalid config and IoError when the CSV cannot be
// written.
BenchReport run_bench(const BenchConfig& config);

BenchSummary summarize(const std::vector<BenchRecord>& records);

void write_csv(const BenchReport& report, std::ostream& out);
std::string format_summary(const BenchReport& report);

}  // namespace frob
