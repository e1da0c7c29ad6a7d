#include "frob/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "frob/errors.hpp"
#include "frob/solver.hpp"

namespace frob {

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point from, Clock::time_point to) {
    return std::chrono::duration<double, std::milli>(to - from).count();
}

// Portable uniform draw in [0, bound); std distributions differ across
// standard libraries.
std::uint64_t uniform_below(std::uint64_t bound, BenchRng& rng) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

StepStats stats_of(std::vector<std::uint64_t> values) {
    StepStats s;
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    const double sum = std::accumulate(values.begin(), values.end(), 0.0);
    s.mean = sum / static_cast<double>(values.size());
    const std::size_t n = values.size();
    s.median = n % 2 ? static_cast<double>(values[n / 2])
                     : (static_cast<double>(values[n / 2 - 1]) + static_cast<double>(values[n / 2])) / 2;
    s.max = values.back();
    return s;
}

BenchRecord run_sample(const BenchConfig& config, std::size_t index) {
    BenchRng rng = sample_rng(config.seed, index);
    BenchRecord rec;
    rec.sample_index = index;
    rec.digits = config.digits;
    rec.triple = random_coprime_triple(config.digits, rng);

    const auto start = Clock::now();
    const ValidatedTriple t = validate_triple(rec.triple[0], rec.triple[1], rec.triple[2]);
    TripleMultiples multiples = least_multiples_all(t);
    const auto walked = Clock::now();
    rec.steps = multiples.steps;
    assemble_frobenius(t, std::move(multiples));
    const auto done = Clock::now();

    rec.walk_ms = ms_between(start, walked);
    rec.crt_ms = ms_between(walked, done);
    rec.total_ms = ms_between(start, done);
    return rec;
}

}  // namespace

std::string BenchRecord::digest() const {
    std::string out;
    for (std::size_t i = 0; i < triple.size(); ++i) {
        const std::string s = to_string(triple[i]);
        if (i != 0) out += '/';
        out += s.size() <= 16 ? s : s.substr(0, 8) + "..." + s.substr(s.size() - 8);
        out += "(" + std::to_string(s.size()) + ")";
    }
    return out;
}

BenchRng sample_rng(std::uint64_t seed, std::size_t sample_index) {
    const auto index = static_cast<std::uint64_t>(sample_index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return BenchRng(seq);
}

Integer random_with_digits(unsigned digits, BenchRng& rng) {
    if (digits < 1) throw InvalidInput("digit count must be >= 1");
    std::string s(digits, '0');
    s[0] = static_cast<char>('1' + uniform_below(9, rng));
    for (std::size_t i = 1; i < s.size(); ++i) {
        s[i] = static_cast<char>('0' + uniform_below(10, rng));
    }
    return Integer(s, 10);
}

std::array<Integer, 3> random_coprime_triple(unsigned digits, BenchRng& rng) {
    if (digits < 2) throw InvalidInput("digit count must be >= 2, got " + std::to_string(digits));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<Integer, 3> t{random_with_digits(digits, rng), random_with_digits(digits, rng),
                                 random_with_digits(digits, rng)};
        try {
            if (!validate_triple(t[0], t[1], t[2]).degenerate_member) return t;
        } catch (const InvalidInput&) {
            // shares a factor or repeats a value; draw again
        }
    }
    throw Error("no valid triple with " + std::to_string(digits) + " digits after 1000 draws");
}

BenchSummary summarize(const std::vector<BenchRecord>& records) {
    BenchSummary s;
    for (std::size_t w = 0; w < 3; ++w) {
        std::vector<std::uint64_t> steps;
        for (const BenchRecord& r : records) steps.push_back(r.steps[w]);
        s.per_walk[w] = stats_of(std::move(steps));
    }
    std::vector<std::uint64_t> totals;
    double ms = 0;
    for (const BenchRecord& r : records) {
        totals.push_back(r.steps_total());
        ms += r.total_ms;
    }
    s.total = stats_of(std::move(totals));
    s.mean_total_ms = records.empty() ? 0 : ms / static_cast<double>(records.size());
    return s;
}

BenchReport run_bench(const BenchConfig& config) {
    if (config.digits < 2) throw InvalidInput("--digits must be >= 2");
    if (config.samples < 1) throw InvalidInput("--samples must be >= 1");

    BenchReport report;
    report.config = config;
    report.records.resize(config.samples);

    const unsigned workers =
        std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(config.samples)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < config.samples && !failed; i = next++) {
                    try {
                        report.records[i] = run_sample(config, i);
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);

    report.summary = summarize(report.records);

    if (config.output_path) {
        std::ofstream out(*config.output_path);
        if (!out) throw IoError("cannot open " + config.output_path->string() + " for writing");
        write_csv(report, out);
        out.flush();
        if (!out) throw IoError("failed writing " + config.output_path->string());
    }
    return report;
}

void write_csv(const BenchReport& report, std::ostream& out) {
    out << "sample_index,digits,steps_L1,steps_L2,steps_L3,steps_total,walk_ms,crt_ms,total_ms,"
           "triple_digest";
    if (report.config.full_values) out << ",triple";
    out << '\n';
    out << std::fixed << std::setprecision(3);
    for (const BenchRecord& r : report.records) {
        out << r.sample_index << ',' << r.digits << ',' << r.steps[0] << ',' << r.steps[1] << ','
            << r.steps[2] << ',' << r.steps_total() << ',' << r.walk_ms << ',' << r.crt_ms << ','
            << r.total_ms << ',' << r.digest();
        if (report.config.full_values) {
            out << ',' << to_string(r.triple[0]) << ' ' << to_string(r.triple[1]) << ' '
                << to_string(r.triple[2]);
        }
        out << '\n';
    }
}

std::string format_summary(const BenchReport& report) {
    std::ostringstream out;
    out << "digits " << report.config.digits << ", samples " << report.records.size() << ", seed "
        << report.config.seed << '\n';
    out << std::left << std::setw(8) << "walk" << std::right << std::setw(12) << "mean"
        << std::setw(12) << "median" << std::setw(12) << "max" << '\n';
    out << std::fixed << std::setprecision(1);
    auto row = [&](const std::string& name, const StepStats& s) {
        out << std::left << std::setw(8) << name << std::right << std::setw(12) << s.mean
            << std::setw(12) << s.median << std::setw(12) << s.max << '\n';
    };
    row("L1", report.summary.per_walk[0]);
    row("L2", report.summary.per_walk[1]);
    row("L3", report.summary.per_walk[2]);
    row("total", report.summary.total);
    out << std::setprecision(3) << "mean wall time per sample: " << report.summary.mean_total_ms
        << " ms\n";
    return out.str();
}

}  // namespace frob
