#include "frob/cli.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "frob/bench.hpp"
#include "frob/errors.hpp"
#include "frob/serialize.hpp"
#include "frob/oracle.hpp"
#include "frob/solver.hpp"
#include "frob/walk.hpp"

namespace frob::cli {

namespace {

struct ComputeArgs {
    std::vector<std::string> generators;
    bool json = false;
    bool certificate = false;
};

struct LeastMultipleArgs {
    std::string target;
    std::vector<std::string> pair;
    bool trace = false;
    bool json = false;
    bool roles_as_given = false;
};

struct VerifyArgs {
    std::uint64_t max = 30;
};

struct BenchArgs {
    unsigned digits = 100;
    std::size_t samples = 20;
    std::uint64_t seed = 42;
    std::string csv;
    bool json = false;
    bool full_values = false;
    unsigned threads = 1;
};

std::string decomposition_text(const FrobeniusResult& r, const Decomposition& d) {
    const auto& a = r.triple.generators;
    return to_string(r.f_pos) + " = " + to_string(d.first_coef) + "·" + to_string(a[d.first]) +
           " + " + to_string(d.second_coef) + "·" + to_string(a[d.second]);
}

int do_compute(const ComputeArgs& args, std::ostream& out) {
    const FrobeniusResult r = frobenius(parse_decimal(args.generators[0]),
                                        parse_decimal(args.generators[1]),
                                        parse_decimal(args.generators[2]));
    if (args.json) {
        out << result_json(r).dump(2) << '\n';
        return kSuccess;
    }
    const auto& a = r.triple.generators;
    out << "generators: " << a[0] << ' ' << a[1] << ' ' << a[2] << '\n';
    out << "g = " << r.g << '\n';
    out << "f_pos = " << r.f_pos << '\n';
    if (r.degenerate()) {
        const std::size_t d = *r.triple.degenerate_member;
        out << "note: degenerate triple, " << a[d]
            << " is a positive combination of the other two ("
            << r.certificates[d].identity() << "); g is the two-generator value\n";
    } else {
        out << "candidate_A = " << *r.candidate_a << '\n';
        out << "candidate_B = " << *r.candidate_b << '\n';
    }
    if (args.certificate) {
        for (std::size_t i = 0; i < r.certificates.size(); ++i) {
            out << "L" << i + 1 << ": " << r.certificates[i].identity() << "  (" << r.walk_steps[i]
                << " steps)\n";
        }
        for (const Decomposition& d : r.decompositions) {
            out << "f_pos: " << decomposition_text(r, d) << '\n';
        }
    }
    return kSuccess;
}

int do_least_multiple(const LeastMultipleArgs& args, std::ostream& out) {
    WalkInput input{parse_decimal(args.target), parse_decimal(args.pair[0]),
                    parse_decimal(args.pair[1])};
    if (!args.roles_as_given && input.pair_a > input.pair_c) std::swap(input.pair_a, input.pair_c);
    const LeastMultiple lm = find_least_multiple(input, WalkOptions{std::nullopt, args.trace});

    if (args.json) {
        nlohmann::json j = {{"certificate", certificate_json(lm.certificate)},
                            {"steps", lm.trace.steps_taken}};
        if (args.trace) j["trace"] = trace_json(lm.trace);
        out << j.dump(2) << '\n';
        return kSuccess;
    }
    out << lm.certificate.identity() << '\n';
    out << "least multiple: " << lm.certificate.value() << "  (m = " << lm.certificate.m()
        << ", " << lm.trace.steps_taken << " steps)\n";
    if (args.trace) {
        out << "b = " << input.target << ", a = " << input.pair_a << ", c = " << input.pair_c
            << ", t0 = " << lm.trace.t0 << ", p0 = " << lm.trace.p0
            << ", p0^-1 mod c = " << lm.trace.inv_p0 << '\n';
        out << format_trace_table(lm.trace);
        out << "v_i = p_i·(p0^-1 mod c) mod c; the walk stops at the first p_i·a < v_i·b\n";
    }
    return kSuccess;
}

int do_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    std::uint64_t checked = 0, nondegenerate = 0;
    for (std::uint64_t a1 = 2; a1 <= args.max; ++a1) {
        for (std::uint64_t a2 = a1 + 1; a2 <= args.max; ++a2) {
            if (std::gcd(a1, a2) != 1) continue;
            for (std::uint64_t a3 = a2 + 1; a3 <= args.max; ++a3) {
                if (std::gcd(a1, a3) != 1 || std::gcd(a2, a3) != 1) continue;
                const FrobeniusResult r = frobenius(Integer(a1), Integer(a2), Integer(a3));
                const std::int64_t g = oracle::frobenius({a1, a2, a3}, oracle::Convention::nonneg);
                const std::int64_t f = oracle::frobenius({a1, a2, a3}, oracle::Convention::positive);
                ++checked;
                if (r.g != g || r.f_pos != f) {
                    err << "mismatch for (" << a1 << ", " << a2 << ", " << a3 << "): g = " << r.g
                        << " vs oracle " << g << ", f_pos = " << r.f_pos << " vs oracle " << f
                        << '\n';
                    return kMismatch;
                }
                if (r.degenerate()) continue;
                ++nondegenerate;
                const std::array<std::uint64_t, 3> gens{a1, a2, a3};
                for (std::size_t i = 0; i < 3; ++i) {
                    const MultipleCertificate& c = r.certificates[i];
                    const oracle::Multiple o = oracle::least_multiple(
                        gens[i], c.pair_a().get_ui(), c.pair_c().get_ui());
                    if (c.m() != o.m || c.u() != o.u || c.w() != o.w) {
                        err << "least-multiple mismatch for " << gens[i] << " in (" << a1 << ", "
                            << a2 << ", " << a3 << "): " << c.identity() << " vs oracle m = "
                            << o.m << ", u = " << o.u << ", w = " << o.w << '\n';
                        return kMismatch;
                    }
                }
            }
        }
    }
    out << "checked " << checked << " triples with a3 <= " << args.max << " (" << nondegenerate
        << " non-degenerate): 0 mismatches\n";
    return kSuccess;
}

int do_bench(const BenchArgs& args, std::ostream& out) {
    BenchConfig config;
    config.digits = args.digits;
    config.samples = args.samples;
    config.seed = args.seed;
    config.full_values = args.full_values;
    config.threads = args.threads;
    if (!args.csv.empty()) config.output_path = args.csv;
    const BenchReport report = run_bench(config);
    if (args.json) {
        out << summary_json(report).dump(2) << '\n';
    } else {
        out << format_summary(report);
        if (config.output_path) out << "csv: " << config.output_path->string() << '\n';
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frobenius numbers of three pairwise-coprime integers", "frob"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* compute_cmd = app.add_subcommand("compute", "Frobenius number of a1 a2 a3");
    compute_cmd->add_option("generators", compute.generators, "three decimal integers")
        ->required()
        ->expected(3);
    compute_cmd->add_flag("--json", compute.json, "JSON output");
    compute_cmd->add_flag("--certificate", compute.certificate,
                          "print least-multiple identities and decompositions");

    LeastMultipleArgs least;
    auto* least_cmd = app.add_subcommand(
        "least-multiple", "least multiple of TARGET that is a positive combination of the pair");
    least_cmd->add_option("target", least.target, "decimal integer")->required();
    least_cmd->add_option("--pair", least.pair, "the two pair elements")->required()->expected(2);
    least_cmd->add_flag("--trace", least.trace, "print the step table");
    least_cmd->add_flag("--json", least.json, "JSON output");
    least_cmd->add_flag("--roles-as-given", least.roles_as_given,
                        "use the first pair element as role a even when it is larger");

    VerifyArgs verify;
    auto* verify_cmd =
        app.add_subcommand("verify", "compare against brute force for all triples with a3 <= N");
    verify_cmd->add_option("--max", verify.max, "largest generator")
        ->required()
        ->check(CLI::Range(std::uint64_t{10}, std::uint64_t{2000}));

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "step counts on random triples");
    bench_cmd->add_option("--digits", bench.digits, "decimal digits per generator")
        ->check(CLI::Range(2u, 1000000u));
    bench_cmd->add_option("--samples", bench.samples, "number of random triples")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
    bench_cmd->add_option("--seed", bench.seed, "RNG seed");
    bench_cmd->add_option("--csv", bench.csv, "write per-sample rows to PATH");
    bench_cmd->add_flag("--json", bench.json, "JSON summary");
    bench_cmd->add_flag("--full-values", bench.full_values, "append full triples to the CSV");
    bench_cmd->add_option("--threads", bench.threads, "worker threads")
        ->check(CLI::Range(1u, 1024u));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (app.get_subcommands().empty()) err << app.help();
        return kUsage;
    }

    try {
        if (compute_cmd->parsed()) return do_compute(compute, out);
        if (least_cmd->parsed()) return do_least_multiple(least, out);
        if (verify_cmd->parsed()) return do_verify(verify, out, err);
        return do_bench(bench, out);
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace frob::cli
