#include "frob/walk.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <utility>

#include "frob/errors.hpp"
#include "frob/modular.hpp"

namespace frob {

MultipleCertificate::MultipleCertificate(Integer target, Integer pair_a, Integer pair_c, Integer m,
                                         Integer u, Integer w)
    : target_(std::move(target)),
      pair_a_(std::move(pair_a)),
      pair_c_(std::move(pair_c)),
      m_(std::move(m)),
      u_(std::move(u)),
      w_(std::move(w)) {
    if (m_ < 1 || u_ < 1 || w_ < 1) {
        throw InvariantViolation("certificate coefficients must be >= 1: " + identity());
    }
    if (m_ * target_ != u_ * pair_a_ + w_ * pair_c_) {
        throw InvariantViolation("certificate identity fails: " + identity());
    }
}

std::string MultipleCertificate::identity() const {
    return to_string(m_) + "·" + to_string(target_) + " = " + to_string(u_) + "·" +
           to_string(pair_a_) + " + " + to_string(w_) + "·" + to_string(pair_c_);
}

void validate_walk_input(const WalkInput& input) {
    const std::array<const Integer*, 3> roles{&input.target, &input.pair_a, &input.pair_c};
    for (const Integer* x : roles) {
        if (*x < 2) throw InvalidInput("walk roles must be >= 2, got " + to_string(*x));
    }
    for (std::size_t i = 0; i < roles.size(); ++i) {
        for (std::size_t j = i + 1; j < roles.size(); ++j) {
            Integer g = gcd(*roles[i], *roles[j]);
            if (g != 1) throw NotPairwiseCoprime(*roles[i], *roles[j], g);
        }
    }
}

WalkTrace init_walk(const WalkInput& input, bool keep_history) {
    validate_walk_input(input);
    const Integer& a = input.pair_a;
    const Integer& b = input.target;
    const Integer& c = input.pair_c;

    WalkTrace trace;
    trace.input = input;
    trace.t0 = canonical_residue(-b * mod_inverse(c, a), a);
    const Integer numerator = b + c * trace.t0;
    if (!mpz_divisible_p(numerator.get_mpz_t(), a.get_mpz_t())) {
        throw InvariantViolation("b + c*t0 is not divisible by a for (b, a, c) = (" + to_string(b) +
                                 ", " + to_string(a) + ", " + to_string(c) + ")");
    }
    mpz_divexact(trace.p0.get_mpz_t(), numerator.get_mpz_t(), a.get_mpz_t());
    trace.inv_p0 = mod_inverse(trace.p0, c);

    trace.current = WalkStep{0, Integer(0), trace.p0, Integer(1)};
    trace.p_before = c;
    trace.keep_history = keep_history;
    if (keep_history) trace.history.push_back(trace.current);
    trace.terminated = reached_target(trace);
    return trace;
}

WalkTrace walk_step(WalkTrace trace) {
    if (trace.terminated) throw InvalidInput("walk_step called on a terminated walk");
    const Integer& c = trace.input.pair_c;
    if (trace.current.p == 1) {
        throw WalkExhausted("walk for " + to_string(trace.input.target) + " over (a = " +
                            to_string(trace.input.pair_a) + ", c = " + to_string(c) +
                            ") reached p = 1 without a representable multiple; "
                            "use the smaller pair element as a");
    }

    WalkStep next;
    next.index = trace.current.index + 1;
    mpz_fdiv_q(next.k.get_mpz_t(), trace.p_before.get_mpz_t(), trace.current.p.get_mpz_t());
    next.k += 1;
    next.p = next.k * trace.current.p;
    mpz_fdiv_r(next.p.get_mpz_t(), next.p.get_mpz_t(), trace.p_before.get_mpz_t());
    if (next.p == 0) {
        throw InvariantViolation("walk produced p = 0 at step " + std::to_string(next.index));
    }
    next.v = next.p * trace.inv_p0;
    mpz_fdiv_r(next.v.get_mpz_t(), next.v.get_mpz_t(), c.get_mpz_t());

    trace.p_before = std::move(trace.current.p);
    trace.current = std::move(next);
    ++trace.steps_taken;
    if (trace.keep_history) trace.history.push_back(trace.current);
    trace.terminated = reached_target(trace);
    return trace;
}

bool reached_target(const WalkTrace& trace) {
    return trace.current.p * trace.input.pair_a < trace.current.v * trace.input.target;
}

Integer row_quotient(const WalkInput& input, const WalkStep& row) {
    const Integer diff = row.p * input.pair_a - row.v * input.target;
    if (!mpz_divisible_p(diff.get_mpz_t(), input.pair_c.get_mpz_t())) {
        throw InvariantViolation("p*a - v*b is not a multiple of c at step " +
                                 std::to_string(row.index));
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), diff.get_mpz_t(), input.pair_c.get_mpz_t());
    return q;
}

std::uint64_t step_budget(const Integer& c, const Integer& p0) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    Integer x = c;
    Integer y = canonical_residue(p0, c);
    Integer sum = 2, q, r;
    while (y != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        sum += q;
        x = std::move(y);
        y = std::move(r);
        if (!sum.fits_ulong_p()) return kMax;
    }
    return sum.get_ui();
}

LeastMultiple find_least_multiple(const WalkInput& input, const WalkOptions& options) {
    WalkTrace trace = init_walk(input, options.keep_history);
    const std::uint64_t budget =
        options.max_steps.value_or(step_budget(input.pair_c, trace.p0));
    while (!trace.terminated) {
        if (trace.steps_taken >= budget) {
            throw BudgetExceeded("least-multiple walk for " + to_string(input.target) + " over (" +
                                 to_string(input.pair_a) + ", " + to_string(input.pair_c) +
                                 ") exceeded " + std::to_string(budget) + " steps");
        }
        trace = walk_step(std::move(trace));
    }

    const WalkStep& last = trace.current;
    Integer w = -row_quotient(input, last);
    MultipleCertificate cert(input.target, input.pair_a, input.pair_c, last.v, last.p, std::move(w));
    return {std::move(cert), std::move(trace)};
}

bool pair_representable(const Integer& n, const Integer& x, const Integer& y) {
    if (n < 1) throw InvalidInput("pair_representable expects n >= 1, got " + to_string(n));
    if (x < 2 || y < 2) {
        throw InvalidInput("pair elements must be >= 2, got (" + to_string(x) + ", " +
                           to_string(y) + ")");
    }
    Integer g = gcd(x, y);
    if (g != 1) throw NotPairwiseCoprime(x, y, g);

    // Smallest u >= 1 with n - u*x divisible by y.
    Integer u0 = canonical_residue(n * mod_inverse(x, y), y);
    if (u0 == 0) u0 = y;
    return n - u0 * x >= y;
}

std::string format_trace_table(const WalkTrace& trace) {
    if (!trace.keep_history) throw InvalidInput("trace was recorded without history");

    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"step", "k", "v", "p", "(p*a-v*b)/c"});
    for (const WalkStep& row : trace.history) {
        rows.push_back({std::to_string(row.index), row.index == 0 ? "-" : to_string(row.k),
                        to_string(row.v), to_string(row.p),
                        to_string(row_quotient(trace.input, row))});
    }
    std::array<std::size_t, 5> width{};
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }

    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) out << "  ";
            out << std::string(width[i] - row[i].size(), ' ') << row[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace frob
