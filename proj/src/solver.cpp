#include "frob/solver.hpp"

#include <algorithm>

#include "frob/errors.hpp"

namespace frob {

namespace {

struct Assignment {
    std::size_t multiple;  // which L
    std::size_t modulus;   // which generator it is reduced by
};

using SystemLayout = std::array<Assignment, 3>;

constexpr SystemLayout kSystemA{{{0, 2}, {1, 0}, {2, 1}}};
constexpr SystemLayout kSystemB{{{0, 1}, {1, 2}, {2, 0}}};

CongruenceSystem make_system(const ValidatedTriple& t,
                             const std::vector<MultipleCertificate>& multiples,
                             const SystemLayout& layout) {
    CongruenceSystem system;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const Integer& modulus = t.generators[layout[i].modulus];
        system[i] = Congruence{canonical_residue(multiples[layout[i].multiple].value(), modulus),
                               modulus};
    }
    return system;
}

std::pair<std::size_t, std::size_t> others(std::size_t i) {
    switch (i) {
        case 0: return {1, 2};
        case 1: return {0, 2};
        default: return {0, 1};
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

}  // namespace

ValidatedTriple validate_triple(const Integer& x1, const Integer& x2, const Integer& x3) {
    ValidatedTriple t;
    t.input = {x1, x2, x3};
    t.generators = t.input;
    for (const Integer& x : t.generators) {
        if (x < 2) throw InvalidInput("generators must be >= 2, got " + to_string(x));
    }
    std::sort(t.generators.begin(), t.generators.end());
    for (std::size_t i = 0; i + 1 < 3; ++i) {
        if (t.generators[i] == t.generators[i + 1]) {
            throw InvalidInput("duplicate generator " + to_string(t.generators[i]));
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            Integer g = gcd(t.generators[i], t.generators[j]);
            if (g != 1) throw NotPairwiseCoprime(t.generators[i], t.generators[j], g);
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        auto [j, k] = others(i);
        if (pair_representable(t.generators[i], t.generators[j], t.generators[k])) {
            t.degenerate_member = i;
            break;
        }
    }
    return t;
}

Integer pair_frobenius(const Integer& x, const Integer& y) {
    if (x < 2 || y < 2) {
        throw InvalidInput("pair_frobenius expects values >= 2, got (" + to_string(x) + ", " +
                           to_string(y) + ")");
    }
    Integer g = gcd(x, y);
    if (g != 1) throw NotPairwiseCoprime(x, y, g);
    return x * y - x - y;
}

TripleMultiples least_multiples_all(const ValidatedTriple& t) {
    TripleMultiples out;
    out.certificates.reserve(3);
    for (std::size_t i = 0; i < 3; ++i) {
        auto [j, k] = others(i);
        // generators are sorted, so a[j] < a[k]
        WalkInput input{t.generators[i], t.generators[j], t.generators[k]};
        LeastMultiple lm = find_least_multiple(input, WalkOptions{std::nullopt, false});
        out.steps[i] = lm.trace.steps_taken;
        out.certificates.push_back(std::move(lm.certificate));
    }
    return out;
}

std::pair<CongruenceSystem, CongruenceSystem> build_congruence_systems(
    const ValidatedTriple& t, const std::vector<MultipleCertificate>& multiples) {
    if (multiples.size() != 3) throw InvalidInput("expected three least multiples");
    return {make_system(t, multiples, kSystemA), make_system(t, multiples, kSystemB)};
}

FrobeniusResult assemble_frobenius(const ValidatedTriple& t, TripleMultiples multiples) {
    if (t.degenerate_member) throw InvalidInput("CRT assembly requires a non-degenerate triple");
    auto [system_a, system_b] = build_congruence_systems(t, multiples.certificates);

    FrobeniusResult r;
    r.triple = t;
    r.candidate_a = crt_combine(system_a).solution;
    r.candidate_b = crt_combine(system_b).solution;
    const bool use_a = *r.candidate_a >= *r.candidate_b;
    r.selected_system = use_a ? 'A' : 'B';
    r.f_pos = use_a ? *r.candidate_a : *r.candidate_b;
    r.g = r.f_pos - t.sum();
    r.certificates = std::move(multiples.certificates);
    r.walk_steps = multiples.steps;

    const SystemLayout& layout = use_a ? kSystemA : kSystemB;
    for (const Assignment& as : layout) {
        const MultipleCertificate& cert = r.certificates[as.multiple];
        const Integer& modulus = t.generators[as.modulus];
        const Integer rest = r.f_pos - cert.value();
        require(mpz_divisible_p(rest.get_mpz_t(), modulus.get_mpz_t()) != 0,
                "f_pos - L" + std::to_string(as.multiple + 1) + " is not a multiple of " +
                    to_string(modulus));
        Integer coef;
        mpz_divexact(coef.get_mpz_t(), rest.get_mpz_t(), modulus.get_mpz_t());
        require(coef >= 1, "decomposition coefficient of " + to_string(modulus) + " is " +
                               to_string(coef) + " for f_pos = " + to_string(r.f_pos));
        Decomposition d;
        d.certified = as.multiple;
        d.first = std::min(as.multiple, as.modulus);
        d.second = std::max(as.multiple, as.modulus);
        d.first_coef = d.first == as.multiple ? cert.m() : coef;
        d.second_coef = d.second == as.multiple ? cert.m() : coef;
        require(d.first_coef * t.generators[d.first] + d.second_coef * t.generators[d.second] ==
                    r.f_pos,
                "decomposition identity fails");
        r.decompositions.push_back(std::move(d));
    }
    std::sort(r.decompositions.begin(), r.decompositions.end(),
              [](const Decomposition& x, const Decomposition& y) {
                  return std::pair(x.first, x.second) < std::pair(y.first, y.second);
              });

    require(r.f_pos - r.g == t.sum(), "f_pos - g != a1 + a2 + a3");
    require(r.g >= 1, "g = " + to_string(r.g) + " < 1");
    require(r.f_pos < t.product(), "CRT candidate outside [0, a1*a2*a3)");
    return r;
}

FrobeniusResult frobenius_positive(const ValidatedTriple& t) {
    if (t.degenerate_member) throw InvalidInput("frobenius_positive requires a non-degenerate triple");
    return assemble_frobenius(t, least_multiples_all(t));
}

FrobeniusResult frobenius(const Integer& x1, const Integer& x2, const Integer& x3) {
    ValidatedTriple t = validate_triple(x1, x2, x3);
    if (!t.degenerate_member) return frobenius_positive(t);

    auto [j, k] = others(*t.degenerate_member);
    FrobeniusResult r;
    r.triple = t;
    r.g = pair_frobenius(t.generators[j], t.generators[k]);
    r.f_pos = r.g + t.sum();
    TripleMultiples multiples = least_multiples_all(t);
    r.certificates = std::move(multiples.certificates);
    r.walk_steps = multiples.steps;
    return r;
}

}  // namespace frob
