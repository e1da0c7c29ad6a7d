#include "frob/modular.hpp"

#include <cstddef>
#include <utility>

#include "frob/errors.hpp"

namespace frob {

ExtGcdResult ext_gcd(const Integer& x, const Integer& y) {
    if (x < 0 || y < 0) {
        throw InvalidInput("ext_gcd expects nonnegative inputs, got (" + to_string(x) + ", " +
                           to_string(y) + ")");
    }
    if (x == 0 && y == 0) throw InvalidInput("ext_gcd(0, 0) is undefined");

    Integer r0 = x, r1 = y;
    Integer s0 = 1, s1 = 0;
    Integer t0 = 0, t1 = 1;
    Integer q, tmp;
    while (r1 != 0) {
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        tmp = r0 - q * r1; r0 = std::move(r1); r1 = std::move(tmp);
        tmp = s0 - q * s1; s0 = std::move(s1); s1 = std::move(tmp);
        tmp = t0 - q * t1; t0 = std::move(t1); t1 = std::move(tmp);
    }
    return {r0, s0, t0};
}

Integer canonical_residue(const Integer& x, const Integer& m) {
    if (m < 2) throw InvalidInput("modulus must be >= 2, got " + to_string(m));
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer mod_inverse(const Integer& x, const Integer& m) {
    const Integer reduced = canonical_residue(x, m);
    ExtGcdResult e = ext_gcd(reduced, m);
    if (e.g != 1) throw NotInvertible(x, m, e.g);
    return canonical_residue(e.s, m);
}

CrtSolution crt_combine(std::span<const Congruence> congruences) {
    if (congruences.empty()) throw InvalidInput("crt_combine needs at least one congruence");
    for (const Congruence& c : congruences) {
        if (c.modulus < 2) throw InvalidInput("CRT modulus must be >= 2, got " + to_string(c.modulus));
    }
    for (std::size_t i = 0; i < congruences.size(); ++i) {
        for (std::size_t j = i + 1; j < congruences.size(); ++j) {
            Integer g = gcd(congruences[i].modulus, congruences[j].modulus);
            if (g != 1) {
                throw NotPairwiseCoprime(congruences[i].modulus, congruences[j].modulus, g);
            }
        }
    }

    Integer x = canonical_residue(congruences.front().residue, congruences.front().modulus);
    Integer product = congruences.front().modulus;
    for (const Congruence& c : congruences.subspan(1)) {
        // x + product*k == residue (mod c.modulus)
        const Integer k = canonical_residue((c.residue - x) * mod_inverse(product, c.modulus), c.modulus);
        x += product * k;
        product *= c.modulus;
    }
    return {x, product};
}

}  // namespace frob
