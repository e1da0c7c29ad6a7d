#pragma once

#include <span>

#include "frob/integer.hpp"

namespace frob {

/// Bezout data: s*x + t*y == g == gcd(x, y).
struct ExtGcdResult {
    Integer g;
    Integer s;
    Integer t;
};

/// x == residue (mod modulus). The residue may be any integer on input;
/// crt_combine canonicalizes it.
struct Congruence {
    Integer residue;
    Integer modulus;
};

struct CrtSolution {
    Integer solution;        // in [0, modulus_product)
    Integer modulus_product;
};

/// Classical iterative extended Euclid. Inputs must be nonnegative and not
/// both zero; the coefficients are the minimal ones the iteration produces,
/// e.g. ext_gcd(9533, 7001) == {1, 1612, -2195}.
ExtGcdResult ext_gcd(const Integer& x, const Integer& y);

/// Mathematical residue in [0, m), also for negative x. Requires m >= 2.
Integer canonical_residue(const Integer& x, const Integer& m);

/// Inverse of x modulo m in [1, m-1]. Throws NotInvertible when
/// gcd(x mod m, m) != 1.
Integer mod_inverse(const Integer& x, const Integer& m);

/// Folds the congruences left to right. Moduli must be >= 2 and pairwise
/// coprime; an offending pair is named in the InvalidInput message.
CrtSolution crt_combine(std::span<const Congruence> congruences);

}  // namespace frob
