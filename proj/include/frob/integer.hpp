#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace frob {

// All arithmetic on generators, multipliers and residues is arbitrary precision.
using Integer = mpz_class;

inline std::string to_string(const Integer& x) { return x.get_str(10); }

// Number of bits in |x|; 0 for x == 0.
inline std::size_t bit_length(const Integer& x) {
    return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Number of decimal digits in |x|; 1 for x == 0.
std::size_t decimal_digits(const Integer& x);

// Strict base-10 parse: optional '-', then digits with no leading zero
// (except the literal "0"). Throws InvalidInput otherwise.
Integer parse_decimal(std::string_view text);

}  // namespace frob
