#include "frob/integer.hpp"

#include "frob/errors.hpp"

namespace frob {

std::size_t decimal_digits(const Integer& x) {
    if (x == 0) return 1;
    // mpz_sizeinbase may overshoot by one for base 10.
    std::string s = Integer(abs(x)).get_str(10);
    return s.size();
}

Integer parse_decimal(std::string_view text) {
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && digits.front() == '-') {
        negative = true;
        digits.remove_prefix(1);
    }
    if (digits.empty()) throw InvalidInput("empty integer literal '" + std::string(text) + "'");
    for (char ch : digits) {
        if (ch < '0' || ch > '9') {
            throw InvalidInput("not a base-10 integer: '" + std::string(text) + "'");
        }
    }
    if (digits.size() > 1 && digits.front() == '0') {
        throw InvalidInput("leading zeros are not accepted: '" + std::string(text) + "'");
    }
    Integer value(std::string(digits), 10);
    return negative ? Integer(-value) : value;
}

}  // namespace frob
