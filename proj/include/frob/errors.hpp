#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "frob/integer.hpp"

namespace frob {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotInvertible : public InvalidInput {
public:
    NotInvertible(Integer value, Integer modulus, Integer gcd)
        : InvalidInput(to_string(value) + " is not invertible modulo " + to_string(modulus) +
                       " (gcd " + to_string(gcd) + ")"),
          gcd_(std::move(gcd)) {}

    const Integer& gcd() const noexcept { return gcd_; }

private:
    Integer gcd_;
};

class NotPairwiseCoprime : public InvalidInput {
public:
    NotPairwiseCoprime(Integer x, Integer y, Integer gcd)
        : InvalidInput("generators " + to_string(x) + " and " + to_string(y) +
                       " are not coprime (gcd " + to_string(gcd) + ")"),
          first_(std::move(x)), second_(std::move(y)) {}

    const Integer& first() const noexcept { return first_; }
    const Integer& second() const noexcept { return second_; }

private:
    Integer first_;
    Integer second_;
};

// An identity that must hold for valid inputs failed. Always a bug or a
// precondition that slipped through.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what)
        : Error("internal invariant violated: " + what) {}
};

// The walk reached p = 1 without satisfying its stop test: no multiplier
// below c works with this role assignment. Happens only when the larger pair
// element is placed in role "a".
class WalkExhausted : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace frob
