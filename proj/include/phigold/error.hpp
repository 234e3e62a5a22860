#pragma once

#include <stdexcept>
#include <string>

namespace phigold {

// An argument outside the documented domain of an operation (a = 0, n <= 3,
// even n for a ternary query, non-prime modulus, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A query that reaches past the limit of the sieve tables it was given.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// A table that would not fit the configured memory budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace phigold
