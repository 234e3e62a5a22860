#pragma once

// Bertrand's postulate as the equation phi(n + x) + 1 = n + x over 0 < x < n - 2.

#include <optional>
#include <vector>

#include "phigold/arith.hpp"

namespace phigold {

struct BertrandWitness {
    u64 n;
    u64 x;
    u64 prime;  // n + x

    friend bool operator==(const BertrandWitness&, const BertrandWitness&) = default;
};

struct BertrandOptions {
    // Decide each candidate n + x through the Fermat congruence system
    // instead of the sieve.
    bool via_certify = false;
};

// Every x in (0, n - 2) with n + x prime, ascending. Throws DomainError for
// n <= 3 and RangeError when 2n - 3 is past the table.
std::vector<BertrandWitness> bertrand_solutions(const SpfTable& table, u64 n, BertrandOptions options = {});

std::optional<BertrandWitness> first_bertrand_solution(const SpfTable& table, u64 n, BertrandOptions options = {});

// |bertrand_solutions(n)| == pi(2n - 2) - pi(n).
bool count_identity_check(const SpfTable& table, const PrimePi& pi, u64 n);

}  // namespace phigold
