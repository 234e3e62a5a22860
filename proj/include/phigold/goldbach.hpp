#pragma once

// Binary and ternary Goldbach statements as systems of phi-equations.
//
// Binary: 2n = (n - x) + (n + x) with both terms prime and 0 <= x <= n - 3,
// reached through four equivalent forms (raw nu-product, nu(n^2 - x^2) = 2,
// the paired phi-system and the paired Fermat congruence system).
//
// Ternary: odd n = (n - x - y) + (2x - n) + (n - x + y) under the chain
// 0 <= y < x < x + y + 2 < n + 1 < 2x, plus the peculiar case in which
// (n - x - y)(2x - n) is divisible by 3.

#include <algorithm>
#include <optional>
#include <vector>

#include "phigold/arith.hpp"

namespace phigold {

struct BinaryWitness {
    u64 n;
    u64 x;
    u64 p;  // n - x
    u64 q;  // n + x

    friend bool operator==(const BinaryWitness&, const BinaryWitness&) = default;
};

struct TernaryWitness {
    u64 n;
    u64 x;
    u64 y;
    u64 p;  // n - x - y
    u64 q;  // 2x - n
    u64 r;  // n - x + y

    friend bool operator==(const TernaryWitness&, const TernaryWitness&) = default;
};

struct XY {
    u64 x;
    u64 y;

    friend bool operator==(const XY&, const XY&) = default;
};

namespace detail {
void require_binary(const SpfTable& table, u64 n);
void require_ternary(const SpfTable& table, u64 n);
}  // namespace detail

// Visits binary witnesses of n in ascending x until visit returns false.
// For n = 2 the single pair 2 + 2 is visited as x = 0.
template <class Visit>
void visit_binary_solutions(const SpfTable& table, u64 n, Visit&& visit) {
    detail::require_binary(table, n);
    if (n == 2) {
        visit(BinaryWitness{2, 0, 2, 2});
        return;
    }
    for (u64 x = 0; x + 3 <= n; ++x) {
        const u64 p = n - x;
        const u64 q = n + x;
        // nu(n^2 - x^2) = 2 with both factors > 1 means each factor is prime.
        if (table.is_prime_unchecked(p) && table.is_prime_unchecked(q) && !visit(BinaryWitness{n, x, p, q}))
            return;
    }
}

// Visits ternary witnesses of odd n ordered by (x, y) until visit returns false.
template <class Visit>
void visit_ternary_solutions(const SpfTable& table, u64 n, Visit&& visit) {
    detail::require_ternary(table, n);
    // 2x > n + 1 and x + y + 2 < n + 1 with y >= 0 bound x to [(n+3)/2, n-2].
    for (u64 x = (n + 3) / 2; x + 2 <= n; ++x) {
        const u64 q = 2 * x - n;
        if (!table.is_prime_unchecked(q)) continue;
        const u64 y_max = std::min(x - 1, n - 2 - x);
        for (u64 y = 0; y <= y_max; ++y) {
            const u64 p = n - x - y;
            const u64 r = n - x + y;
            if (table.is_prime_unchecked(p) && table.is_prime_unchecked(r) &&
                !visit(TernaryWitness{n, x, y, p, q, r}))
                return;
        }
    }
}

// (n - x - y)(2x - n) == 0 (mod 3).
inline bool is_peculiar(const TernaryWitness& w) noexcept { return (w.p % 3 == 0) || (w.q % 3 == 0); }

template <class Visit>
void visit_peculiar_solutions(const SpfTable& table, u64 n, Visit&& visit) {
    visit_ternary_solutions(table, n, [&](const TernaryWitness& w) { return !is_peculiar(w) || visit(w); });
}

// All x in [0, n - 3] with n - x and n + x prime, ascending; x = 0 for n = 2.
// Throws DomainError for n < 2 and RangeError when 2n is past the table.
std::vector<BinaryWitness> binary_solutions(const SpfTable& table, u64 n);
std::optional<BinaryWitness> first_binary_solution(const SpfTable& table, u64 n);

// All x in (2n + 1, 4n - 1) with nu((x - 2n)(4n - x)) = 2, ascending.
std::vector<u64> raw_form_solutions(const SpfTable& table, u64 n);

// y = 3n - x maps raw_form_solutions(n) bijectively onto the signed binary
// x-values {+x, -x}. Each unordered prime pair p != q appears twice in the raw
// form (as (p, q) and (q, p)), the balanced pair n + n once.
bool substitution_bijection_check(const SpfTable& table, u64 n);

// All x in [0, n - 3] for which n - x and n + x are both certified prime by
// their Fermat congruence systems. Throws DomainError for n <= 3.
std::vector<u64> fermat_system_solutions(const SpfTable& table, u64 n);

// Throws DomainError unless n is odd and > 5; RangeError when n is past the table.
std::vector<TernaryWitness> ternary_solutions(const SpfTable& table, u64 n);
std::optional<TernaryWitness> first_ternary_solution(const SpfTable& table, u64 n);

// Inverse of the ternary parametrization: x = (n + q) / 2, y = (r - p) / 2.
XY decomposition_to_xy(const SpfTable& table, u64 p, u64 q, u64 r, u64 n);

std::vector<TernaryWitness> peculiar_solutions(const SpfTable& table, u64 n);
std::optional<TernaryWitness> first_peculiar_solution(const SpfTable& table, u64 n);

// Whether the even number `total` >= 4 is a sum of two primes, 2 + 2 included.
bool two_prime_sum_exists(const SpfTable& table, u64 total);

// [peculiar_solutions(n) nonempty] <=> [n - 3 is a sum of two primes].
bool proposition_check(const SpfTable& table, u64 n);

}  // namespace phigold
