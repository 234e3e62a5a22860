#pragma once

// Sieve-backed arithmetic functions: the p-adic valuation nu_p, the
// prime-factor count with multiplicity nu, Euler's totient phi, primality and
// the prime-counting function pi.
//
// Everything is evaluated from a smallest-prime-factor table for arguments up
// to the table limit, and by trial division with the table's primes beyond it
// (valid as long as floor(sqrt(a)) is still covered by the table).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace phigold {

using u64 = std::uint64_t;

// Memory budget applied when none is given explicitly. Overridable through the
// PHIGOLD_MEMORY_BUDGET environment variable (bytes).
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

std::size_t memory_budget_from_env();

// floor(sqrt(a)), exact for the full 64-bit range.
u64 isqrt(u64 a) noexcept;

class SpfTable {
public:
    u64 limit() const noexcept { return limit_; }
    bool covers(u64 a) const noexcept { return a >= 2 && a <= limit_; }

    // Smallest prime factor of a, a in [2, limit].
    u64 spf(u64 a) const;

    // Unchecked variant for hot loops; a must lie in [2, limit].
    u64 spf_unchecked(u64 a) const noexcept { return spf_[a]; }
    bool is_prime_unchecked(u64 a) const noexcept { return spf_[a] == a; }

    // All primes <= limit, ascending.
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

    std::size_t memory_bytes() const noexcept;

private:
    friend SpfTable build_spf(u64 limit, std::size_t budget);

    u64 limit_ = 0;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

// Bytes build_spf(limit) will allocate.
std::size_t spf_table_bytes(u64 limit) noexcept;

// Linear sieve over [2, limit]. Throws DomainError for limit < 2 and
// BudgetError when the table would exceed `budget` bytes or 32-bit entries.
SpfTable build_spf(u64 limit, std::size_t budget = kDefaultMemoryBudget);

class PrimePi {
public:
    explicit PrimePi(const SpfTable& table, std::size_t budget = kDefaultMemoryBudget);

    u64 limit() const noexcept { return cumulative_.size() - 1; }

    // Number of primes <= x. Throws RangeError past the limit.
    u64 operator()(u64 x) const;

private:
    std::vector<std::uint32_t> cumulative_;
};

// A sieve and its prime-counting table, built together.
struct Tables {
    SpfTable spf;
    PrimePi pi;
};

Tables build_tables(u64 limit, std::size_t budget = kDefaultMemoryBudget);

// Exponent of the prime p in a.
unsigned nu_p(const SpfTable& table, u64 p, u64 a);

// Number of prime factors of a counted with multiplicity.
unsigned nu(const SpfTable& table, u64 a);

// nu(a * b) evaluated without forming the product, by complete additivity.
unsigned nu_product(const SpfTable& table, u64 a, u64 b);

u64 phi(const SpfTable& table, u64 a);

// nu(a) == 1.
bool is_prime(const SpfTable& table, u64 a);

u64 prime_pi(const PrimePi& pi, u64 x);

struct PrimePower {
    u64 prime;
    unsigned exponent;
};

// Prime factorization of a >= 1 in ascending prime order (empty for a = 1).
std::vector<PrimePower> factorize(const SpfTable& table, u64 a);

}  // namespace phigold
