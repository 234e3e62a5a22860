#pragma once

// Brute-force references for testing. Nothing here shares code with the sieve,
// the congruence system or the witness enumerators.

#include <cstdint>
#include <utility>
#include <vector>

namespace phigold::oracle {

using u64 = std::uint64_t;

inline constexpr u64 kDefaultLimit = 10'000'000;

// Trial division by every integer 2..floor(sqrt(a)).
bool is_prime(u64 a);

// |{k in 1..a : gcd(k, a) = 1}|.
u64 phi(u64 a);

// Prime factors of a counted with multiplicity, by trial division.
unsigned nu(u64 a);

// Exponent of p in a by repeated division; p is not checked for primality.
unsigned nu_p(u64 p, u64 a);

// Primality of every integer in [0, limit], each decided by trial division.
std::vector<bool> primality_table(u64 limit);

struct PairDecomposition {
    u64 total = 0;
    std::vector<std::pair<u64, u64>> pairs;  // p <= q, p + q = total

    std::size_t odd_pair_count() const noexcept;
};

// Every unordered prime pair summing to the even total >= 4.
PairDecomposition pairs(u64 total, u64 limit = kDefaultLimit);

struct Triple {
    u64 p;
    u64 q;  // odd middle prime
    u64 r;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Every (p, q, r) of primes with p + q + r = n, q odd and p <= r, for odd n > 5.
std::vector<Triple> triples(u64 n, u64 limit = kDefaultLimit);

}  // namespace phigold::oracle
