#include "phigold/oracle.hpp"

#include <numeric>
#include <string>

#include "phigold/error.hpp"

namespace phigold::oracle {

bool is_prime(u64 a) {
    if (a == 0) throw DomainError("oracle::is_prime: a must be >= 1");
    if (a < 2) return false;
    for (u64 d = 2; d <= a / d; ++d)
        if (a % d == 0) return false;
    return true;
}

u64 phi(u64 a) {
    if (a == 0) throw DomainError("oracle::phi: a must be >= 1");
    u64 count = 0;
    for (u64 k = 1; k <= a; ++k)
        if (std::gcd(k, a) == 1) ++count;
    return count;
}

unsigned nu(u64 a) {
    if (a == 0) throw DomainError("oracle::nu: a must be >= 1");
    unsigned count = 0;
    for (u64 d = 2; d <= a / d; ++d) {
        while (a % d == 0) {
            a /= d;
            ++count;
        }
    }
    if (a > 1) ++count;
    return count;
}

unsigned nu_p(u64 p, u64 a) {
    if (a == 0 || p < 2) throw DomainError("oracle::nu_p: need a >= 1 and p >= 2");
    unsigned count = 0;
    while (a % p == 0) {
        a /= p;
        ++count;
    }
    return count;
}

std::vector<bool> primality_table(u64 limit) {
    std::vector<bool> table(limit + 1, false);
    for (u64 a = 2; a <= limit; ++a) table[a] = is_prime(a);
    return table;
}

std::size_t PairDecomposition::odd_pair_count() const noexcept {
    std::size_t count = 0;
    for (const auto& [p, q] : pairs)
        if (p % 2 == 1 && q % 2 == 1) ++count;
    return count;
}

PairDecomposition pairs(u64 total, u64 limit) {
    if (total < 4 || total % 2 != 0)
        throw DomainError("oracle::pairs: total must be even and >= 4, got " + std::to_string(total));
    if (total > limit) throw DomainError("oracle::pairs: total beyond oracle limit");
    PairDecomposition out;
    out.total = total;
    for (u64 p = 2; 2 * p <= total; ++p)
        if (is_prime(p) && is_prime(total - p)) out.pairs.emplace_back(p, total - p);
    return out;
}

std::vector<Triple> triples(u64 n, u64 limit) {
    if (n <= 5 || n % 2 == 0) throw DomainError("oracle::triples: n must be odd and > 5, got " + std::to_string(n));
    if (n > limit) throw DomainError("oracle::triples: n beyond oracle limit");
    const std::vector<bool> prime = primality_table(n);
    std::vector<Triple> out;
    for (u64 q = 3; q + 4 <= n; q += 2) {
        if (!prime[q]) continue;
        const u64 rest = n - q;
        for (u64 p = 2; 2 * p <= rest; ++p)
            if (prime[p] && prime[rest - p]) out.push_back({p, q, rest - p});
    }
    return out;
}

}  // namespace phigold::oracle
