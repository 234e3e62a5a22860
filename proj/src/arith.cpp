#include "phigold/arith.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>

#include "phigold/error.hpp"

namespace phigold {

std::size_t memory_budget_from_env() {
    const char* raw = std::getenv("PHIGOLD_MEMORY_BUDGET");
    if (raw == nullptr || *raw == '\0') return kDefaultMemoryBudget;
    std::string_view text(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        throw DomainError("PHIGOLD_MEMORY_BUDGET must be a positive byte count, got '" +
                          std::string(text) + "'");
    return value;
}

u64 isqrt(u64 a) noexcept {
    if (a < 2) return a;
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(a)));
    // Correct the floating estimate in both directions; products are kept
    // below 2^64 by capping r at 2^32 - 1.
    constexpr u64 kMaxRoot = 0xFFFFFFFFull;
    if (r > kMaxRoot) r = kMaxRoot;
    while (r * r > a) --r;
    while (r < kMaxRoot && (r + 1) * (r + 1) <= a) ++r;
    return r;
}

std::size_t spf_table_bytes(u64 limit) noexcept {
    // spf entries plus a generous bound on the prime list (pi(x) < 1.26 x / ln x).
    const double primes = limit < 17 ? 8.0 : 1.26 * static_cast<double>(limit) / std::log(static_cast<double>(limit));
    return static_cast<std::size_t>((limit + 1) * sizeof(std::uint32_t) +
                                    primes * sizeof(std::uint32_t));
}

u64 SpfTable::spf(u64 a) const {
    if (!covers(a))
        throw RangeError("spf: " + std::to_string(a) + " outside [2, " + std::to_string(limit_) + "]");
    return spf_[a];
}

std::size_t SpfTable::memory_bytes() const noexcept {
    return spf_.capacity() * sizeof(std::uint32_t) + primes_.capacity() * sizeof(std::uint32_t);
}

SpfTable build_spf(u64 limit, std::size_t budget) {
    if (limit < 2) throw DomainError("build_spf: limit must be >= 2, got " + std::to_string(limit));
    if (limit >= std::numeric_limits<std::uint32_t>::max())
        throw BudgetError("build_spf: limit " + std::to_string(limit) + " exceeds 32-bit table entries");
    if (spf_table_bytes(limit) > budget)
        throw BudgetError("build_spf: table for limit " + std::to_string(limit) + " needs ~" +
                          std::to_string(spf_table_bytes(limit)) + " bytes, budget is " +
                          std::to_string(budget));

    SpfTable t;
    t.limit_ = limit;
    t.spf_.assign(limit + 1, 0);
    const double estimate = limit < 17 ? 8.0 : 1.26 * static_cast<double>(limit) / std::log(static_cast<double>(limit));
    t.primes_.reserve(static_cast<std::size_t>(estimate));

    // Linear sieve: each composite is written exactly once, by its smallest prime.
    for (u64 i = 2; i <= limit; ++i) {
        if (t.spf_[i] == 0) {
            t.spf_[i] = static_cast<std::uint32_t>(i);
            t.primes_.push_back(static_cast<std::uint32_t>(i));
        }
        const u64 si = t.spf_[i];
        for (std::uint32_t p : t.primes_) {
            if (p > si || i * p > limit) break;
            t.spf_[i * p] = p;
        }
    }
    return t;
}

PrimePi::PrimePi(const SpfTable& table, std::size_t budget) {
    const u64 limit = table.limit();
    if ((limit + 1) * sizeof(std::uint32_t) > budget)
        throw BudgetError("PrimePi: table for limit " + std::to_string(limit) + " exceeds memory budget");
    cumulative_.assign(limit + 1, 0);
    std::uint32_t running = 0;
    for (u64 x = 2; x <= limit; ++x) {
        if (table.is_prime_unchecked(x)) ++running;
        cumulative_[x] = running;
    }
}

u64 PrimePi::operator()(u64 x) const {
    if (x > limit())
        throw RangeError("prime_pi: " + std::to_string(x) + " beyond table limit " + std::to_string(limit()));
    return cumulative_[x];
}

Tables build_tables(u64 limit, std::size_t budget) {
    const std::size_t pi_bytes = (limit + 1) * sizeof(std::uint32_t);
    if (pi_bytes >= budget) throw BudgetError("build_tables: limit " + std::to_string(limit) + " exceeds memory budget");
    SpfTable spf = build_spf(limit, budget - pi_bytes);
    PrimePi pi(spf, budget);
    return Tables{std::move(spf), std::move(pi)};
}

namespace {

void require_positive(u64 a, const char* op) {
    if (a == 0) throw DomainError(std::string(op) + ": argument must be >= 1");
}

// Calls fn(prime, exponent) for each prime power exactly dividing a, ascending.
template <class Fn>
void for_each_prime_power(const SpfTable& table, u64 a, Fn&& fn) {
    if (a <= table.limit()) {
        while (a > 1) {
            const u64 p = table.spf_unchecked(a);
            unsigned e = 0;
            do {
                a /= p;
                ++e;
            } while (a % p == 0);
            fn(p, e);
        }
        return;
    }
    const u64 root = isqrt(a);
    if (root > table.limit())
        throw RangeError("factorization of " + std::to_string(a) + " needs primes up to " +
                         std::to_string(root) + ", table limit is " + std::to_string(table.limit()));
    for (u64 p : table.primes()) {
        if (p * p > a) break;
        if (a % p != 0) continue;
        unsigned e = 0;
        do {
            a /= p;
            ++e;
        } while (a % p == 0);
        fn(p, e);
        if (a <= table.limit()) {
            // The cofactor is now in range; finish from the table.
            while (a > 1) {
                const u64 q = table.spf_unchecked(a);
                unsigned f = 0;
                do {
                    a /= q;
                    ++f;
                } while (a % q == 0);
                fn(q, f);
            }
            return;
        }
    }
    if (a > 1) fn(a, 1u);
}

}  // namespace

std::vector<PrimePower> factorize(const SpfTable& table, u64 a) {
    require_positive(a, "factorize");
    std::vector<PrimePower> out;
    for_each_prime_power(table, a, [&](u64 p, unsigned e) { out.push_back({p, e}); });
    return out;
}

unsigned nu_p(const SpfTable& table, u64 p, u64 a) {
    require_positive(a, "nu_p");
    if (!is_prime(table, p)) throw DomainError("nu_p: " + std::to_string(p) + " is not prime");
    unsigned alpha = 0;
    while (a % p == 0) {
        a /= p;
        ++alpha;
    }
    return alpha;
}

unsigned nu(const SpfTable& table, u64 a) {
    require_positive(a, "nu");
    if (a <= table.limit()) {
        unsigned count = 0;
        while (a > 1) {
            a /= table.spf_unchecked(a);
            ++count;
        }
        return count;
    }
    unsigned count = 0;
    for_each_prime_power(table, a, [&](u64, unsigned e) { count += e; });
    return count;
}

unsigned nu_product(const SpfTable& table, u64 a, u64 b) {
    require_positive(a, "nu_product");
    require_positive(b, "nu_product");
    u64 product = 0;
    if (!__builtin_mul_overflow(a, b, &product) && product <= table.limit()) return nu(table, product);
    return nu(table, a) + nu(table, b);
}

u64 phi(const SpfTable& table, u64 a) {
    require_positive(a, "phi");
    u64 result = a;
    for_each_prime_power(table, a, [&](u64 p, unsigned) { result = result / p * (p - 1); });
    return result;
}

bool is_prime(const SpfTable& table, u64 a) {
    require_positive(a, "is_prime");
    if (a == 1) return false;
    if (a <= table.limit()) return table.is_prime_unchecked(a);
    return nu(table, a) == 1;
}

u64 prime_pi(const PrimePi& pi, u64 x) { return pi(x); }

}  // namespace phigold
