#include "phigold/goldbach.hpp"

#include <cstdint>
#include <string>

#include "phigold/certify.hpp"
#include "phigold/error.hpp"

namespace phigold {

namespace detail {

void require_binary(const SpfTable& table, u64 n) {
    if (n < 2) throw DomainError("binary: n must be >= 2, got " + std::to_string(n));
    if (2 * n > table.limit())
        throw RangeError("binary: 2n = " + std::to_string(2 * n) + " beyond table limit " +
                         std::to_string(table.limit()));
}

void require_ternary(const SpfTable& table, u64 n) {
    if (n <= 5 || n % 2 == 0) throw DomainError("ternary: n must be odd and > 5, got " + std::to_string(n));
    if (n > table.limit())
        throw RangeError("ternary: n = " + std::to_string(n) + " beyond table limit " +
                         std::to_string(table.limit()));
}

}  // namespace detail

std::vector<BinaryWitness> binary_solutions(const SpfTable& table, u64 n) {
    std::vector<BinaryWitness> out;
    visit_binary_solutions(table, n, [&](const BinaryWitness& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

std::optional<BinaryWitness> first_binary_solution(const SpfTable& table, u64 n) {
    std::optional<BinaryWitness> first;
    visit_binary_solutions(table, n, [&](const BinaryWitness& w) {
        first = w;
        return false;
    });
    return first;
}

std::vector<u64> raw_form_solutions(const SpfTable& table, u64 n) {
    detail::require_binary(table, n);
    std::vector<u64> out;
    for (u64 x = 2 * n + 2; x + 1 < 4 * n; ++x) {
        // Both factors lie in [2, 2n - 2]; nu of the product is their sum.
        if (nu_product(table, x - 2 * n, 4 * n - x) == 2) out.push_back(x);
    }
    return out;
}

bool substitution_bijection_check(const SpfTable& table, u64 n) {
    const std::vector<u64> raw = raw_form_solutions(table, n);
    std::vector<std::int64_t> image;
    image.reserve(raw.size());
    for (u64 x : raw) image.push_back(static_cast<std::int64_t>(3 * n) - static_cast<std::int64_t>(x));
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;

    std::vector<std::int64_t> signed_binary;
    for (const BinaryWitness& w : binary_solutions(table, n)) {
        const auto x = static_cast<std::int64_t>(w.x);
        signed_binary.push_back(x);
        if (x != 0) signed_binary.push_back(-x);
    }
    std::sort(signed_binary.begin(), signed_binary.end());
    return image == signed_binary;
}

std::vector<u64> fermat_system_solutions(const SpfTable& table, u64 n) {
    if (n <= 3) throw DomainError("fermat_system_solutions: n must be > 3, got " + std::to_string(n));
    detail::require_binary(table, n);
    std::vector<u64> out;
    for (u64 x = 0; x + 3 <= n; ++x) {
        if (certifies_prime(table, n - x) && certifies_prime(table, n + x)) out.push_back(x);
    }
    return out;
}

std::vector<TernaryWitness> ternary_solutions(const SpfTable& table, u64 n) {
    std::vector<TernaryWitness> out;
    visit_ternary_solutions(table, n, [&](const TernaryWitness& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

std::optional<TernaryWitness> first_ternary_solution(const SpfTable& table, u64 n) {
    std::optional<TernaryWitness> first;
    visit_ternary_solutions(table, n, [&](const TernaryWitness& w) {
        first = w;
        return false;
    });
    return first;
}

XY decomposition_to_xy(const SpfTable& table, u64 p, u64 q, u64 r, u64 n) {
    auto reject = [&](const char* why) {
        throw DomainError(std::string("decomposition_to_xy(") + std::to_string(p) + ", " + std::to_string(q) +
                          ", " + std::to_string(r) + ", " + std::to_string(n) + "): " + why);
    };
    if (n <= 5 || n % 2 == 0) reject("n must be odd and > 5");
    if (p + q + r != n) reject("p + q + r != n");
    if (q % 2 == 0) reject("middle prime q must be odd");
    if (p > r) reject("p must not exceed r");
    if (p % 2 != r % 2) reject("p and r must share parity");
    if (p == 0 || q == 0 || r == 0 || !is_prime(table, p) || !is_prime(table, q) || !is_prime(table, r))
        reject("p, q, r must be prime");
    return XY{(n + q) / 2, (r - p) / 2};
}

std::vector<TernaryWitness> peculiar_solutions(const SpfTable& table, u64 n) {
    std::vector<TernaryWitness> out;
    visit_peculiar_solutions(table, n, [&](const TernaryWitness& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

std::optional<TernaryWitness> first_peculiar_solution(const SpfTable& table, u64 n) {
    std::optional<TernaryWitness> first;
    visit_peculiar_solutions(table, n, [&](const TernaryWitness& w) {
        first = w;
        return false;
    });
    return first;
}

bool two_prime_sum_exists(const SpfTable& table, u64 total) {
    if (total < 4 || total % 2 != 0)
        throw DomainError("two_prime_sum_exists: total must be even and >= 4, got " + std::to_string(total));
    if (total > table.limit()) throw RangeError("two_prime_sum_exists: total beyond table limit");
    for (u64 p : table.primes()) {
        if (2 * p > total) break;
        if (table.is_prime_unchecked(total - p)) return true;
    }
    return false;
}

bool proposition_check(const SpfTable& table, u64 n) {
    const bool peculiar = first_peculiar_solution(table, n).has_value();
    return peculiar == two_prime_sum_exists(table, n - 3);
}

}  // namespace phigold
