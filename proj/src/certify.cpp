#include "phigold/certify.hpp"

#include <string>

#include "phigold/error.hpp"

namespace phigold {

u64 pow_mod(u64 base, u64 exponent, u64 modulus) {
    if (modulus == 0 || modulus > kMaxModulus)
        throw DomainError("pow_mod: modulus must lie in [1, 2^32], got " + std::to_string(modulus));
    if (modulus == 1) return 0;
    // Operands stay below 2^32, so every product fits in 64 bits.
    u64 result = 1;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base % modulus;
        exponent >>= 1;
        if (exponent > 0) base = base * base % modulus;
    }
    return result;
}

const char* to_string(Verdict v) noexcept { return v == Verdict::Prime ? "prime" : "composite"; }

namespace {

CongruenceCheck make_check(u64 m, u64 p) {
    const u64 exponent = p - 1;
    return CongruenceCheck{p, m, exponent, pow_mod(m, exponent, p)};
}

void require_subject(const SpfTable& table, u64 m) {
    if (m <= 1) throw DomainError("certify: subject must be >= 2, got " + std::to_string(m));
    const u64 root = isqrt(m);
    if (root > table.limit())
        throw RangeError("certify: moduli up to " + std::to_string(root) + " exceed table limit " +
                         std::to_string(table.limit()));
}

}  // namespace

bool fermat_congruence_holds(const SpfTable& table, u64 m, u64 p) {
    if (m == 0) throw DomainError("fermat_congruence_holds: m must be >= 1");
    if (p > kMaxModulus) throw DomainError("fermat_congruence_holds: modulus above 2^32");
    if (p < 2 || !is_prime(table, p))
        throw DomainError("fermat_congruence_holds: " + std::to_string(p) + " is not prime");
    return make_check(m, p).holds();
}

Certificate certify(const SpfTable& table, u64 m, CertifyOptions options) {
    require_subject(table, m);
    Certificate cert;
    cert.subject = m;
    const u64 root = isqrt(m);
    for (u64 p : table.primes()) {
        if (p > root) break;
        const CongruenceCheck check = make_check(m, p);
        ++cert.evaluated;
        if (options.record_checks) cert.checks.push_back(check);
        if (!check.holds() && !cert.failing_modulus) {
            cert.failing_modulus = p;
            cert.verdict = Verdict::Composite;
            if (!options.record_checks) break;
        }
    }
    return cert;
}

bool certifies_prime(const SpfTable& table, u64 m) {
    require_subject(table, m);
    const u64 root = isqrt(m);
    for (u64 p : table.primes()) {
        if (p > root) break;
        if (pow_mod(m, p - 1, p) != 1) return false;
    }
    return true;
}

}  // namespace phigold
