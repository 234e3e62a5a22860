#pragma once

// Primality certification by a system of Fermat congruences.
//
// A subject m >= 2 is certified prime when m^phi(p) == 1 (mod p) holds for
// every prime p <= floor(sqrt(m)). Each congruence holds exactly when p does
// not divide m, so the system is trial division read algebraically; the
// residues here are always produced by modular exponentiation.

#include <cstddef>
#include <optional>
#include <vector>

#include "phigold/arith.hpp"

namespace phigold {

// Largest modulus for which pow_mod is exact in 64-bit arithmetic.
inline constexpr u64 kMaxModulus = u64{1} << 32;

// base^exponent mod modulus by square-and-multiply; modulus in [1, 2^32].
u64 pow_mod(u64 base, u64 exponent, u64 modulus);

struct CongruenceCheck {
    u64 modulus;
    u64 base;
    u64 exponent;  // phi(modulus) = modulus - 1
    u64 residue;   // base^exponent mod modulus

    bool holds() const noexcept { return residue == 1; }
    friend bool operator==(const CongruenceCheck&, const CongruenceCheck&) = default;
};

enum class Verdict { Prime, Composite };

const char* to_string(Verdict v) noexcept;

struct Certificate {
    u64 subject = 0;
    std::vector<CongruenceCheck> checks;
    Verdict verdict = Verdict::Prime;
    std::optional<u64> failing_modulus;
    // Congruences actually evaluated; equals checks.size() when checks are recorded.
    std::size_t evaluated = 0;
};

struct CertifyOptions {
    // Record every congruence of the system. When false only the verdict and
    // failing modulus are kept and evaluation stops at the first failure.
    bool record_checks = true;
};

// m^(p-1) == 1 (mod p). Throws DomainError for m = 0, non-prime p or
// p > 2^32.
bool fermat_congruence_holds(const SpfTable& table, u64 m, u64 p);

// Throws DomainError for m <= 1 and RangeError if floor(sqrt(m)) exceeds the
// table limit.
Certificate certify(const SpfTable& table, u64 m, CertifyOptions options = {});

// Verdict only, short-circuiting; same preconditions as certify.
bool certifies_prime(const SpfTable& table, u64 m);

}  // namespace phigold
