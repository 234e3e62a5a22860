#include <doctest.h>

#include <random>

#include "phigold/arith.hpp"
#include "phigold/error.hpp"
#include "phigold/oracle.hpp"

using namespace phigold;

namespace {

const Tables& small_tables() {
    static const Tables t = build_tables(20'000);
    return t;
}

}  // namespace

TEST_CASE("isqrt is exact at perfect squares and their neighbours") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    CHECK(isqrt(24) == 4);
    CHECK(isqrt(25) == 5);
    for (u64 r : {u64{3}, u64{1'000'003}, u64{4'294'967'295}}) {
        CHECK(isqrt(r * r) == r);
        CHECK(isqrt(r * r - 1) == r - 1);
        CHECK(isqrt(r * r + 2 * r) == r);
    }
    CHECK(isqrt(~u64{0}) == 4'294'967'295u);
}

TEST_CASE("build_spf small table") {
    const SpfTable t = build_spf(10);
    CHECK(t.spf(9) == 3);
    CHECK(t.spf(7) == 7);
    CHECK(t.spf(10) == 2);
    CHECK(t.primes().size() == 4);
    CHECK_THROWS_AS(t.spf(11), RangeError);
    CHECK_THROWS_AS(t.spf(1), RangeError);
}

TEST_CASE("build_spf rejects bad limits") {
    CHECK_THROWS_AS(build_spf(1), DomainError);
    CHECK_THROWS_AS(build_spf(0), DomainError);
    CHECK_THROWS_AS(build_spf(1'000'000, 1024), BudgetError);
    CHECK_THROWS_AS(build_spf(u64{1} << 33), BudgetError);
}

TEST_CASE("spf invariants hold on the whole table") {
    const SpfTable& t = small_tables().spf;
    for (u64 a = 2; a <= t.limit(); ++a) {
        const u64 s = t.spf(a);
        REQUIRE(a % s == 0);
        REQUIRE(oracle::is_prime(s));
        for (u64 d = 2; d < s && d * d <= a; ++d) REQUIRE(a % d != 0);
        REQUIRE((s == a) == oracle::is_prime(a));
    }
}

TEST_CASE("nu_p") {
    const SpfTable& t = small_tables().spf;
    CHECK(nu_p(t, 2, 12) == 2);
    CHECK(nu_p(t, 5, 12) == 0);
    CHECK(nu_p(t, 7, 1) == 0);
    CHECK(nu_p(t, 3, 3 * 3 * 3 * 3 * 3 * 2) == 5);
    CHECK_THROWS_AS(nu_p(t, 2, 0), DomainError);
    CHECK_THROWS_AS(nu_p(t, 4, 12), DomainError);
    CHECK_THROWS_AS(nu_p(t, 1, 12), DomainError);
}

TEST_CASE("nu, phi, is_prime examples") {
    const SpfTable& t = small_tables().spf;
    CHECK(nu(t, 1) == 0);
    CHECK(nu(t, 13) == 1);
    CHECK(nu(t, 12) == 3);
    CHECK(phi(t, 1) == 1);
    CHECK(phi(t, 7) == 6);
    CHECK(phi(t, 12) == 4);
    CHECK_FALSE(is_prime(t, 1));
    CHECK(is_prime(t, 2));
    CHECK_FALSE(is_prime(t, 25));
    CHECK_THROWS_AS(nu(t, 0), DomainError);
    CHECK_THROWS_AS(phi(t, 0), DomainError);
    CHECK_THROWS_AS(is_prime(t, 0), DomainError);
}

TEST_CASE("prime_pi examples and invariants") {
    const Tables& t = small_tables();
    CHECK(prime_pi(t.pi, 1) == 0);
    CHECK(prime_pi(t.pi, 2) == 1);
    CHECK(prime_pi(t.pi, 10) == 4);
    CHECK(prime_pi(t.pi, 18) == 7);
    CHECK_THROWS_AS(prime_pi(t.pi, t.pi.limit() + 1), RangeError);
    for (u64 x = 2; x <= t.pi.limit(); ++x) {
        const u64 step = prime_pi(t.pi, x) - prime_pi(t.pi, x - 1);
        REQUIRE(step <= 1);
        REQUIRE((step == 1) == is_prime(t.spf, x));
    }
}

TEST_CASE("sieve values agree with brute force on [1, 10^4]") {
    const SpfTable& t = small_tables().spf;
    for (u64 a = 1; a <= 10'000; ++a) {
        REQUIRE(phi(t, a) == oracle::phi(a));
        REQUIRE(nu(t, a) == oracle::nu(a));
    }
}

TEST_CASE("stated equivalences: nu = 0 iff 1, nu = 1 iff prime, phi = a - 1 iff nu = 1") {
    const SpfTable& t = small_tables().spf;
    for (u64 a = 1; a <= t.limit(); ++a) {
        REQUIRE((nu(t, a) == 0) == (a == 1));
        REQUIRE((nu(t, a) == 1) == is_prime(t, a));
        if (a >= 2) REQUIRE((phi(t, a) == a - 1) == (nu(t, a) == 1));
    }
}

TEST_CASE("complete additivity of nu") {
    const SpfTable& t = small_tables().spf;
    std::mt19937_64 rng(20261017);
    for (int i = 0; i < 20'000; ++i) {
        const u64 a = std::uniform_int_distribution<u64>(1, 140)(rng);
        const u64 b = std::uniform_int_distribution<u64>(1, t.limit() / a)(rng);
        REQUIRE(nu(t, a * b) == nu(t, a) + nu(t, b));
        REQUIRE(nu_product(t, a, b) == nu(t, a * b));
    }
    // Products beyond the table fall back to the sum.
    CHECK(nu_product(t, 19'997, 19'997) == 2);
    CHECK(nu_product(t, u64{1} << 10, u64{1} << 12) == 22);
}

TEST_CASE("totient divisor sum") {
    const SpfTable& t = small_tables().spf;
    for (u64 a = 1; a <= 3000; ++a) {
        u64 sum = 0;
        for (u64 d = 1; d <= a; ++d)
            if (a % d == 0) sum += phi(t, d);
        REQUIRE(sum == a);
    }
}

TEST_CASE("trial-division fallback beyond the table limit") {
    const SpfTable& t = small_tables().spf;  // covers primes up to 2*10^4, so a < 4*10^8
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const u64 a = std::uniform_int_distribution<u64>(t.limit() + 1, 5'000'000)(rng);
        REQUIRE(nu(t, a) == oracle::nu(a));
        REQUIRE(is_prime(t, a) == oracle::is_prime(a));
    }
    CHECK(phi(t, 1'000'003) == 1'000'002);  // prime
    CHECK(phi(t, 1'000'000) == 400'000);
    CHECK(nu(t, u64{19'997} * 19'997) == 2);  // prime squared, past the table
    CHECK(nu(t, u64{19'999} * 19'999) == 4);  // 7 * 2857, squared
    CHECK(factorize(t, 2 * 3 * 3 * 1'000'003).size() == 3);
    CHECK_THROWS_AS(nu(t, u64{1} << 62 | 1), RangeError);
}
