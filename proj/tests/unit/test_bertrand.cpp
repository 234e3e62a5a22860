#include <doctest.h>

#include "phigold/bertrand.hpp"
#include "phigold/certify.hpp"
#include "phigold/error.hpp"
#include "phigold/oracle.hpp"
#include "phigold/sweep.hpp"

using namespace phigold;

namespace {

const Tables& tables() {
    static const Tables t = build_tables(40'000);
    return t;
}

std::vector<u64> xs(const std::vector<BertrandWitness>& ws) {
    std::vector<u64> out;
    for (const auto& w : ws) out.push_back(w.x);
    return out;
}

}  // namespace

TEST_CASE("bertrand_solutions examples") {
    const SpfTable& t = tables().spf;
    CHECK(bertrand_solutions(t, 4) == std::vector<BertrandWitness>{{4, 1, 5}});
    CHECK(bertrand_solutions(t, 5) == std::vector<BertrandWitness>{{5, 2, 7}});
    CHECK(xs(bertrand_solutions(t, 10)) == std::vector<u64>{1, 3, 7});
    CHECK(first_bertrand_solution(t, 10)->prime == 11);
    CHECK_THROWS_AS(bertrand_solutions(t, 3), DomainError);
    CHECK_THROWS_AS(bertrand_solutions(t, 0), DomainError);
    CHECK_THROWS_AS(bertrand_solutions(t, 20'002), RangeError);
}

TEST_CASE("count_identity_check examples") {
    const Tables& t = tables();
    CHECK(count_identity_check(t.spf, t.pi, 10));
    CHECK(prime_pi(t.pi, 18) - prime_pi(t.pi, 10) == 3);
    CHECK(count_identity_check(t.spf, t.pi, 4));
    CHECK(prime_pi(t.pi, 6) - prime_pi(t.pi, 4) == 1);
    CHECK(count_identity_check(t.spf, t.pi, 5));
    CHECK(prime_pi(t.pi, 8) - prime_pi(t.pi, 5) == 1);
}

TEST_CASE("witnesses agree with trial division and the congruence system") {
    const SpfTable& t = tables().spf;
    for (u64 n = 4; n <= 2000; ++n) {
        std::vector<u64> expected;
        for (u64 x = 1; x + 2 < n; ++x)
            if (oracle::is_prime(n + x)) expected.push_back(x);
        const auto ws = bertrand_solutions(t, n);
        REQUIRE(xs(ws) == expected);
        REQUIRE_FALSE(ws.empty());
        REQUIRE(bertrand_solutions(t, n, BertrandOptions{true}) == ws);
        for (const auto& w : ws) {
            REQUIRE(w.prime == n + w.x);
            REQUIRE(n < w.prime);
            REQUIRE(w.prime < 2 * n - 2);
            REQUIRE(certify(t, w.prime).verdict == Verdict::Prime);
        }
    }
}

TEST_CASE("open upper end: 2n - 2 is never prime, so pi(2n-2) = pi(2n-3)") {
    const Tables& t = tables();
    for (u64 n = 4; 2 * n - 2 <= t.pi.limit(); ++n) {
        REQUIRE_FALSE(is_prime(t.spf, 2 * n - 2));
        REQUIRE(prime_pi(t.pi, 2 * n - 2) == prime_pi(t.pi, 2 * n - 3));
    }
}

TEST_CASE("count identity on (3, 2*10^4]") {
    const Tables& t = tables();
    for (u64 n = 4; n <= 20'000; ++n) REQUIRE(count_identity_check(t.spf, t.pi, n));
}

TEST_CASE("every n in (3, 10^6] has a witness") {
    SweepOptions o;
    o.config.first_witness_only = true;
    o.keep_per_n = false;
    const RangeReport r = run_sweep(Task::Bertrand, 4, 1'000'000, o);
    CHECK(r.checked == 999'997);
    CHECK(r.failures.empty());
}
