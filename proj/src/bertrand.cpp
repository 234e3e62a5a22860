#include "phigold/bertrand.hpp"

#include <string>

#include "phigold/certify.hpp"
#include "phigold/error.hpp"

namespace phigold {

namespace {

void require_n(const SpfTable& table, u64 n) {
    if (n <= 3) throw DomainError("bertrand: n must be > 3, got " + std::to_string(n));
    if (2 * n - 2 > table.limit())
        throw RangeError("bertrand: 2n - 2 = " + std::to_string(2 * n - 2) + " beyond table limit " +
                         std::to_string(table.limit()));
}

// Calls visit(witness) for each solution in ascending x until it returns false.
template <class Visit>
void scan(const SpfTable& table, u64 n, BertrandOptions options, Visit&& visit) {
    require_n(table, n);
    if (options.via_certify) {
        for (u64 x = 1; x < n - 2; ++x)
            if (certifies_prime(table, n + x) && !visit(BertrandWitness{n, x, n + x})) return;
        return;
    }
    for (u64 x = 1; x < n - 2; ++x)
        if (table.is_prime_unchecked(n + x) && !visit(BertrandWitness{n, x, n + x})) return;
}

}  // namespace

std::vector<BertrandWitness> bertrand_solutions(const SpfTable& table, u64 n, BertrandOptions options) {
    std::vector<BertrandWitness> out;
    scan(table, n, options, [&](const BertrandWitness& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

std::optional<BertrandWitness> first_bertrand_solution(const SpfTable& table, u64 n, BertrandOptions options) {
    std::optional<BertrandWitness> first;
    scan(table, n, options, [&](const BertrandWitness& w) {
        first = w;
        return false;
    });
    return first;
}

bool count_identity_check(const SpfTable& table, const PrimePi& pi, u64 n) {
    require_n(table, n);
    if (2 * n - 2 > pi.limit()) throw RangeError("count_identity_check: 2n - 2 beyond prime-pi table");
    u64 count = 0;
    scan(table, n, {}, [&](const BertrandWitness&) {
        ++count;
        return true;
    });
    return count == pi(2 * n - 2) - pi(n);
}

}  // namespace phigold
