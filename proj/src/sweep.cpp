#include "phigold/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "phigold/bertrand.hpp"
#include "phigold/certify.hpp"
#include "phigold/error.hpp"
#include "phigold/goldbach.hpp"
#include "phigold/oracle.hpp"

namespace phigold {

namespace {

constexpr std::string_view kTaskNames[] = {"bertrand", "binary", "ternary", "peculiar", "proposition", "certify"};

// Keeps 2 * hi inside u64 with room to spare.
constexpr u64 kMaxHi = u64{1} << 40;

struct Outcome {
    u64 count = 0;
    std::optional<Witness> first;
    bool failed = false;
};

Witness xy_of(const TernaryWitness& w) { return {w.x, w.y}; }

std::vector<XY> oracle_xy(const SpfTable& table, u64 n, bool peculiar_only) {
    std::vector<XY> out;
    for (const oracle::Triple& t : oracle::triples(n)) {
        if (peculiar_only && t.p != 3 && t.q != 3) continue;
        out.push_back(decomposition_to_xy(table, t.p, t.q, t.r, n));
    }
    std::sort(out.begin(), out.end(), [](const XY& a, const XY& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    return out;
}

Outcome eval_bertrand(const Tables& t, u64 n, const SweepConfig& c) {
    Outcome o;
    const BertrandOptions bo{c.via_fermat};
    if (c.first_witness_only && !c.verify_against_oracle) {
        if (auto w = first_bertrand_solution(t.spf, n, bo)) {
            o.count = 1;
            o.first = Witness{w->x};
        }
        o.failed = o.count == 0;
        return o;
    }
    const auto sols = bertrand_solutions(t.spf, n, bo);
    o.count = sols.size();
    if (!sols.empty()) o.first = Witness{sols.front().x};
    o.failed = sols.empty() || o.count != t.pi(2 * n - 2) - t.pi(n);
    if (c.verify_against_oracle) {
        u64 expected = 0;
        for (u64 m = n + 1; m + 2 < 2 * n; ++m)
            if (oracle::is_prime(m)) ++expected;
        o.failed = o.failed || expected != o.count;
    }
    if (c.first_witness_only) o.count = std::min<u64>(o.count, 1);
    return o;
}

Outcome eval_binary(const Tables& t, u64 n, const SweepConfig& c) {
    Outcome o;
    if (c.via_fermat && n > 3) {
        const auto xs = fermat_system_solutions(t.spf, n);
        o.count = xs.size();
        if (!xs.empty()) o.first = Witness{xs.front()};
    } else if (c.first_witness_only && !c.verify_against_oracle) {
        if (auto w = first_binary_solution(t.spf, n)) {
            o.count = 1;
            o.first = Witness{w->x};
        }
    } else {
        visit_binary_solutions(t.spf, n, [&](const BinaryWitness& w) {
            if (o.count++ == 0) o.first = Witness{w.x};
            return true;
        });
    }
    o.failed = o.count == 0;
    // Every prime pair of 2n is some (n - x, n + x) with x <= n - 3, except 2 + 2.
    if (c.verify_against_oracle) o.failed = o.failed || oracle::pairs(2 * n).pairs.size() != o.count;
    if (c.first_witness_only) o.count = std::min<u64>(o.count, 1);
    return o;
}

Outcome eval_ternary(const Tables& t, u64 n, const SweepConfig& c, bool peculiar) {
    Outcome o;
    if (c.first_witness_only && !c.verify_against_oracle) {
        auto w = peculiar ? first_peculiar_solution(t.spf, n) : first_ternary_solution(t.spf, n);
        if (w) {
            o.count = 1;
            o.first = xy_of(*w);
        }
        o.failed = o.count == 0;
        return o;
    }
    const auto sols = peculiar ? peculiar_solutions(t.spf, n) : ternary_solutions(t.spf, n);
    o.count = sols.size();
    if (!sols.empty()) o.first = xy_of(sols.front());
    o.failed = sols.empty();
    if (c.verify_against_oracle) {
        std::vector<XY> ours;
        for (const auto& w : sols) ours.push_back({w.x, w.y});
        o.failed = o.failed || ours != oracle_xy(t.spf, n, peculiar);
    }
    if (c.first_witness_only) o.count = std::min<u64>(o.count, 1);
    return o;
}

Outcome eval_proposition(const Tables& t, u64 n, const SweepConfig& c) {
    Outcome o = eval_ternary(t, n, SweepConfig{c.first_witness_only, false, false, false}, true);
    o.failed = !proposition_check(t.spf, n);
    if (c.verify_against_oracle) {
        const bool oracle_side = !oracle::pairs(n - 3).pairs.empty();
        o.failed = o.failed || oracle_side != (o.count > 0);
    }
    return o;
}

Outcome eval_certify(const Tables& t, u64 m, const SweepConfig& c) {
    Outcome o;
    const Certificate cert = certify(t.spf, m, CertifyOptions{false});
    o.count = 1;
    if (cert.failing_modulus) o.first = Witness{*cert.failing_modulus};
    const bool truth = c.verify_against_oracle ? oracle::is_prime(m) : is_prime(t.spf, m);
    o.failed = (cert.verdict == Verdict::Prime) != truth;
    return o;
}

Outcome evaluate(const Tables& t, Task task, u64 n, const SweepConfig& c) {
    switch (task) {
        case Task::Bertrand: return eval_bertrand(t, n, c);
        case Task::Binary: return eval_binary(t, n, c);
        case Task::Ternary: return eval_ternary(t, n, c, false);
        case Task::Peculiar: return eval_ternary(t, n, c, true);
        case Task::Proposition: return eval_proposition(t, n, c);
        case Task::Certify: return eval_certify(t, n, c);
    }
    return {};
}

struct ChunkResult {
    u64 checked = 0;
    std::vector<NResult> per_n;
    std::vector<u64> failures;
};

ChunkResult run_chunk(const Tables& t, Task task, u64 from, u64 to, const SweepOptions& options) {
    ChunkResult r;
    for (u64 n = from; n <= to; ++n) {
        if (!in_domain(task, n)) continue;
        ++r.checked;
        Outcome o = evaluate(t, task, n, options.config);
        if (o.failed) r.failures.push_back(n);
        if (options.keep_per_n) r.per_n.push_back(NResult{n, o.count, std::move(o.first)});
    }
    return r;
}

void validate(Task task, u64 lo, u64 hi, const SweepOptions& options) {
    if (lo > hi) throw DomainError("sweep: empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    if (hi > kMaxHi) throw BudgetError("sweep: upper bound " + std::to_string(hi) + " too large");
    if (options.threads == 0) throw DomainError("sweep: thread count must be >= 1");
    if (options.config.verify_against_oracle && required_sieve_limit(task, hi) > oracle::kDefaultLimit)
        throw DomainError("sweep: oracle verification limited to values <= " + std::to_string(oracle::kDefaultLimit));
}

}  // namespace

std::string_view to_string(Task task) noexcept { return kTaskNames[static_cast<int>(task)]; }

std::optional<Task> parse_task(std::string_view name) noexcept {
    for (int i = 0; i < 6; ++i)
        if (kTaskNames[i] == name) return static_cast<Task>(i);
    return std::nullopt;
}

bool in_domain(Task task, u64 n) noexcept {
    switch (task) {
        case Task::Bertrand: return n > 3;
        case Task::Binary:
        case Task::Certify: return n >= 2;
        case Task::Ternary:
        case Task::Peculiar:
        case Task::Proposition: return n > 5 && n % 2 == 1;
    }
    return false;
}

u64 required_sieve_limit(Task task, u64 hi) {
    u64 limit = hi;
    if (task == Task::Bertrand) limit = hi >= 2 ? 2 * hi - 2 : 2;
    if (task == Task::Binary) limit = 2 * hi;
    return std::max<u64>(limit, 2);
}

RangeReport run_sweep(Task task, u64 lo, u64 hi, const SweepOptions& options) {
    validate(task, lo, hi, options);
    const Tables tables = build_tables(required_sieve_limit(task, hi), memory_budget_from_env());
    return run_sweep(tables, task, lo, hi, options);
}

RangeReport run_sweep(const Tables& tables, Task task, u64 lo, u64 hi, const SweepOptions& options) {
    validate(task, lo, hi, options);
    const u64 need = required_sieve_limit(task, hi);
    if (need > tables.spf.limit() || need > tables.pi.limit())
        throw RangeError("sweep: range needs tables up to " + std::to_string(need) + ", have " +
                         std::to_string(tables.spf.limit()));

    const auto start = std::chrono::steady_clock::now();
    const u64 span = hi - lo + 1;
    const unsigned threads = options.threads;
    const u64 chunk = options.chunk_size != 0 ? options.chunk_size
                                              : std::max<u64>(1, std::min<u64>(4096, span / (u64{threads} * 8) + 1));
    const u64 chunk_count = (span + chunk - 1) / chunk;

    std::vector<ChunkResult> results(chunk_count);
    std::atomic<u64> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (u64 i = next++; i < chunk_count; i = next++) {
            const u64 from = lo + i * chunk;
            const u64 to = std::min(hi, from + chunk - 1);
            try {
                results[i] = run_chunk(tables, task, from, to, options);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = chunk_count;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    RangeReport report;
    report.task = task;
    report.lo = lo;
    report.hi = hi;
    report.config = options.config;
    if (options.keep_per_n) report.per_n.emplace();
    for (ChunkResult& r : results) {
        report.checked += r.checked;
        report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
        if (report.per_n)
            report.per_n->insert(report.per_n->end(), std::make_move_iterator(r.per_n.begin()),
                                 std::make_move_iterator(r.per_n.end()));
    }
    if (options.config.timing)
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace phigold
