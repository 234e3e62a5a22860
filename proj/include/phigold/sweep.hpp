#pragma once

// Range verification: evaluate one statement for every n in [lo, hi], collect
// per-n witness counts and the n-values without a witness, and render the
// result as json, csv or an aligned text table.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phigold/arith.hpp"

namespace phigold {

enum class Task { Bertrand, Binary, Ternary, Peculiar, Proposition, Certify };

std::string_view to_string(Task task) noexcept;
std::optional<Task> parse_task(std::string_view name) noexcept;

// Whether n belongs to the task's domain (odd n > 5 for the ternary tasks,
// n > 3 for bertrand, n >= 2 otherwise). Sweeps skip values outside it.
bool in_domain(Task task, u64 n) noexcept;

// Largest value a sweep up to hi reads from the sieve.
u64 required_sieve_limit(Task task, u64 hi);

// Flags that change what a sweep computes; echoed into the report.
struct SweepConfig {
    bool first_witness_only = false;
    bool verify_against_oracle = false;
    bool via_fermat = false;
    bool timing = false;

    friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct SweepOptions {
    SweepConfig config;
    bool keep_per_n = true;
    unsigned threads = 1;
    u64 chunk_size = 0;  // 0 picks a size from the range and thread count
};

// A witness as its integer components: x for bertrand and binary, (x, y) for
// the ternary tasks, the failing modulus for a composite certify subject.
using Witness = std::vector<u64>;

struct NResult {
    u64 n = 0;
    u64 witness_count = 0;
    std::optional<Witness> first_witness;

    friend bool operator==(const NResult&, const NResult&) = default;
};

struct RangeReport {
    Task task = Task::Binary;
    u64 lo = 0;
    u64 hi = 0;
    u64 checked = 0;
    std::optional<std::vector<NResult>> per_n;
    std::vector<u64> failures;
    std::optional<std::int64_t> elapsed_ms;  // present only when config.timing
    SweepConfig config;

    bool held() const noexcept { return failures.empty(); }
    friend bool operator==(const RangeReport&, const RangeReport&) = default;
};

// Builds tables sized by required_sieve_limit under the environment's memory
// budget. DomainError for lo > hi or an oracle range past its limit,
// BudgetError when the tables do not fit.
RangeReport run_sweep(Task task, u64 lo, u64 hi, const SweepOptions& options);

// Same, over caller-provided tables.
RangeReport run_sweep(const Tables& tables, Task task, u64 lo, u64 hi, const SweepOptions& options);

enum class Format { Json, Csv, Table };

std::optional<Format> parse_format(std::string_view name) noexcept;

std::string emit_report(const RangeReport& report, Format format);

// Inverse of emit_report(report, Format::Json).
RangeReport parse_report_json(std::string_view text);

// "n count" lines for external plotting.
std::string emit_counts(const RangeReport& report);

}  // namespace phigold
