// phigold: range verifier for the phi-equation forms of Bertrand's postulate
// and the binary/ternary Goldbach statements.
//
// Exit codes: 0 the statement held on the whole range, 1 some n had no
// witness, 2 usage error, 3 resource limit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "phigold/arith.hpp"
#include "phigold/certify.hpp"
#include "phigold/error.hpp"
#include "phigold/sweep.hpp"

namespace {

using phigold::u64;

constexpr int kExitHeld = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Args {
    std::optional<u64> value;
    std::optional<u64> from;
    std::optional<u64> to;
    std::string format = "table";
    std::string out;
    std::string emit_counts;
    bool first_witness_only = false;
    bool verify_against_oracle = false;
    bool via_fermat = false;
    bool timing = false;
    bool summary = false;
    unsigned threads = 1;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw phigold::DomainError("cannot open output file '" + path + "'");
    file << text;
}

std::string certificate_text(const phigold::Certificate& cert, phigold::Format format) {
    switch (format) {
        case phigold::Format::Json: {
            nlohmann::ordered_json j;
            j["subject"] = cert.subject;
            j["verdict"] = phigold::to_string(cert.verdict);
            j["failing_modulus"] = cert.failing_modulus ? nlohmann::ordered_json(*cert.failing_modulus) : nlohmann::ordered_json(nullptr);
            auto& checks = j["checks"] = nlohmann::ordered_json::array();
            for (const auto& c : cert.checks)
                checks.push_back({{"modulus", c.modulus}, {"base", c.base}, {"exponent", c.exponent}, {"residue", c.residue}});
            return j.dump(2) + "\n";
        }
        case phigold::Format::Csv: {
            std::string out = "modulus,base,exponent,residue\n";
            for (const auto& c : cert.checks)
                out += std::to_string(c.modulus) + ',' + std::to_string(c.base) + ',' + std::to_string(c.exponent) +
                       ',' + std::to_string(c.residue) + '\n';
            return out;
        }
        case phigold::Format::Table: {
            std::string out = std::to_string(cert.subject) + ": " + phigold::to_string(cert.verdict);
            if (cert.failing_modulus) out += " (fails mod " + std::to_string(*cert.failing_modulus) + ")";
            out += '\n';
            for (const auto& c : cert.checks)
                out += "  " + std::to_string(c.base) + "^" + std::to_string(c.exponent) + " mod " +
                       std::to_string(c.modulus) + " = " + std::to_string(c.residue) + '\n';
            return out;
        }
    }
    return {};
}

int run(phigold::Task task, const Args& args) {
    const auto format = phigold::parse_format(args.format);
    if (!format) throw phigold::DomainError("unknown format '" + args.format + "' (json, csv, table)");

    // certify with a single subject prints its certificate rather than a sweep.
    if (task == phigold::Task::Certify && args.value && !args.from && !args.to) {
        const u64 m = *args.value;
        if (m < 2) throw phigold::DomainError("certify: subject must be >= 2");
        const auto table = phigold::build_spf(std::max<u64>(2, phigold::isqrt(m)), phigold::memory_budget_from_env());
        write_output(args.out, certificate_text(phigold::certify(table, m), *format));
        return kExitHeld;
    }

    std::optional<u64> lo = args.from;
    std::optional<u64> hi = args.to;
    if (args.value) {
        if (lo || hi) throw phigold::DomainError("give either a single value or --from/--to, not both");
        lo = hi = args.value;
    }
    if (!lo || !hi) throw phigold::DomainError("a range is required: --from N --to M (or a single value)");

    phigold::SweepOptions options;
    options.config = {args.first_witness_only, args.verify_against_oracle, args.via_fermat, args.timing};
    options.keep_per_n = !args.summary || !args.emit_counts.empty();
    options.threads = args.threads;

    const auto start = std::chrono::steady_clock::now();
    phigold::RangeReport report = phigold::run_sweep(task, *lo, *hi, options);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    if (!args.emit_counts.empty()) write_output(args.emit_counts, phigold::emit_counts(report));
    if (args.summary) report.per_n.reset();
    write_output(args.out, phigold::emit_report(report, *format));

    std::cerr << "phigold " << phigold::to_string(task) << " [" << *lo << ", " << *hi << "]: " << report.checked
              << " checked, " << report.failures.size() << " failures, " << ms << " ms\n";
    if (report.held()) return kExitHeld;
    for (u64 n : report.failures) std::cerr << "no witness: n = " << n << '\n';
    return kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify phi-equation forms of Bertrand's postulate and the Goldbach statements over ranges"};
    app.require_subcommand(1);

    Args args;
    struct Entry {
        phigold::Task task;
        const char* help;
        CLI::App* cmd = nullptr;
    };
    Entry entries[] = {
        {phigold::Task::Certify, "Fermat congruence certification of m (or every m in a range)"},
        {phigold::Task::Bertrand, "phi(n+x)+1 = n+x with 0 < x < n-2"},
        {phigold::Task::Binary, "n-x, n+x both prime with 0 <= x <= n-3"},
        {phigold::Task::Ternary, "(n-x-y, 2x-n, n-x+y) all prime, odd n > 5"},
        {phigold::Task::Peculiar, "ternary witnesses with (n-x-y)(2x-n) = 0 mod 3"},
        {phigold::Task::Proposition, "peculiar case for n <=> n-3 is a sum of two primes"},
    };
    for (Entry& e : entries) {
        CLI::App* cmd = app.add_subcommand(std::string(phigold::to_string(e.task)), e.help);
        cmd->add_option("value", args.value, e.task == phigold::Task::Certify ? "Subject m" : "Single n");
        cmd->add_option("--from", args.from, "First n of the range");
        cmd->add_option("--to", args.to, "Last n of the range");
        cmd->add_option("--format", args.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--out", args.out, "Write the report here instead of standard output");
        cmd->add_option("--emit-counts", args.emit_counts, "Also write 'n count' lines to this file");
        cmd->add_option("--threads", args.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
        cmd->add_flag("--first-witness-only", args.first_witness_only, "Stop at the first witness per n");
        cmd->add_flag("--verify-against-oracle", args.verify_against_oracle, "Cross-check every n by brute force");
        cmd->add_flag("--via-fermat", args.via_fermat, "Decide primality through the Fermat congruence systems");
        cmd->add_flag("--timing", args.timing, "Include elapsed time in the report");
        cmd->add_flag("--summary", args.summary, "Omit per-n rows from the report");
        e.cmd = cmd;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        for (const Entry& e : entries)
            if (e.cmd->parsed()) return run(e.task, args);
    } catch (const phigold::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const phigold::BudgetError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const phigold::RangeError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return kExitResource;
    }
    return kExitUsage;
}
