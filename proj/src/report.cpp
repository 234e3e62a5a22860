#include <algorithm>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "phigold/error.hpp"
#include "phigold/sweep.hpp"

namespace phigold {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    if (w->size() == 1) return w->front();
    return *w;
}

std::optional<Witness> witness_from_json(const ordered_json& j) {
    if (j.is_null()) return std::nullopt;
    if (j.is_number_unsigned()) return Witness{j.get<u64>()};
    return j.get<Witness>();
}

std::string witness_text(const std::optional<Witness>& w) {
    if (!w) return "";
    if (w->size() == 1) return std::to_string(w->front());
    std::string out = "(";
    for (std::size_t i = 0; i < w->size(); ++i) {
        if (i) out += ',';
        out += std::to_string((*w)[i]);
    }
    return out + ")";
}

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return '"' + s + '"';
}

std::string emit_json(const RangeReport& r) {
    ordered_json j;
    j["task"] = std::string(to_string(r.task));
    j["range"] = {r.lo, r.hi};
    j["checked"] = r.checked;
    if (r.per_n) {
        ordered_json rows = ordered_json::array();
        for (const NResult& row : *r.per_n)
            rows.push_back({{"n", row.n}, {"witness_count", row.witness_count}, {"first_witness", witness_json(row.first_witness)}});
        j["per_n"] = std::move(rows);
    } else {
        j["per_n"] = nullptr;
    }
    j["failures"] = r.failures;
    j["config"] = {{"first_witness_only", r.config.first_witness_only},
                   {"verify_against_oracle", r.config.verify_against_oracle},
                   {"via_fermat", r.config.via_fermat},
                   {"timing", r.config.timing}};
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string emit_csv(const RangeReport& r) {
    std::string out = "n,witness_count,first_witness\n";
    if (!r.per_n) return out;
    for (const NResult& row : *r.per_n)
        out += std::to_string(row.n) + ',' + std::to_string(row.witness_count) + ',' +
               csv_field(witness_text(row.first_witness)) + '\n';
    return out;
}

std::string emit_table(const RangeReport& r) {
    std::ostringstream out;
    out << "task        " << to_string(r.task) << '\n'
        << "range       [" << r.lo << ", " << r.hi << "]\n"
        << "checked     " << r.checked << '\n'
        << "failures    " << r.failures.size();
    if (!r.failures.empty()) {
        out << "  (";
        const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) out << (i ? " " : "") << r.failures[i];
        if (shown < r.failures.size()) out << " ...";
        out << ')';
    }
    out << '\n';
    if (r.elapsed_ms) out << "elapsed     " << *r.elapsed_ms << " ms\n";
    if (!r.per_n) return out.str();

    std::size_t wn = 1, wc = 13;
    for (const NResult& row : *r.per_n) {
        wn = std::max(wn, std::to_string(row.n).size());
        wc = std::max(wc, std::to_string(row.witness_count).size());
    }
    auto pad = [](std::string s, std::size_t w) {
        s.insert(0, w > s.size() ? w - s.size() : 0, ' ');
        return s;
    };
    out << '\n' << pad("n", wn) << "  " << pad("witness_count", wc) << "  first_witness\n";
    for (const NResult& row : *r.per_n)
        out << pad(std::to_string(row.n), wn) << "  " << pad(std::to_string(row.witness_count), wc) << "  "
            << witness_text(row.first_witness) << '\n';
    return out.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "table") return Format::Table;
    return std::nullopt;
}

std::string emit_report(const RangeReport& report, Format format) {
    switch (format) {
        case Format::Json: return emit_json(report);
        case Format::Csv: return emit_csv(report);
        case Format::Table: return emit_table(report);
    }
    throw DomainError("emit_report: unknown format");
}

RangeReport parse_report_json(std::string_view text) {
    try {
        const ordered_json j = ordered_json::parse(text);
        RangeReport r;
        const auto task = parse_task(j.at("task").get<std::string>());
        if (!task) throw DomainError("parse_report_json: unknown task");
        r.task = *task;
        r.lo = j.at("range").at(0).get<u64>();
        r.hi = j.at("range").at(1).get<u64>();
        r.checked = j.at("checked").get<u64>();
        if (!j.at("per_n").is_null()) {
            r.per_n.emplace();
            for (const auto& row : j.at("per_n"))
                r.per_n->push_back(NResult{row.at("n").get<u64>(), row.at("witness_count").get<u64>(),
                                           witness_from_json(row.at("first_witness"))});
        }
        r.failures = j.at("failures").get<std::vector<u64>>();
        const auto& c = j.at("config");
        r.config = SweepConfig{c.at("first_witness_only").get<bool>(), c.at("verify_against_oracle").get<bool>(),
                               c.at("via_fermat").get<bool>(), c.at("timing").get<bool>()};
        if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("parse_report_json: ") + e.what());
    }
}

std::string emit_counts(const RangeReport& report) {
    std::string out;
    if (!report.per_n) return out;
    for (const NResult& row : *report.per_n) out += std::to_string(row.n) + ' ' + std::to_string(row.witness_count) + '\n';
    return out;
}

}  // namespace phigold
