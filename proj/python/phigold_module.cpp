#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phigold/arith.hpp"
#include "phigold/bertrand.hpp"
#include "phigold/certify.hpp"
#include "phigold/error.hpp"
#include "phigold/goldbach.hpp"
#include "phigold/oracle.hpp"
#include "phigold/sweep.hpp"

namespace py = pybind11;
using namespace phigold;

namespace {

Task task_from(const std::string& name) {
    auto task = parse_task(name);
    if (!task) throw DomainError("unknown task '" + name + "'");
    return *task;
}

Format format_from(const std::string& name) {
    auto format = parse_format(name);
    if (!format) throw DomainError("unknown format '" + name + "'");
    return *format;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sieve-backed phi/nu arithmetic, Fermat-congruence certification and Goldbach/Bertrand sweeps";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetError& e) {
            PyErr_SetString(PyExc_MemoryError, e.what());
        }
    });

    py::class_<Tables>(m, "Tables")
        .def(py::init([](u64 limit) { return build_tables(limit, memory_budget_from_env()); }), py::arg("limit"))
        .def_property_readonly("limit", [](const Tables& t) { return t.spf.limit(); })
        .def("spf", [](const Tables& t, u64 a) { return t.spf.spf(a); }, py::arg("a"));

    m.def("isqrt", &isqrt, py::arg("a"));
    m.def("nu_p", [](const Tables& t, u64 p, u64 a) { return nu_p(t.spf, p, a); }, py::arg("tables"), py::arg("p"), py::arg("a"));
    m.def("nu", [](const Tables& t, u64 a) { return nu(t.spf, a); }, py::arg("tables"), py::arg("a"));
    m.def("phi", [](const Tables& t, u64 a) { return phi(t.spf, a); }, py::arg("tables"), py::arg("a"));
    m.def("is_prime", [](const Tables& t, u64 a) { return is_prime(t.spf, a); }, py::arg("tables"), py::arg("a"));
    m.def("prime_pi", [](const Tables& t, u64 x) { return prime_pi(t.pi, x); }, py::arg("tables"), py::arg("x"));

    py::class_<CongruenceCheck>(m, "CongruenceCheck")
        .def_readonly("modulus", &CongruenceCheck::modulus)
        .def_readonly("base", &CongruenceCheck::base)
        .def_readonly("exponent", &CongruenceCheck::exponent)
        .def_readonly("residue", &CongruenceCheck::residue);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("subject", &Certificate::subject)
        .def_readonly("checks", &Certificate::checks)
        .def_readonly("failing_modulus", &Certificate::failing_modulus)
        .def_property_readonly("verdict", [](const Certificate& c) { return std::string(to_string(c.verdict)); })
        .def_property_readonly("is_prime", [](const Certificate& c) { return c.verdict == Verdict::Prime; });

    m.def("fermat_congruence_holds", [](const Tables& t, u64 mm, u64 p) { return fermat_congruence_holds(t.spf, mm, p); },
          py::arg("tables"), py::arg("m"), py::arg("p"));
    m.def("certify", [](const Tables& t, u64 mm, bool record) { return certify(t.spf, mm, CertifyOptions{record}); },
          py::arg("tables"), py::arg("m"), py::arg("record_checks") = true);

    py::class_<BertrandWitness>(m, "BertrandWitness")
        .def_readonly("n", &BertrandWitness::n)
        .def_readonly("x", &BertrandWitness::x)
        .def_readonly("prime", &BertrandWitness::prime);
    m.def("bertrand_solutions",
          [](const Tables& t, u64 n, bool via_certify) { return bertrand_solutions(t.spf, n, BertrandOptions{via_certify}); },
          py::arg("tables"), py::arg("n"), py::arg("via_certify") = false);
    m.def("count_identity_check", [](const Tables& t, u64 n) { return count_identity_check(t.spf, t.pi, n); },
          py::arg("tables"), py::arg("n"));

    py::class_<BinaryWitness>(m, "BinaryWitness")
        .def_readonly("n", &BinaryWitness::n)
        .def_readonly("x", &BinaryWitness::x)
        .def_readonly("p", &BinaryWitness::p)
        .def_readonly("q", &BinaryWitness::q);
    py::class_<TernaryWitness>(m, "TernaryWitness")
        .def_readonly("n", &TernaryWitness::n)
        .def_readonly("x", &TernaryWitness::x)
        .def_readonly("y", &TernaryWitness::y)
        .def_readonly("p", &TernaryWitness::p)
        .def_readonly("q", &TernaryWitness::q)
        .def_readonly("r", &TernaryWitness::r);

    m.def("binary_solutions", [](const Tables& t, u64 n) { return binary_solutions(t.spf, n); }, py::arg("tables"), py::arg("n"));
    m.def("raw_form_solutions", [](const Tables& t, u64 n) { return raw_form_solutions(t.spf, n); }, py::arg("tables"), py::arg("n"));
    m.def("substitution_bijection_check", [](const Tables& t, u64 n) { return substitution_bijection_check(t.spf, n); },
          py::arg("tables"), py::arg("n"));
    m.def("fermat_system_solutions", [](const Tables& t, u64 n) { return fermat_system_solutions(t.spf, n); },
          py::arg("tables"), py::arg("n"));
    m.def("ternary_solutions", [](const Tables& t, u64 n) { return ternary_solutions(t.spf, n); }, py::arg("tables"), py::arg("n"));
    m.def("peculiar_solutions", [](const Tables& t, u64 n) { return peculiar_solutions(t.spf, n); }, py::arg("tables"), py::arg("n"));
    m.def("decomposition_to_xy",
          [](const Tables& t, u64 p, u64 q, u64 r, u64 n) {
              const XY xy = decomposition_to_xy(t.spf, p, q, r, n);
              return py::make_tuple(xy.x, xy.y);
          },
          py::arg("tables"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("n"));
    m.def("two_prime_sum_exists", [](const Tables& t, u64 total) { return two_prime_sum_exists(t.spf, total); },
          py::arg("tables"), py::arg("total"));
    m.def("proposition_check", [](const Tables& t, u64 n) { return proposition_check(t.spf, n); }, py::arg("tables"), py::arg("n"));

    py::module_ om = m.def_submodule("oracle", "Brute-force references");
    om.def("is_prime", &oracle::is_prime, py::arg("a"));
    om.def("phi", &oracle::phi, py::arg("a"));
    om.def("nu", &oracle::nu, py::arg("a"));
    om.def("pairs", [](u64 total) { return oracle::pairs(total).pairs; }, py::arg("total"));
    om.def("triples",
           [](u64 n) {
               py::list out;
               for (const auto& t : oracle::triples(n)) out.append(py::make_tuple(t.p, t.q, t.r));
               return out;
           },
           py::arg("n"));

    py::class_<NResult>(m, "NResult")
        .def_readonly("n", &NResult::n)
        .def_readonly("witness_count", &NResult::witness_count)
        .def_readonly("first_witness", &NResult::first_witness);

    py::class_<RangeReport>(m, "RangeReport")
        .def_property_readonly("task", [](const RangeReport& r) { return std::string(to_string(r.task)); })
        .def_readonly("lo", &RangeReport::lo)
        .def_readonly("hi", &RangeReport::hi)
        .def_readonly("checked", &RangeReport::checked)
        .def_readonly("per_n", &RangeReport::per_n)
        .def_readonly("failures", &RangeReport::failures)
        .def_readonly("elapsed_ms", &RangeReport::elapsed_ms)
        .def_property_readonly("held", &RangeReport::held)
        .def(py::self == py::self);

    m.def(
        "run_sweep",
        [](const std::string& task, u64 lo, u64 hi, bool first_witness_only, bool verify_against_oracle, bool via_fermat,
           bool timing, bool keep_per_n, unsigned threads) {
            SweepOptions options;
            options.config = {first_witness_only, verify_against_oracle, via_fermat, timing};
            options.keep_per_n = keep_per_n;
            options.threads = threads;
            const Task parsed = task_from(task);
            py::gil_scoped_release release;
            return run_sweep(parsed, lo, hi, options);
        },
        py::arg("task"), py::arg("lo"), py::arg("hi"), py::kw_only(), py::arg("first_witness_only") = false,
        py::arg("verify_against_oracle") = false, py::arg("via_fermat") = false, py::arg("timing") = false,
        py::arg("keep_per_n") = true, py::arg("threads") = 1);
    m.def("emit_report", [](const RangeReport& r, const std::string& format) { return emit_report(r, format_from(format)); },
          py::arg("report"), py::arg("format") = "json");
    m.def("parse_report_json", [](const std::string& text) { return parse_report_json(text); }, py::arg("text"));
}
