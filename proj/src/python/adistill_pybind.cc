// Copyright 2026 The adistill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the core library.  The module is deliberately thin: it
// exposes value types and free functions with Python-friendly names and lets
// C++ exceptions propagate as ValueError / RuntimeError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adistill/code_book.h"
#include "adistill/convergence.h"
#include "adistill/efficiency.h"
#include "adistill/grid.h"
#include "adistill/hybrid.h"
#include "adistill/lookup_table_decoder.h"
#include "adistill/pauli_string.h"
#include "adistill/purification.h"
#include "adistill/purification_circuit.h"
#include "adistill/repeater_chain.h"
#include "adistill/stabilizer_code.h"
#include "adistill/werner.h"

namespace py = pybind11;
using namespace adistill;

namespace {

PurificationProtocol protocol_arg(const std::string &name) { return parse_protocol(name); }

py::dict distribution_dict(const PauliDistribution &d) {
    py::dict out;
    out["p_i"] = d.p_i;
    out["p_x"] = d.p_x;
    out["p_y"] = d.p_y;
    out["p_z"] = d.p_z;
    return out;
}

const CodeBook::Entry &builtin_entry(const std::string &name) { return CodeBook::builtin().at(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entanglement distillation with stabilizer codes and recurrence purification.";

    py::class_<PauliString>(m, "PauliString")
        .def(py::init([](const std::string &text) { return PauliString::from_str(text); }), py::arg("text"))
        .def_property_readonly("num_qubits", &PauliString::num_qubits)
        .def_property_readonly("weight", &PauliString::weight)
        .def_property_readonly("log_i", &PauliString::log_i)
        .def("commutes", &PauliString::commutes_with, py::arg("other"))
        .def("letters", &PauliString::letters)
        .def("__mul__", [](const PauliString &a, const PauliString &b) { return a * b; })
        .def("__eq__", [](const PauliString &a, const PauliString &b) { return a == b; })
        .def("__len__", &PauliString::num_qubits)
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "adistill.PauliString(\"" + p.str() + "\")"; });

    py::class_<StabilizerCode>(m, "StabilizerCode")
        .def_readonly("name", &StabilizerCode::name)
        .def_readonly("n", &StabilizerCode::n)
        .def_readonly("k", &StabilizerCode::k)
        .def_readonly("d", &StabilizerCode::d)
        .def_readonly("stabilizers", &StabilizerCode::stabilizers)
        .def_readonly("logical_x", &StabilizerCode::logical_x)
        .def_readonly("logical_z", &StabilizerCode::logical_z)
        .def("__repr__", [](const StabilizerCode &c) {
            return "adistill.StabilizerCode(" + c.name + ", [[" + std::to_string(c.n) + "," + std::to_string(c.k) +
                   "," + std::to_string(c.d) + "]])";
        });

    m.def("builtin_code_names", &builtin_code_names);
    m.def("builtin_code", [](const std::string &name) { return builtin_code(name); }, py::arg("name"));
    m.def("parse_code_text", [](const std::string &text) { return parse_code_text(text); }, py::arg("text"));
    m.def(
        "validate_code",
        [](const StabilizerCode &code, bool verify_distance) {
            ValidationReport report = validate_code(code, verify_distance);
            py::list checks;
            for (const auto &c : report.checks) {
                checks.append(py::make_tuple(c.name, c.passed, c.detail));
            }
            return py::make_tuple(report.ok(), checks);
        },
        py::arg("code"), py::arg("verify_distance") = false,
        "Returns (ok, [(check_name, passed, detail), ...]).");
    m.def(
        "syndrome",
        [](const StabilizerCode &code, const PauliString &error) { return syndrome_of(code, error).bits; },
        py::arg("code"), py::arg("error"), "Syndrome bits; bit i is the outcome of stabilizer i.");
    m.def(
        "correction",
        [](const std::string &name, const PauliString &error) {
            const auto &entry = builtin_entry(name);
            return entry.table.correction(syndrome_of(entry.code, error));
        },
        py::arg("code_name"), py::arg("error"), "Lookup-table correction for the error's syndrome.");
    m.def(
        "is_corrected",
        [](const std::string &name, const PauliString &error) {
            return classify_error(builtin_entry(name).table, error).corrected;
        },
        py::arg("code_name"), py::arg("error"));
    m.def(
        "corrected_by_weight", [](const std::string &name) { return builtin_entry(name).polynomial.counts; },
        py::arg("code_name"), "Number of correctable errors of each weight 0..n.");
    m.def(
        "qec_map", [](const std::string &name, double f) { return eval_qec_map(builtin_entry(name).polynomial, f); },
        py::arg("code_name"), py::arg("f_in"));
    m.def(
        "pseudo_threshold", [](const std::string &name) { return pseudo_threshold(builtin_entry(name).polynomial); },
        py::arg("code_name"));

    m.attr("HASHING_THRESHOLD_FIDELITY") = kHashingThresholdFidelity;
    m.def("werner_from_fidelity", &werner_from_fidelity, py::arg("fidelity"));
    m.def("fidelity_from_werner", &fidelity_from_werner, py::arg("werner"));
    m.def("distillable_entanglement", &distillable_entanglement, py::arg("fidelity"));
    m.def(
        "swap_fidelity", [](const std::vector<double> &fs) { return swap_fidelity(fs); }, py::arg("fidelities"));

    m.def(
        "chain_fidelity", [](const std::string &plan, double f) { return run_chain(ChainPlan::parse(plan), f); },
        py::arg("plan"), py::arg("f_in"), "Output fidelity of a chain plan such as \"repeaters=1; rounds=513,skip,skip\".");
    m.def(
        "chain_rate",
        [](const std::string &plan) {
            RoundAccounting acc = rate_accounting(ChainPlan::parse(plan));
            return py::make_tuple(acc.pairs_delivered(), acc.pairs_consumed());
        },
        py::arg("plan"), "(pairs_delivered, pairs_consumed) for a chain plan.");
    m.def(
        "standard_protocol",
        [](const std::string &label, int n_repeaters) { return standard_protocol(label, n_repeaters).plan.str(); },
        py::arg("label"), py::arg("n_repeaters"));
    m.def(
        "efficiency", [](const std::string &plan, double f) { return efficiency(ChainPlan::parse(plan), f); },
        py::arg("plan"), py::arg("f_in"));
    m.def(
        "switching_points",
        [](int n_repeaters, const std::string &grid) {
            std::vector<double> values = GridSpec::parse(grid).values();
            std::vector<EfficiencyCurve> curves;
            for (const auto &plan : standard_protocols(n_repeaters)) {
                curves.push_back(efficiency_curve(plan, values));
            }
            py::list out;
            for (const auto &sp : switching_points(curves)) {
                out.append(py::make_tuple(sp.from, sp.to, sp.f_sw ? py::cast(*sp.f_sw) : py::none()));
            }
            return out;
        },
        py::arg("n_repeaters"), py::arg("grid") = "0.85:1:2000",
        "[(from, to, f_sw or None), ...] for the four standard protocols.");

    m.def(
        "purify_step",
        [](const std::string &protocol, std::array<double, 4> dist) {
            PurifyStep step = purify_step(protocol_arg(protocol), {dist[0], dist[1], dist[2], dist[3]});
            return py::make_tuple(distribution_dict(step.normalized), step.p_discard);
        },
        py::arg("protocol"), py::arg("dist"), "One round on (p_i, p_x, p_y, p_z); returns (normalized, p_discard).");
    m.def(
        "circuit_purify_step",
        [](const std::string &protocol, std::array<double, 4> dist) {
            PurifyStep step = circuit_oracle(protocol_arg(protocol), {dist[0], dist[1], dist[2], dist[3]});
            return py::make_tuple(distribution_dict(step.normalized), step.p_discard);
        },
        py::arg("protocol"), py::arg("dist"), "Same as purify_step but via Pauli-frame circuit propagation.");
    m.def(
        "purify_rounds",
        [](const std::string &protocol, double f_in, int rounds, bool twirl) {
            PurificationTrace trace = run_rounds(protocol_arg(protocol), twirl, f_in, rounds);
            py::list out;
            for (const auto &r : trace.rounds) {
                py::dict row = distribution_dict(r.dist);
                row["round"] = r.round;
                row["p_discard"] = r.p_discard;
                row["p_total_discard"] = r.p_total_discard;
                row["rate"] = r.rate;
                out.append(row);
            }
            return out;
        },
        py::arg("protocol"), py::arg("f_in"), py::arg("rounds"), py::arg("twirl") = false);

    m.def(
        "hybrid",
        [](double f_in, const std::string &code_name, int max_rounds) {
            const auto &poly = builtin_entry(code_name).polynomial;
            HybridResult r = hybrid_run(f_in, poly, pseudo_threshold(poly), max_rounds);
            py::dict out;
            out["f_in"] = r.f_in;
            out["i_pre"] = r.i_pre;
            out["f_at_threshold"] = r.f_at_threshold;
            out["p_total_discard"] = r.p_total_discard;
            out["f_out"] = r.f_out;
            out["rate_1g"] = r.rate_1g;
            out["rate_2g"] = r.rate_2g;
            out["rate"] = r.rate;
            out["i_match"] = r.i_match ? py::cast(*r.i_match) : py::none();
            return out;
        },
        py::arg("f_in"), py::arg("code_name") = "933", py::arg("max_rounds") = kDefaultMaxRounds);

    m.def(
        "converge",
        [](const std::string &protocol, std::array<double, 4> start, int n_max) {
            ConvergenceTrace trace = iterate(protocol_arg(protocol), start, n_max);
            IdentityReport report = check_identities(trace);
            py::list steps;
            for (const auto &s : trace.steps) {
                steps.append(py::make_tuple(s.a, s.b, s.c, s.d));
            }
            py::list checks;
            for (const auto &c : report.checks) {
                checks.append(py::make_tuple(c.name, c.passed, c.detail));
            }
            return py::make_tuple(steps, checks);
        },
        py::arg("protocol"), py::arg("start"), py::arg("n_max") = 60,
        "Iterates the recurrence; returns ([(a, b, c, d), ...], [(check, passed, detail), ...]).");
}
