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

#include "adistill/stabilizer_code.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace adistill {

namespace {

struct CodeSpec {
    const char *name;
    size_t n, k, d;
    std::vector<const char *> h, x, z;
};

const std::vector<CodeSpec> &code_specs() {
    static const std::vector<CodeSpec> specs = {
        {"913",
         9,
         1,
         3,
         {"YIZIIIIXY", "ZYZIIIIIX", "ZZYIIIIXI", "IIIXIIIII", "IIIIXIIII", "IIIIIXIII", "IIIIIIXII", "IZZIIIIZZ"},
         {"ZIIIIIIXX"},
         {"ZZIIIIIIZ"}},
        {"923",
         9,
         2,
         3,
         {"YZZZIIXII", "ZYZIZIXYY", "ZIYZIIXYX", "ZIIXIIIIY", "IIZIYIIXI", "IIIIIXIII", "ZZZZZIZZZ"},
         {"IZZIIIXXI", "IZIZIIXIX"},
         {"IZZIZIIZI", "IZZZIIIIZ"}},
        {"933",
         9,
         3,
         3,
         {"YZIZIIYXX", "IXZZIXYIY", "ZIYZIXIYX", "IZIYIXXYZ", "IIIIXIIII", "ZZZZIZZZZ"},
         {"ZZIIIXXII", "IIZZIXIXI", "IZIZIXIIX"},
         {"ZZIZIIZII", "ZIZZIIIZI", "ZZZIIIIIZ"}},
        // Five-qubit perfect code, cyclic generators.
        {"513", 5, 1, 3, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, {"XXXXX"}, {"ZZZZZ"}},
        // Steane code.
        {"713",
         7,
         1,
         3,
         {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"},
         {"XXXXXXX"},
         {"ZZZZZZZ"}},
    };
    return specs;
}

std::vector<PauliString> parse_all(const std::vector<const char *> &rows) {
    std::vector<PauliString> out;
    for (const char *r : rows) {
        out.push_back(PauliString::from_str(r));
    }
    return out;
}

ValidationCheck check(std::string name, bool passed, std::string detail = "") {
    return ValidationCheck{std::move(name), passed, passed ? "" : std::move(detail)};
}

// Exhaustive search for a nontrivial logical of weight below d.
ValidationCheck check_distance(const StabilizerCode &code) {
    if (code.n > 9) {
        return ValidationCheck{"distance", true, "skipped: exhaustive check limited to n <= 9"};
    }
    std::vector<PauliString> logicals = code.logical_x;
    logicals.insert(logicals.end(), code.logical_z.begin(), code.logical_z.end());
    uint64_t limit = uint64_t{1} << (2 * code.n);
    for (uint64_t bits = 1; bits < limit; bits++) {
        uint64_t xm = bits & ((uint64_t{1} << code.n) - 1);
        uint64_t zm = bits >> code.n;
        size_t w = std::popcount(xm | zm);
        if (w >= code.d) {
            continue;
        }
        PauliString p = PauliString::from_masks(code.n, xm, zm);
        bool in_normalizer = std::all_of(
            code.stabilizers.begin(), code.stabilizers.end(), [&](const PauliString &s) { return p.commutes_with(s); });
        if (!in_normalizer) {
            continue;
        }
        bool nontrivial = std::any_of(
            logicals.begin(), logicals.end(), [&](const PauliString &l) { return !p.commutes_with(l); });
        if (nontrivial) {
            return check("distance", false,
                         "logical operator " + p.letters() + " has weight " + std::to_string(w) + " < d=" +
                             std::to_string(code.d));
        }
    }
    return check("distance", true);
}

}  // namespace

std::vector<std::string> builtin_code_names() {
    std::vector<std::string> names;
    for (const auto &spec : code_specs()) {
        names.emplace_back(spec.name);
    }
    return names;
}

StabilizerCode builtin_code(std::string_view name) {
    for (const auto &spec : code_specs()) {
        if (name == spec.name) {
            return StabilizerCode{
                spec.name, spec.n, spec.k, spec.d, parse_all(spec.h), parse_all(spec.x), parse_all(spec.z)};
        }
    }
    throw std::out_of_range("Unknown builtin code '" + std::string(name) + "'");
}

size_t symplectic_rank(const std::vector<PauliString> &rows) {
    if (rows.empty()) {
        return 0;
    }
    size_t n = rows.front().num_qubits();
    std::vector<std::vector<bool>> m;
    for (const auto &r : rows) {
        std::vector<bool> v(2 * n);
        for (size_t q = 0; q < n; q++) {
            v[q] = r.x(q);
            v[n + q] = r.z(q);
        }
        m.push_back(std::move(v));
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < m.size(); col++) {
        size_t pivot = rank;
        while (pivot < m.size() && !m[pivot][col]) {
            pivot++;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[rank], m[pivot]);
        for (size_t r = 0; r < m.size(); r++) {
            if (r != rank && m[r][col]) {
                for (size_t c = col; c < 2 * n; c++) {
                    m[r][c] = m[r][c] ^ m[rank][c];
                }
            }
        }
        rank++;
    }
    return rank;
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck &c) { return c.passed; });
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    for (const auto &c : checks) {
        out << (c.passed ? "pass" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) {
            out << "  (" << c.detail << ")";
        }
        out << "\n";
    }
    return out.str();
}

ValidationReport validate_code(const StabilizerCode &code, bool verify_distance) {
    ValidationReport report;
    auto &checks = report.checks;

    bool sizes_ok = true;
    std::string bad;
    for (const auto *group : {&code.stabilizers, &code.logical_x, &code.logical_z}) {
        for (const auto &p : *group) {
            if (p.num_qubits() != code.n) {
                sizes_ok = false;
                bad = p.letters();
            }
        }
    }
    checks.push_back(check("operator sizes", sizes_ok, "operator " + bad + " does not act on n qubits"));
    if (!sizes_ok) {
        return report;
    }

    bool counts_ok = code.k <= code.n && code.stabilizers.size() == code.n - code.k &&
                     code.logical_x.size() == code.k && code.logical_z.size() == code.k;
    checks.push_back(check("generator counts", counts_ok,
                           std::to_string(code.stabilizers.size()) + " stabilizers, " +
                               std::to_string(code.logical_x.size()) + "/" + std::to_string(code.logical_z.size()) +
                               " logicals for n=" + std::to_string(code.n) + ", k=" + std::to_string(code.k)));

    size_t rank = symplectic_rank(code.stabilizers);
    checks.push_back(check("independence", rank == code.stabilizers.size() && rank + code.k == code.n,
                           "symplectic rank " + std::to_string(rank) + ", expected " +
                               std::to_string(code.n - std::min(code.k, code.n))));

    std::string anti;
    for (size_t i = 0; i < code.stabilizers.size() && anti.empty(); i++) {
        for (size_t j = i + 1; j < code.stabilizers.size(); j++) {
            if (!code.stabilizers[i].commutes_with(code.stabilizers[j])) {
                anti = "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute";
                break;
            }
        }
    }
    checks.push_back(check("stabilizers commute", anti.empty(), anti));

    std::string logical_bad;
    for (const auto *group : {&code.logical_x, &code.logical_z}) {
        for (const auto &l : *group) {
            for (size_t i = 0; i < code.stabilizers.size(); i++) {
                if (!l.commutes_with(code.stabilizers[i]) && logical_bad.empty()) {
                    logical_bad = l.letters() + " anticommutes with stabilizer " + std::to_string(i);
                }
            }
        }
    }
    checks.push_back(check("logicals commute with stabilizers", logical_bad.empty(), logical_bad));

    std::string pattern_bad;
    for (size_t i = 0; i < code.logical_x.size(); i++) {
        for (size_t j = 0; j < code.logical_z.size(); j++) {
            bool anticommute = !code.logical_x[i].commutes_with(code.logical_z[j]);
            if (anticommute != (i == j) && pattern_bad.empty()) {
                pattern_bad = "X" + std::to_string(i) + "/Z" + std::to_string(j) +
                              (anticommute ? " anticommute" : " commute");
            }
        }
        for (size_t j = i + 1; j < code.logical_x.size(); j++) {
            if (!code.logical_x[i].commutes_with(code.logical_x[j]) && pattern_bad.empty()) {
                pattern_bad = "X" + std::to_string(i) + "/X" + std::to_string(j) + " anticommute";
            }
            if (!code.logical_z[i].commutes_with(code.logical_z[j]) && pattern_bad.empty()) {
                pattern_bad = "Z" + std::to_string(i) + "/Z" + std::to_string(j) + " anticommute";
            }
        }
    }
    checks.push_back(check("logical commutation pattern", pattern_bad.empty(), pattern_bad));

    if (verify_distance && report.ok()) {
        checks.push_back(check_distance(code));
    }
    return report;
}

StabilizerCode parse_code_text(std::string_view text) {
    StabilizerCode code;
    std::map<std::string, bool> seen;
    std::vector<PauliString> *section = nullptr;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    auto fail = [&](const std::string &why) {
        throw std::invalid_argument("code file line " + std::to_string(line_no) + ": " + why);
    };
    auto parse_size = [&](const std::string &value) -> size_t {
        try {
            size_t used = 0;
            unsigned long v = std::stoul(value, &used);
            if (used != value.size()) {
                fail("bad integer '" + value + "'");
            }
            return v;
        } catch (const std::logic_error &) {
            fail("bad integer '" + value + "'");
        }
        return 0;
    };
    while (std::getline(in, line)) {
        line_no++;
        line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
                   line.end());
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line == "H:") {
            section = &code.stabilizers;
        } else if (line == "X:") {
            section = &code.logical_x;
        } else if (line == "Z:") {
            section = &code.logical_z;
        } else if (auto eq = line.find('='); eq != std::string::npos) {
            std::string key = line.substr(0, eq), value = line.substr(eq + 1);
            if (key == "name") {
                code.name = value;
            } else if (key == "n") {
                code.n = parse_size(value);
            } else if (key == "k") {
                code.k = parse_size(value);
            } else if (key == "d") {
                code.d = parse_size(value);
            } else {
                fail("unknown header '" + key + "'");
            }
            seen[key] = true;
        } else {
            if (section == nullptr) {
                fail("operator outside of an H:/X:/Z: section");
            }
            PauliString op;
            try {
                op = PauliString::from_str(line);
            } catch (const std::invalid_argument &e) {
                fail(e.what());
            }
            if (seen.count("n") && op.num_qubits() != code.n) {
                fail("operator '" + line + "' has " + std::to_string(op.num_qubits()) + " qubits, expected n=" +
                     std::to_string(code.n));
            }
            section->push_back(std::move(op));
        }
    }
    for (const char *key : {"name", "n", "k", "d"}) {
        if (!seen.count(key)) {
            throw std::invalid_argument(std::string("code file is missing the '") + key + "=' header");
        }
    }
    return code;
}

StabilizerCode load_code_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open code file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_code_text(buf.str());
}

std::string format_code_text(const StabilizerCode &code) {
    std::ostringstream out;
    out << "name=" << code.name << "\nn=" << code.n << "\nk=" << code.k << "\nd=" << code.d << "\n";
    out << "H:\n";
    for (const auto &p : code.stabilizers) {
        out << p.letters() << "\n";
    }
    out << "X:\n";
    for (const auto &p : code.logical_x) {
        out << p.letters() << "\n";
    }
    out << "Z:\n";
    for (const auto &p : code.logical_z) {
        out << p.letters() << "\n";
    }
    return out.str();
}

}  // namespace adistill
