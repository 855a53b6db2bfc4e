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

#include "adistill/lookup_table_decoder.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace adistill {

namespace {

constexpr size_t kMaxEnumeratedQubits = 12;

struct MaskedPauli {
    uint64_t x;
    uint64_t z;
};

bool anticommutes(MaskedPauli a, MaskedPauli b) { return std::popcount((a.x & b.z) ^ (a.z & b.x)) & 1; }

std::vector<MaskedPauli> masks_of(const std::vector<PauliString> &ops) {
    std::vector<MaskedPauli> out;
    out.reserve(ops.size());
    for (const auto &p : ops) {
        out.push_back({p.x_mask(), p.z_mask()});
    }
    return out;
}

uint64_t syndrome_bits(const std::vector<MaskedPauli> &stabilizers, MaskedPauli e) {
    uint64_t bits = 0;
    for (size_t i = 0; i < stabilizers.size(); i++) {
        bits |= uint64_t{anticommutes(e, stabilizers[i])} << i;
    }
    return bits;
}

// All 4^n unsigned Paulis in canonical order. The canonical key puts the x
// bits above the z bits, each with qubit 0 as the most significant bit.
std::vector<MaskedPauli> canonical_enumeration(size_t n) {
    uint64_t total = uint64_t{1} << (2 * n);
    std::vector<std::vector<MaskedPauli>> by_weight(n + 1);
    for (uint64_t key = 0; key < total; key++) {
        MaskedPauli p{0, 0};
        for (size_t q = 0; q < n; q++) {
            p.x |= ((key >> (2 * n - 1 - q)) & 1) << q;
            p.z |= ((key >> (n - 1 - q)) & 1) << q;
        }
        by_weight[std::popcount(p.x | p.z)].push_back(p);
    }
    std::vector<MaskedPauli> out;
    out.reserve(total);
    for (auto &bucket : by_weight) {
        out.insert(out.end(), bucket.begin(), bucket.end());
    }
    return out;
}

}  // namespace

std::string Syndrome::str() const {
    std::string out;
    for (size_t i = 0; i < length; i++) {
        out.push_back(bit(i) ? '1' : '0');
    }
    return out;
}

Syndrome syndrome_of(const StabilizerCode &code, const PauliString &error) {
    if (error.num_qubits() != code.n) {
        throw std::invalid_argument("error acts on " + std::to_string(error.num_qubits()) + " qubits, code on " +
                                    std::to_string(code.n));
    }
    Syndrome s{0, code.stabilizers.size()};
    for (size_t i = 0; i < code.stabilizers.size(); i++) {
        if (!error.commutes_with(code.stabilizers[i])) {
            s.bits |= uint64_t{1} << i;
        }
    }
    return s;
}

LookupTable LookupTable::build(const StabilizerCode &code) {
    ValidationReport report = validate_code(code);
    if (!report.ok()) {
        throw std::invalid_argument("code '" + code.name + "' failed validation:\n" + report.summary());
    }
    if (code.n > kMaxEnumeratedQubits) {
        throw std::invalid_argument("lookup table enumeration is limited to n <= 12, got n=" +
                                    std::to_string(code.n));
    }
    auto stabilizers = masks_of(code.stabilizers);
    size_t num_syndromes = size_t{1} << stabilizers.size();

    LookupTable table;
    table.code_ = code;
    std::vector<bool> filled(num_syndromes, false);
    table.entries_.resize(num_syndromes);
    size_t remaining = num_syndromes;
    for (MaskedPauli p : canonical_enumeration(code.n)) {
        uint64_t s = syndrome_bits(stabilizers, p);
        if (!filled[s]) {
            filled[s] = true;
            table.entries_[s] = PauliString::from_masks(code.n, p.x, p.z);
            if (--remaining == 0) {
                break;
            }
        }
    }
    if (remaining != 0) {
        throw std::logic_error("lookup table incomplete: stabilizer matrix is not full rank");
    }
    return table;
}

const PauliString &LookupTable::correction(const Syndrome &syndrome) const {
    if (syndrome.length != code_.stabilizers.size()) {
        throw std::invalid_argument("syndrome length " + std::to_string(syndrome.length) + " does not match " +
                                    std::to_string(code_.stabilizers.size()) + " stabilizers");
    }
    return entries_.at(syndrome.bits);
}

DecodeOutcome classify_error(const LookupTable &table, const PauliString &error) {
    const StabilizerCode &code = table.code();
    PauliString residual = error.unsigned_part() * table.correction(syndrome_of(code, error));
    DecodeOutcome outcome;
    for (const auto &l : code.logical_x) {
        outcome.anticommutes_logical_x.push_back(!residual.commutes_with(l));
    }
    for (const auto &l : code.logical_z) {
        outcome.anticommutes_logical_z.push_back(!residual.commutes_with(l));
    }
    for (size_t i = 0; i < code.k; i++) {
        if (outcome.anticommutes_logical_x[i] || outcome.anticommutes_logical_z[i]) {
            outcome.corrected = false;
        }
    }
    return outcome;
}

LogicalFidelityPolynomial logical_fidelity_polynomial(const LookupTable &table) {
    const StabilizerCode &code = table.code();
    auto stabilizers = masks_of(code.stabilizers);
    auto logicals = masks_of(code.logical_x);
    for (MaskedPauli m : masks_of(code.logical_z)) {
        logicals.push_back(m);
    }
    std::vector<MaskedPauli> corrections = masks_of(table.entries());

    LogicalFidelityPolynomial poly{code.n, code.k, std::vector<uint64_t>(code.n + 1, 0)};
    uint64_t total = uint64_t{1} << (2 * code.n);
    uint64_t qubit_mask = (uint64_t{1} << code.n) - 1;
    for (uint64_t bits = 0; bits < total; bits++) {
        MaskedPauli e{bits & qubit_mask, bits >> code.n};
        MaskedPauli c = corrections[syndrome_bits(stabilizers, e)];
        MaskedPauli residual{e.x ^ c.x, e.z ^ c.z};
        bool ok = true;
        for (MaskedPauli l : logicals) {
            if (anticommutes(residual, l)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            poly.counts[std::popcount(e.x | e.z)]++;
        }
    }
    return poly;
}

double LogicalFidelityPolynomial::evaluate(double fidelity) const {
    double error_each = (1.0 - fidelity) / 3.0;
    double total = 0;
    for (size_t w = 0; w <= n; w++) {
        if (counts[w] != 0) {
            total += static_cast<double>(counts[w]) * std::pow(fidelity, static_cast<double>(n - w)) *
                     std::pow(error_each, static_cast<double>(w));
        }
    }
    return total;
}

double eval_qec_map(const LogicalFidelityPolynomial &poly, double f_in) {
    if (!(f_in >= 0.0 && f_in <= 1.0)) {
        throw std::domain_error("input fidelity must lie in [0, 1], got " + std::to_string(f_in));
    }
    return poly.evaluate(f_in);
}

}  // namespace adistill
