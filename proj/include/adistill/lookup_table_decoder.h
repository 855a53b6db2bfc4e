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

#ifndef ADISTILL_LOOKUP_TABLE_DECODER_H
#define ADISTILL_LOOKUP_TABLE_DECODER_H

#include <cstdint>
#include <string>
#include <vector>

#include "adistill/pauli_string.h"
#include "adistill/stabilizer_code.h"

namespace adistill {

/// Stabilizer measurement outcomes. Bit i is set iff the error anticommutes
/// with stabilizer i (a -1 eigenvalue).
struct Syndrome {
    uint64_t bits = 0;
    size_t length = 0;

    bool bit(size_t i) const { return (bits >> i) & 1; }
    /// "10" style, stabilizer 0 first.
    std::string str() const;
    bool operator==(const Syndrome &other) const = default;
};

Syndrome syndrome_of(const StabilizerCode &code, const PauliString &error);

/// Minimum-weight lookup table decoder. Every one of the 2^(n-k) syndromes
/// maps to the first Pauli producing it in canonical order (weight
/// ascending, ties broken by `canonical_less`).
class LookupTable {
   public:
    /// Throws std::invalid_argument if the code fails `validate_code` or is
    /// too large to enumerate (n > 12).
    static LookupTable build(const StabilizerCode &code);

    const StabilizerCode &code() const { return code_; }
    size_t size() const { return entries_.size(); }
    const PauliString &correction(const Syndrome &syndrome) const;
    const PauliString &correction_for_bits(uint64_t syndrome_bits) const { return entries_.at(syndrome_bits); }
    const std::vector<PauliString> &entries() const { return entries_; }

   private:
    StabilizerCode code_;
    std::vector<PauliString> entries_;
};

struct DecodeOutcome {
    bool corrected = true;
    /// Entry i is set when the residual error anticommutes with logical X_i
    /// (resp. Z_i), i.e. logical qubit i picked up a flip.
    std::vector<bool> anticommutes_logical_x;
    std::vector<bool> anticommutes_logical_z;
};

/// Applies the table's correction and reports whether the residual lies in
/// the stabilizer group.
DecodeOutcome classify_error(const LookupTable &table, const PauliString &error);

/// counts[w] is the number of weight-w Pauli errors that the decoder returns
/// to the code space with every logical qubit intact.
struct LogicalFidelityPolynomial {
    size_t n = 0;
    size_t k = 0;
    std::vector<uint64_t> counts;

    /// Sum_w counts[w] F^(n-w) ((1-F)/3)^w.
    double evaluate(double fidelity) const;
};

LogicalFidelityPolynomial logical_fidelity_polynomial(const LookupTable &table);

/// Output block fidelity of one QEC distillation round on depolarized pairs
/// of fidelity `f_in`. Throws std::domain_error outside [0, 1].
double eval_qec_map(const LogicalFidelityPolynomial &poly, double f_in);

}  // namespace adistill

#endif
