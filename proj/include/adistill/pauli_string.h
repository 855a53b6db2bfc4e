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

#ifndef ADISTILL_PAULI_STRING_H
#define ADISTILL_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace adistill {

/// An n-qubit Pauli operator in binary symplectic form, with an overall phase
/// in {+1, +i, -1, -i}.
///
/// Qubit q carries I, X, Z or Y when its (x, z) bit pair is (0,0), (1,0),
/// (0,1) or (1,1) respectively. Y is the Hermitian Pauli Y, so the phase is
/// exactly the sign that prefixes a letter string such as "-XYZ".
class PauliString {
   public:
    PauliString() = default;
    /// Identity on `num_qubits` qubits with + phase.
    explicit PauliString(size_t num_qubits);

    /// Parses "XYZI", "+XYZI", "-XX", "+iZ", "-iY". '_' is accepted for I.
    /// Throws std::invalid_argument on any other character.
    static PauliString from_str(std::string_view text);

    /// Builds an unsigned Pauli from bit masks where bit q is qubit q.
    /// Requires num_qubits <= 64.
    static PauliString from_masks(size_t num_qubits, uint64_t x_mask, uint64_t z_mask);

    size_t num_qubits() const { return num_qubits_; }
    bool x(size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
    bool z(size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }
    void set(size_t q, bool x_bit, bool z_bit);
    char letter(size_t q) const;

    /// The phase is i^log_i().
    uint8_t log_i() const { return log_i_; }
    void set_log_i(uint8_t log_i) { log_i_ = log_i & 3; }

    /// Bit masks of the first 64 qubits (bit q is qubit q).
    uint64_t x_mask() const { return xs_.empty() ? 0 : xs_[0]; }
    uint64_t z_mask() const { return zs_.empty() ? 0 : zs_[0]; }

    /// Number of qubits on which the operator is not the identity.
    size_t weight() const;
    bool is_identity_up_to_phase() const;
    bool commutes_with(const PauliString &other) const;

    /// Group product `*this * other` including the phase.
    PauliString operator*(const PauliString &other) const;
    PauliString &operator*=(const PauliString &other);

    /// Copy with the phase reset to +1.
    PauliString unsigned_part() const;

    /// Letters only, e.g. "YIZIIIIXY".
    std::string letters() const;
    /// Signed form: "+XZ", "-XZ", "+iXZ", "-iXZ".
    std::string str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    uint8_t log_i_ = 0;

    friend bool canonical_less(const PauliString &a, const PauliString &b);
};

/// Throws std::invalid_argument when a.num_qubits() != b.num_qubits().
PauliString multiply(const PauliString &a, const PauliString &b);
bool commutes(const PauliString &a, const PauliString &b);

/// Canonical total order on unsigned parts: weight ascending, then the
/// concatenated (x bits, z bits) read as an unsigned integer with qubit 0 as
/// the most significant bit. Phase is ignored.
bool canonical_less(const PauliString &a, const PauliString &b);

std::ostream &operator<<(std::ostream &out, const PauliString &p);

}  // namespace adistill

#endif
