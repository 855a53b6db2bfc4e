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

#include "adistill/pauli_string.h"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace adistill {

namespace {

size_t num_words(size_t num_qubits) { return (num_qubits + 63) >> 6; }

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "Pauli size mismatch: " + std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()));
    }
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(num_words(num_qubits), 0), zs_(num_words(num_qubits), 0) {}

PauliString PauliString::from_str(std::string_view text) {
    uint8_t log_i = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') {
            log_i = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        log_i = (log_i + 1) & 3;
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.set(q, true, false);
                break;
            case 'Y':
                result.set(q, true, true);
                break;
            case 'Z':
                result.set(q, false, true);
                break;
            default:
                throw std::invalid_argument("Not a Pauli letter: '" + std::string(1, text[q]) + "' in \"" +
                                            std::string(text) + "\"");
        }
    }
    result.log_i_ = log_i;
    return result;
}

PauliString PauliString::from_masks(size_t num_qubits, uint64_t x_mask, uint64_t z_mask) {
    if (num_qubits > 64) {
        throw std::invalid_argument("from_masks supports at most 64 qubits");
    }
    PauliString result(num_qubits);
    uint64_t keep = num_qubits == 64 ? ~uint64_t{0} : ((uint64_t{1} << num_qubits) - 1);
    if (num_qubits > 0) {
        result.xs_[0] = x_mask & keep;
        result.zs_[0] = z_mask & keep;
    }
    return result;
}

void PauliString::set(size_t q, bool x_bit, bool z_bit) {
    uint64_t m = uint64_t{1} << (q & 63);
    xs_[q >> 6] = x_bit ? (xs_[q >> 6] | m) : (xs_[q >> 6] & ~m);
    zs_[q >> 6] = z_bit ? (zs_[q >> 6] | m) : (zs_[q >> 6] & ~m);
}

char PauliString::letter(size_t q) const { return "IXZY"[x(q) + 2 * z(q)]; }

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

bool PauliString::is_identity_up_to_phase() const { return weight() == 0; }

bool PauliString::commutes_with(const PauliString &other) const {
    require_same_size(*this, other);
    uint64_t acc = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        acc ^= (xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliString &PauliString::operator*=(const PauliString &other) {
    require_same_size(*this, other);
    // Single-qubit products: XY=iZ, YZ=iX, ZX=iY and the reversed orders pick up -i.
    uint32_t exponent = log_i_ + other.log_i_;
    for (size_t w = 0; w < xs_.size(); w++) {
        uint64_t x1 = xs_[w], z1 = zs_[w], x2 = other.xs_[w], z2 = other.zs_[w];
        uint64_t px1 = x1 & ~z1, py1 = x1 & z1, pz1 = ~x1 & z1;
        uint64_t px2 = x2 & ~z2, py2 = x2 & z2, pz2 = ~x2 & z2;
        uint64_t plus = (px1 & py2) | (py1 & pz2) | (pz1 & px2);
        uint64_t minus = (px1 & pz2) | (py1 & px2) | (pz1 & py2);
        exponent += std::popcount(plus) + 3 * std::popcount(minus);
        xs_[w] = x1 ^ x2;
        zs_[w] = z1 ^ z2;
    }
    log_i_ = exponent & 3;
    return *this;
}

PauliString PauliString::operator*(const PauliString &other) const {
    PauliString result = *this;
    result *= other;
    return result;
}

PauliString PauliString::unsigned_part() const {
    PauliString result = *this;
    result.log_i_ = 0;
    return result;
}

std::string PauliString::letters() const {
    std::string out;
    out.reserve(num_qubits_);
    for (size_t q = 0; q < num_qubits_; q++) {
        out.push_back(letter(q));
    }
    return out;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    return kPrefix[log_i_] + letters();
}

PauliString multiply(const PauliString &a, const PauliString &b) { return a * b; }

bool commutes(const PauliString &a, const PauliString &b) { return a.commutes_with(b); }

bool canonical_less(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    size_t wa = a.weight(), wb = b.weight();
    if (wa != wb) {
        return wa < wb;
    }
    for (size_t q = 0; q < a.num_qubits(); q++) {
        if (a.x(q) != b.x(q)) {
            return b.x(q);
        }
    }
    for (size_t q = 0; q < a.num_qubits(); q++) {
        if (a.z(q) != b.z(q)) {
            return b.z(q);
        }
    }
    return false;
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) { return out << p.str(); }

}  // namespace adistill
