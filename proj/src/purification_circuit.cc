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

#include "adistill/purification_circuit.h"

#include "adistill/pauli_string.h"

namespace adistill {

namespace {

// Bob's qubits in the frame: 0 holds the kept pair, 1 the target pair.
// Alice's halves carry no error, and every local gate pair used here maps
// |Phi+>|Phi+> to itself, so the whole state stays (I (x) frame)|Phi+ Phi+>.
constexpr size_t kKept = 0;
constexpr size_t kTarget = 1;

// Conjugation by R_X(-pi/2), signs dropped: X -> X, Y -> Z, Z -> Y.
void rotate_x_quarter(PauliString &frame, size_t q) { frame.set(q, frame.x(q) ^ frame.z(q), frame.z(q)); }

void cnot(PauliString &frame, size_t control, size_t target) {
    bool xc = frame.x(control), zc = frame.z(control);
    bool xt = frame.x(target), zt = frame.z(target);
    frame.set(target, xt ^ xc, zt);
    frame.set(control, xc, zc ^ zt);
}

double probability_of(const PauliDistribution &dist, char letter) {
    switch (letter) {
        case 'I':
            return dist.p_i;
        case 'X':
            return dist.p_x;
        case 'Y':
            return dist.p_y;
        default:
            return dist.p_z;
    }
}

}  // namespace

std::vector<CircuitBranch> circuit_table(PurificationProtocol protocol) {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::vector<CircuitBranch> table;
    for (char kept : kLetters) {
        for (char target : kLetters) {
            PauliString frame = PauliString::from_str(std::string{kept, target});
            if (protocol == PurificationProtocol::kDejmps) {
                rotate_x_quarter(frame, kKept);
                rotate_x_quarter(frame, kTarget);
            }
            cnot(frame, kKept, kTarget);
            // Alice and Bob measure the target pair in Z; an X component on
            // Bob's side flips his outcome relative to Alice's.
            char outcome = frame.x(kTarget) ? 'D' : frame.letter(kKept);
            table.push_back({kept, target, outcome});
        }
    }
    return table;
}

PurifyStep circuit_oracle(PurificationProtocol protocol, const PauliDistribution &dist) {
    PurifyStep step;
    step.kept = {0, 0, 0, 0};
    for (const auto &branch : circuit_table(protocol)) {
        double p = probability_of(dist, branch.error_kept) * probability_of(dist, branch.error_target);
        switch (branch.outcome) {
            case 'I':
                step.kept.p_i += p;
                break;
            case 'X':
                step.kept.p_x += p;
                break;
            case 'Y':
                step.kept.p_y += p;
                break;
            case 'Z':
                step.kept.p_z += p;
                break;
            default:
                step.p_discard += p;
                break;
        }
    }
    double keep = step.kept.total();
    step.normalized = keep > 0 ? PauliDistribution{step.kept.p_i / keep, step.kept.p_x / keep,
                                                   step.kept.p_y / keep, step.kept.p_z / keep}
                               : step.kept;
    return step;
}

}  // namespace adistill
