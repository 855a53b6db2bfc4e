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

#ifndef ADISTILL_PURIFICATION_CIRCUIT_H
#define ADISTILL_PURIFICATION_CIRCUIT_H

#include <vector>

#include "adistill/purification.h"

namespace adistill {

/// One row of the 2-pair circuit table: the Pauli error on Bob's half of the
/// kept pair and of the sacrificed pair, and what comes out ('I', 'X', 'Y',
/// 'Z' on the kept pair, or 'D' for a discard).
struct CircuitBranch {
    char error_kept;
    char error_target;
    char outcome;
};

/// All 16 branches, found by Pauli-frame propagation through the protocol
/// circuit (bilateral CNOT, Z measurement of the target pair, keep iff the
/// two outcomes agree). DEJMPS first applies R_X(pi/2) on Alice's qubits and
/// R_X(-pi/2) on Bob's.
std::vector<CircuitBranch> circuit_table(PurificationProtocol protocol);

/// Aggregates `circuit_table` under product input probabilities. An
/// independent route to `purify_step`.
PurifyStep circuit_oracle(PurificationProtocol protocol, const PauliDistribution &dist);

}  // namespace adistill

#endif
