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

#ifndef ADISTILL_WERNER_H
#define ADISTILL_WERNER_H

#include <span>

namespace adistill {

/// Fidelity at which the hashing bound crosses zero.
inline constexpr double kHashingThresholdFidelity = 0.81071;

/// W = (4F - 1) / 3. Throws std::domain_error unless F is in [0, 1].
double werner_from_fidelity(double fidelity);
/// F = (3W + 1) / 4. Throws std::domain_error unless W is in [-1/3, 1].
double fidelity_from_werner(double werner);

/// One-way hashing yield 1 + F log2 F + (1-F) log2((1-F)/3), unclamped.
/// F = 1 uses the limit x log x -> 0. Throws std::domain_error for F <= 0
/// or F > 1.
double distillable_entanglement(double fidelity);

/// End-to-end fidelity after swapping links with the given fidelities:
/// the Werner parameters multiply. Throws std::invalid_argument when empty.
double swap_fidelity(std::span<const double> fidelities);

/// `num_swaps + 1` equal links of fidelity `fidelity` swapped end to end.
double swap_fidelity_uniform(double fidelity, int num_swaps);

}  // namespace adistill

#endif
