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

#include "adistill/werner.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace adistill {

namespace {

void require_fidelity(double f) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw std::domain_error("fidelity must lie in [0, 1], got " + std::to_string(f));
    }
}

double xlog2x(double x) { return x == 0.0 ? 0.0 : x * std::log2(x); }

}  // namespace

double werner_from_fidelity(double fidelity) {
    require_fidelity(fidelity);
    return (4.0 * fidelity - 1.0) / 3.0;
}

double fidelity_from_werner(double werner) {
    if (!(werner >= -1.0 / 3.0 - 1e-15 && werner <= 1.0)) {
        throw std::domain_error("Werner parameter must lie in [-1/3, 1], got " + std::to_string(werner));
    }
    return (3.0 * werner + 1.0) / 4.0;
}

double distillable_entanglement(double fidelity) {
    if (!(fidelity > 0.0 && fidelity <= 1.0)) {
        throw std::domain_error("distillable entanglement needs 0 < F <= 1, got " + std::to_string(fidelity));
    }
    double rest = 1.0 - fidelity;
    // (1-F) log2((1-F)/3) = xlog2x(1-F) - (1-F) log2 3
    return 1.0 + xlog2x(fidelity) + xlog2x(rest) - rest * std::log2(3.0);
}

double swap_fidelity(std::span<const double> fidelities) {
    if (fidelities.empty()) {
        throw std::invalid_argument("swap_fidelity needs at least one link");
    }
    double w = 1.0;
    for (double f : fidelities) {
        w *= werner_from_fidelity(f);
    }
    return 0.25 + 0.75 * w;
}

double swap_fidelity_uniform(double fidelity, int num_swaps) {
    if (num_swaps < 0) {
        throw std::invalid_argument("number of swaps must be non-negative");
    }
    return 0.25 + 0.75 * std::pow(werner_from_fidelity(fidelity), num_swaps + 1);
}

}  // namespace adistill
