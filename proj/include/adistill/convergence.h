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

#ifndef ADISTILL_CONVERGENCE_H
#define ADISTILL_CONVERGENCE_H

#include <array>
#include <string>
#include <vector>

#include "adistill/purification.h"

namespace adistill {

/// One iteration of an untwirled purification recursion on the Bell-diagonal
/// weights (a, b, c, d) = (I, X, Y, Z), with the auxiliary sequences:
/// s = a + d (BBPSSW) or a + c (DEJMPS), t = 1 - s, u = s / t, r = d / a and
/// q = (1 - r) / (1 + r).
struct ConvergenceStep {
    int n = 0;
    double a = 0, b = 0, c = 0, d = 0;
    double s = 0, t = 0, u = 0, r = 0, q = 0;
};

struct ConvergenceTrace {
    PurificationProtocol protocol = PurificationProtocol::kBbpssw;
    std::vector<ConvergenceStep> steps;
};

/// Iterates n_max rounds from `start` = (a, b, c, d). The start must have
/// a > 1/2, non-negative entries and unit sum (to 1e-12); anything else
/// throws std::invalid_argument with the violated condition.
ConvergenceTrace iterate(PurificationProtocol protocol, const std::array<double, 4> &start, int n_max);

struct IdentityCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    /// Indices n where the eventual-increase test failed (DEJMPS only).
    std::vector<int> counterexample_candidates;

    bool ok() const;
    std::string summary() const;
};

/// Largest m tried when testing that u_{n+m} > u_n eventually.
inline constexpr int kEventualIncreaseWindow = 10;

/// BBPSSW: u_n = u_0^(2^n) to relative 1e-10 (in log space once the power
/// overflows), q_{n+1} = q_n^2, q non-increasing. DEJMPS: u eventually
/// increasing within the window, b + c -> 0 by the end of the trace. Both:
/// unit normalization per step to 1e-14.
IdentityReport check_identities(const ConvergenceTrace &trace);

}  // namespace adistill

#endif
