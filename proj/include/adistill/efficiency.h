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

#ifndef ADISTILL_EFFICIENCY_H
#define ADISTILL_EFFICIENCY_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adistill/code_book.h"
#include "adistill/repeater_chain.h"

namespace adistill {

struct NamedPlan {
    std::string label;
    ChainPlan plan;
};

/// P1: 913-913-913, P2: 913-923-923, P3: 913-923-933, P4: 923-923-923.
std::vector<NamedPlan> standard_protocols(int n_repeaters);
/// Throws std::invalid_argument for labels other than P1..P4.
NamedPlan standard_protocol(std::string_view label, int n_repeaters);

/// E(F_in) = R_out D(F_out) / D(F_in). Throws std::domain_error when
/// D(F_in) <= 0.
double efficiency(const ChainPlan &plan, double f_in, const CodeBook &codes = CodeBook::builtin());

struct EfficiencyCurve {
    std::string label;
    ChainPlan plan;
    /// Sum of k over the three rounds; used to break envelope ties.
    size_t total_logical = 0;
    double rate = 0.0;
    std::vector<double> f_in;
    std::vector<double> f_out;
    std::vector<double> efficiency;
};

/// Default grid for switching-point work.
inline constexpr double kSwitchGridMin = 0.85;
inline constexpr double kSwitchGridMax = 1.0;
inline constexpr size_t kSwitchGridPoints = 2000;

/// Grid must be strictly increasing with D > 0 at every point.
EfficiencyCurve efficiency_curve(const NamedPlan &plan, const std::vector<double> &grid,
                                 const CodeBook &codes = CodeBook::builtin(), int jobs = 1);

struct SwitchPoint {
    std::string from;
    std::string to;
    /// Empty when the curves do not cross inside the grid.
    std::optional<double> f_sw;
};

/// For consecutive curves (P1->P2, P2->P3, ...) the first grid cell where
/// the later curve overtakes the earlier one, refined by linear
/// interpolation of the difference. Throws std::invalid_argument when the
/// curves do not share one grid.
std::vector<SwitchPoint> switching_points(std::span<const EfficiencyCurve> curves);

struct Envelope {
    std::vector<double> f_in;
    std::vector<double> efficiency;
    /// Index into the input curves of the optimal plan at each grid point.
    std::vector<size_t> active;
    std::vector<std::string> active_label;
};

/// Pointwise argmax; exact ties go to the plan with larger total k, then to
/// the later plan.
Envelope optimal_envelope(std::span<const EfficiencyCurve> curves);

}  // namespace adistill

#endif
