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

#ifndef ADISTILL_HYBRID_H
#define ADISTILL_HYBRID_H

#include <optional>
#include <string>
#include <vector>

#include "adistill/grid.h"
#include "adistill/lookup_table_decoder.h"

namespace adistill {

/// Pure-DEJMPS rounds are searched up to this count by default.
inline constexpr int kDefaultMaxRounds = 40;
/// Distillable entanglement the refined efficiency demands of its baseline.
inline constexpr double kDefaultBaselineEntanglement = 0.12;
/// Default checkpoint scan: 10,000 points on [0.501, 1].
inline constexpr double kHybridGridMin = 0.501;
inline constexpr double kHybridGridMax = 1.0;
inline constexpr size_t kHybridGridPoints = 10000;

/// Smallest number of untwirled DEJMPS rounds taking a Werner pair of
/// fidelity `f_in` to at least `target`, or nullopt when `max_rounds` do not
/// suffice. Inputs at or below 1/2 never improve. Throws
/// std::domain_error unless target lies in (0.5, 1) and f_in in [0, 1].
std::optional<int> min_rounds_to_fidelity(double f_in, double target, int max_rounds = kDefaultMaxRounds);

/// Largest F < 1 with evaluate(F) = F, found by bisection on [lo, hi].
/// Throws std::domain_error when evaluate(F) - F does not change sign there.
double pseudo_threshold(const LogicalFidelityPolynomial &polynomial, double lo = 0.8, double hi = 0.999,
                        double tolerance = 1e-12);

/// DEJMPS until the code's pseudo-threshold, a twirl, then one QEC round.
struct HybridResult {
    double f_in = 0.0;
    int i_pre = 0;
    double f_at_threshold = 0.0;
    double p_total_discard = 0.0;
    double f_out = 0.0;
    /// k / n, the QEC round's factor.
    double rate_2g = 0.0;
    /// (1 - p_total_discard) / 2^i_pre, the purification factor.
    double rate_1g = 0.0;
    /// rate_1g * rate_2g.
    double rate = 0.0;
    /// Fewest pure-DEJMPS rounds whose fidelity reaches f_out; nullopt when
    /// f_out is not below 1 or no count up to the round limit suffices.
    std::optional<int> i_match;
};

/// Throws std::domain_error when the threshold cannot be reached from f_in.
HybridResult hybrid_run(double f_in, const LogicalFidelityPolynomial &polynomial, double threshold,
                        int max_rounds = kDefaultMaxRounds);

/// Denominator of the refined efficiency: D(F_in) when it already reaches
/// `baseline`, otherwise D after the fewest DEJMPS rounds that reach it.
/// nullopt when no round count up to `max_rounds` reaches it.
std::optional<double> refined_baseline(double f_in, double baseline = kDefaultBaselineEntanglement,
                                       int max_rounds = 60);

/// max(rate * D(f_out) / baseline_entanglement, 0).
double refined_efficiency(double rate, double f_out, double baseline_entanglement);

struct CheckpointRow {
    double f_in = 0.0;
    int i_pre = 0;
    std::optional<int> i_match;
    double f_out_dejmps = 0.0;
    double f_out_hybrid = 0.0;
    double rate_dejmps = 0.0;
    double rate_hybrid = 0.0;
    double e_dejmps = 0.0;
    double e_hybrid = 0.0;
    /// D(f_out_hybrid), reported for plotting.
    double d_hybrid = 0.0;
    /// "dejmps", "hybrid" or "tie": the larger refined efficiency.
    std::string winner;
};

struct HybridScanOptions {
    double baseline_entanglement = kDefaultBaselineEntanglement;
    int max_rounds = kDefaultMaxRounds;
    int jobs = 1;
};

/// One row per grid point. Points where the threshold is unreachable are
/// skipped. Pure-DEJMPS columns use i_match rounds; when i_match is
/// undefined they repeat the hybrid's input (zero rounds).
std::vector<CheckpointRow> checkpoint_scan(const LogicalFidelityPolynomial &polynomial, double threshold,
                                           const GridSpec &grid, const HybridScanOptions &options = {});

/// Indices i >= 1 where i_pre or i_match drops below the previous row's.
std::vector<size_t> checkpoints(const std::vector<CheckpointRow> &rows);

}  // namespace adistill

#endif
