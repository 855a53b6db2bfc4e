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

#include "adistill/hybrid.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "adistill/parallel.h"
#include "adistill/purification.h"
#include "adistill/werner.h"

namespace adistill {

std::optional<int> min_rounds_to_fidelity(double f_in, double target, int max_rounds) {
    if (!(target > 0.5 && target < 1.0)) {
        throw std::domain_error("target fidelity must lie in (0.5, 1), got " + std::to_string(target));
    }
    PauliDistribution dist = PauliDistribution::depolarizing(f_in);
    if (dist.p_i >= target) {
        return 0;
    }
    // 1/2 is a fixed point of the recursion; nothing at or below it improves.
    if (f_in <= 0.5) {
        return std::nullopt;
    }
    for (int r = 1; r <= max_rounds; r++) {
        dist = purify_step(PurificationProtocol::kDejmps, dist).normalized;
        if (dist.p_i >= target) {
            return r;
        }
    }
    return std::nullopt;
}

double pseudo_threshold(const LogicalFidelityPolynomial &polynomial, double lo, double hi, double tolerance) {
    auto gap = [&](double f) { return polynomial.evaluate(f) - f; };
    double g_lo = gap(lo), g_hi = gap(hi);
    if (!(g_lo < 0 && g_hi > 0)) {
        throw std::domain_error("no pseudo-threshold crossing in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                "]");
    }
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (gap(mid) > 0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

HybridResult hybrid_run(double f_in, const LogicalFidelityPolynomial &polynomial, double threshold, int max_rounds) {
    std::optional<int> rounds = min_rounds_to_fidelity(f_in, threshold, max_rounds);
    if (!rounds) {
        throw std::domain_error("input fidelity " + std::to_string(f_in) + " cannot reach the threshold " +
                                std::to_string(threshold) + " within " + std::to_string(max_rounds) +
                                " DEJMPS rounds");
    }
    PurificationTrace trace = run_rounds(PurificationProtocol::kDejmps, false, f_in, *rounds);
    HybridResult result;
    result.f_in = f_in;
    result.i_pre = *rounds;
    result.f_at_threshold = trace.fidelity();
    result.p_total_discard = trace.p_total_discard();
    // The twirl keeps the fidelity and makes the pair depolarized, which is
    // all the QEC polynomial needs.
    PauliDistribution twirled = twirl(trace.rounds.empty() ? trace.start : trace.rounds.back().dist);
    result.f_out = polynomial.evaluate(twirled.p_i);
    result.rate_2g = static_cast<double>(polynomial.k) / static_cast<double>(polynomial.n);
    result.rate_1g = std::ldexp(1.0 - result.p_total_discard, -result.i_pre);
    result.rate = result.rate_1g * result.rate_2g;
    if (result.f_out > 0.5 && result.f_out < 1.0) {
        result.i_match = min_rounds_to_fidelity(f_in, result.f_out, max_rounds);
    }
    return result;
}

std::optional<double> refined_baseline(double f_in, double baseline, int max_rounds) {
    PauliDistribution dist = PauliDistribution::depolarizing(f_in);
    for (int r = 0; r <= max_rounds; r++) {
        if (dist.p_i > 0) {
            double d = distillable_entanglement(dist.p_i);
            if (d >= baseline) {
                return d;
            }
        }
        dist = purify_step(PurificationProtocol::kDejmps, dist).normalized;
    }
    return std::nullopt;
}

double refined_efficiency(double rate, double f_out, double baseline_entanglement) {
    if (!(baseline_entanglement > 0)) {
        throw std::domain_error("baseline distillable entanglement must be positive");
    }
    if (f_out <= 0) {
        return 0.0;
    }
    return std::max(rate * distillable_entanglement(f_out) / baseline_entanglement, 0.0);
}

std::vector<CheckpointRow> checkpoint_scan(const LogicalFidelityPolynomial &polynomial, double threshold,
                                           const GridSpec &grid, const HybridScanOptions &options) {
    grid.validate();
    std::vector<double> inputs = grid.values();
    std::vector<std::optional<CheckpointRow>> slots(inputs.size());
    parallel_for(inputs.size(), options.jobs, [&](size_t idx) {
        double f_in = inputs[idx];
        if (!min_rounds_to_fidelity(f_in, threshold, options.max_rounds)) {
            return;
        }
        HybridResult hybrid = hybrid_run(f_in, polynomial, threshold, options.max_rounds);
        CheckpointRow row;
        row.f_in = f_in;
        row.i_pre = hybrid.i_pre;
        row.i_match = hybrid.i_match;
        PurificationTrace pure = run_rounds(PurificationProtocol::kDejmps, false, f_in, hybrid.i_match.value_or(0));
        row.f_out_dejmps = pure.fidelity();
        row.rate_dejmps = std::ldexp(1.0 - pure.p_total_discard(), -static_cast<int>(pure.rounds.size()));
        row.f_out_hybrid = hybrid.f_out;
        row.rate_hybrid = hybrid.rate;
        row.d_hybrid = distillable_entanglement(hybrid.f_out);
        std::optional<double> base = refined_baseline(f_in, options.baseline_entanglement);
        if (base) {
            row.e_dejmps = refined_efficiency(row.rate_dejmps, row.f_out_dejmps, *base);
            row.e_hybrid = refined_efficiency(row.rate_hybrid, row.f_out_hybrid, *base);
        }
        row.winner = row.e_hybrid > row.e_dejmps ? "hybrid" : row.e_dejmps > row.e_hybrid ? "dejmps" : "tie";
        slots[idx] = std::move(row);
    });
    std::vector<CheckpointRow> rows;
    for (auto &slot : slots) {
        if (slot) {
            rows.push_back(std::move(*slot));
        }
    }
    return rows;
}

std::vector<size_t> checkpoints(const std::vector<CheckpointRow> &rows) {
    std::vector<size_t> out;
    for (size_t i = 1; i < rows.size(); i++) {
        bool pre_drop = rows[i].i_pre < rows[i - 1].i_pre;
        bool match_drop = rows[i].i_match && rows[i - 1].i_match && *rows[i].i_match < *rows[i - 1].i_match;
        if (pre_drop || match_drop) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace adistill
