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

#ifndef ADISTILL_PURIFICATION_H
#define ADISTILL_PURIFICATION_H

#include <string>
#include <string_view>
#include <vector>

namespace adistill {

enum class PurificationProtocol { kBbpssw, kDejmps };

std::string_view protocol_name(PurificationProtocol protocol);
/// Accepts "bbpssw" / "dejmps" in any case. Throws std::invalid_argument.
PurificationProtocol parse_protocol(std::string_view text);

/// Probabilities of the Pauli error on one half of a Bell-diagonal pair.
struct PauliDistribution {
    double p_i = 1.0;
    double p_x = 0.0;
    double p_y = 0.0;
    double p_z = 0.0;

    double total() const { return p_i + p_x + p_y + p_z; }
    double fidelity() const { return p_i; }
    /// Throws std::invalid_argument for negative entries or a total that
    /// differs from 1 by more than `tolerance`.
    void validate(double tolerance = 1e-9) const;

    /// Werner state of fidelity F: (F, (1-F)/3, (1-F)/3, (1-F)/3).
    static PauliDistribution depolarizing(double fidelity);

    bool operator==(const PauliDistribution &other) const = default;
};

struct PurifyStep {
    /// Kept-branch probabilities before renormalization.
    PauliDistribution kept;
    double p_discard = 0.0;
    PauliDistribution normalized;
};

/// One 2-to-1 round. BBPSSW: I' = I^2 + Z^2, X' = X^2 + Y^2, Y' = 2XY,
/// Z' = 2IZ. DEJMPS is the same map after exchanging the Y and Z inputs.
PurifyStep purify_step(PurificationProtocol protocol, const PauliDistribution &dist);

/// Keeps p_i, spreads the rest evenly over X, Y, Z.
PauliDistribution twirl(const PauliDistribution &dist);

struct RoundRecord {
    int round = 0;
    /// Output of this round after renormalization.
    PauliDistribution dist;
    double p_discard = 0.0;
    double p_total_discard = 0.0;
    /// (1 / 2^round) (1 - p_total_discard)
    double rate = 0.0;
};

struct PurificationTrace {
    PurificationProtocol protocol = PurificationProtocol::kDejmps;
    bool twirled = false;
    PauliDistribution start;
    std::vector<RoundRecord> rounds;

    /// Fidelity after the last round, or of the start when no rounds ran.
    double fidelity() const { return rounds.empty() ? start.p_i : rounds.back().dist.p_i; }
    double p_total_discard() const { return rounds.empty() ? 0.0 : rounds.back().p_total_discard; }
};

/// Runs `rounds` rounds. With `twirl_each_round`, the input of every round
/// is twirled first. Throws std::invalid_argument for rounds < 0.
PurificationTrace run_rounds(PurificationProtocol protocol, bool twirl_each_round, const PauliDistribution &start,
                             int rounds);
PurificationTrace run_rounds(PurificationProtocol protocol, bool twirl_each_round, double f_in, int rounds);

/// Twirled single-round fidelity from the classic Werner-state recurrence.
double bbpssw_werner_fidelity(double f_in);
/// Its discard probability, 1 minus the recurrence's denominator.
double bbpssw_werner_discard(double f_in);

}  // namespace adistill

#endif
