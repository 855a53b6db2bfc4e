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

#include "adistill/purification.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace adistill {

std::string_view protocol_name(PurificationProtocol protocol) {
    return protocol == PurificationProtocol::kBbpssw ? "bbpssw" : "dejmps";
}

PurificationProtocol parse_protocol(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "bbpssw") {
        return PurificationProtocol::kBbpssw;
    }
    if (s == "dejmps") {
        return PurificationProtocol::kDejmps;
    }
    throw std::invalid_argument("unknown purification protocol '" + std::string(text) +
                                "' (expected bbpssw or dejmps)");
}

void PauliDistribution::validate(double tolerance) const {
    if (p_i < 0 || p_x < 0 || p_y < 0 || p_z < 0 || !std::isfinite(total())) {
        throw std::invalid_argument("Pauli probabilities must be non-negative and finite");
    }
    if (std::abs(total() - 1.0) > tolerance) {
        throw std::invalid_argument("Pauli probabilities must sum to 1, got " + std::to_string(total()));
    }
}

PauliDistribution PauliDistribution::depolarizing(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::domain_error("fidelity must lie in [0, 1], got " + std::to_string(fidelity));
    }
    double e = (1.0 - fidelity) / 3.0;
    return {fidelity, e, e, e};
}

PurifyStep purify_step(PurificationProtocol protocol, const PauliDistribution &dist) {
    double i = dist.p_i, x = dist.p_x, y = dist.p_y, z = dist.p_z;
    if (protocol == PurificationProtocol::kDejmps) {
        std::swap(y, z);
    }
    PurifyStep step;
    step.kept = {i * i + z * z, x * x + y * y, 2 * x * y, 2 * i * z};
    double keep = step.kept.total();
    step.p_discard = 1.0 - keep;
    if (keep > 0) {
        step.normalized = {step.kept.p_i / keep, step.kept.p_x / keep, step.kept.p_y / keep, step.kept.p_z / keep};
    } else {
        step.normalized = step.kept;
    }
    return step;
}

PauliDistribution twirl(const PauliDistribution &dist) {
    double e = (1.0 - dist.p_i) / 3.0;
    return {dist.p_i, e, e, e};
}

PurificationTrace run_rounds(PurificationProtocol protocol, bool twirl_each_round, const PauliDistribution &start,
                             int rounds) {
    if (rounds < 0) {
        throw std::invalid_argument("round count must be non-negative");
    }
    start.validate();
    PurificationTrace trace{protocol, twirl_each_round, start, {}};
    PauliDistribution current = start;
    double total_discard = 0.0;
    for (int r = 1; r <= rounds; r++) {
        if (twirl_each_round) {
            current = twirl(current);
        }
        PurifyStep step = purify_step(protocol, current);
        total_discard = total_discard + (1.0 - total_discard) * step.p_discard;
        current = step.normalized;
        trace.rounds.push_back({r, current, step.p_discard, total_discard,
                                std::ldexp(1.0 - total_discard, -r)});
    }
    return trace;
}

PurificationTrace run_rounds(PurificationProtocol protocol, bool twirl_each_round, double f_in, int rounds) {
    return run_rounds(protocol, twirl_each_round, PauliDistribution::depolarizing(f_in), rounds);
}

double bbpssw_werner_fidelity(double f_in) {
    double g = 1.0 - f_in;
    return (f_in * f_in + g * g / 9.0) / (f_in * f_in + 2.0 / 3.0 * f_in * g + 5.0 / 9.0 * g * g);
}

double bbpssw_werner_discard(double f_in) {
    double g = 1.0 - f_in;
    return 1.0 - (f_in * f_in + 2.0 / 3.0 * f_in * g + 5.0 / 9.0 * g * g);
}

}  // namespace adistill
