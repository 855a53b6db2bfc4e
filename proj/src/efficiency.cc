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

#include "adistill/efficiency.h"

#include <stdexcept>

#include "adistill/parallel.h"
#include "adistill/werner.h"

namespace adistill {

namespace {

struct ProtocolSpec {
    const char *label;
    const char *rounds[kChainRounds];
};

constexpr ProtocolSpec kProtocols[] = {
    {"P1", {"913", "913", "913"}},
    {"P2", {"913", "923", "923"}},
    {"P3", {"913", "923", "933"}},
    {"P4", {"923", "923", "923"}},
};

NamedPlan make_plan(const ProtocolSpec &spec, int n_repeaters) {
    NamedPlan out{spec.label, ChainPlan{n_repeaters, {}}};
    for (size_t r = 0; r < kChainRounds; r++) {
        out.plan.rounds[r] = spec.rounds[r];
    }
    out.plan.validate();
    return out;
}

void require_shared_grid(std::span<const EfficiencyCurve> curves) {
    if (curves.empty()) {
        throw std::invalid_argument("no efficiency curves given");
    }
    for (const auto &c : curves) {
        if (c.f_in != curves.front().f_in || c.efficiency.size() != c.f_in.size()) {
            throw std::invalid_argument("efficiency curves must share one grid (" + c.label + " differs)");
        }
    }
}

}  // namespace

std::vector<NamedPlan> standard_protocols(int n_repeaters) {
    std::vector<NamedPlan> out;
    for (const auto &spec : kProtocols) {
        out.push_back(make_plan(spec, n_repeaters));
    }
    return out;
}

NamedPlan standard_protocol(std::string_view label, int n_repeaters) {
    for (const auto &spec : kProtocols) {
        if (label == spec.label) {
            return make_plan(spec, n_repeaters);
        }
    }
    throw std::invalid_argument("unknown protocol label '" + std::string(label) + "' (expected P1, P2, P3 or P4)");
}

double efficiency(const ChainPlan &plan, double f_in, const CodeBook &codes) {
    double d_in = distillable_entanglement(f_in);
    if (!(d_in > 0.0)) {
        throw std::domain_error("efficiency is undefined where D(F_in) <= 0 (F_in=" + std::to_string(f_in) + ")");
    }
    double rate = rate_accounting(plan, codes).rate();
    return rate * distillable_entanglement(run_chain(plan, f_in, codes)) / d_in;
}

EfficiencyCurve efficiency_curve(const NamedPlan &plan, const std::vector<double> &grid, const CodeBook &codes,
                                 int jobs) {
    for (size_t i = 1; i < grid.size(); i++) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("efficiency grid must be strictly increasing");
        }
    }
    EfficiencyCurve curve;
    curve.label = plan.label;
    curve.plan = plan.plan;
    for (const auto &round : plan.plan.rounds) {
        curve.total_logical += round ? codes.code(*round).k : 0;
    }
    curve.rate = rate_accounting(plan.plan, codes).rate();
    curve.f_in = grid;
    curve.f_out = parallel_map(grid, jobs, [&](double f) { return run_chain(plan.plan, f, codes); });
    curve.efficiency.resize(grid.size());
    for (size_t i = 0; i < grid.size(); i++) {
        double d_in = distillable_entanglement(grid[i]);
        if (!(d_in > 0.0)) {
            throw std::domain_error("efficiency grid reaches D(F_in) <= 0 at F_in=" + std::to_string(grid[i]));
        }
        curve.efficiency[i] = curve.rate * distillable_entanglement(curve.f_out[i]) / d_in;
    }
    return curve;
}

std::vector<SwitchPoint> switching_points(std::span<const EfficiencyCurve> curves) {
    require_shared_grid(curves);
    const auto &grid = curves.front().f_in;
    std::vector<SwitchPoint> out;
    for (size_t c = 0; c + 1 < curves.size(); c++) {
        const auto &from = curves[c].efficiency;
        const auto &to = curves[c + 1].efficiency;
        SwitchPoint sp{curves[c].label, curves[c + 1].label, std::nullopt};
        for (size_t i = 0; i + 1 < grid.size(); i++) {
            double d0 = to[i] - from[i];
            double d1 = to[i + 1] - from[i + 1];
            if (d0 <= 0.0 && d1 > 0.0) {
                sp.f_sw = grid[i] + (grid[i + 1] - grid[i]) * (-d0) / (d1 - d0);
                break;
            }
        }
        out.push_back(std::move(sp));
    }
    return out;
}

Envelope optimal_envelope(std::span<const EfficiencyCurve> curves) {
    require_shared_grid(curves);
    Envelope env;
    env.f_in = curves.front().f_in;
    for (size_t i = 0; i < env.f_in.size(); i++) {
        size_t best = 0;
        for (size_t c = 1; c < curves.size(); c++) {
            double e = curves[c].efficiency[i], b = curves[best].efficiency[i];
            if (e > b || (e == b && curves[c].total_logical >= curves[best].total_logical)) {
                best = c;
            }
        }
        env.active.push_back(best);
        env.active_label.push_back(curves[best].label);
        env.efficiency.push_back(curves[best].efficiency[i]);
    }
    return env;
}

}  // namespace adistill
