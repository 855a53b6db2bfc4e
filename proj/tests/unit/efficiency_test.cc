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

#include <cmath>
#include <stdexcept>

#include "adistill/grid.h"
#include "adistill/werner.h"
#include "gtest/gtest.h"

using namespace adistill;

namespace {

std::vector<EfficiencyCurve> standard_curves(int repeaters, size_t points = kSwitchGridPoints) {
    std::vector<double> grid = uniform_grid(kSwitchGridMin, kSwitchGridMax, points);
    std::vector<EfficiencyCurve> curves;
    for (const auto &plan : standard_protocols(repeaters)) {
        curves.push_back(efficiency_curve(plan, grid));
    }
    return curves;
}

std::string active_at(const Envelope &env, double f) {
    size_t best = 0;
    for (size_t i = 0; i < env.f_in.size(); i++) {
        if (std::abs(env.f_in[i] - f) < std::abs(env.f_in[best] - f)) {
            best = i;
        }
    }
    return env.active_label[best];
}

}  // namespace

TEST(efficiency, standard_protocols) {
    auto plans = standard_protocols(1);
    ASSERT_EQ(plans.size(), 4u);
    EXPECT_EQ(plans[2].label, "P3");
    EXPECT_EQ(plans[2].plan.str(), "repeaters=1; rounds=913,923,933");
    EXPECT_EQ(standard_protocol("P4", 3).plan.str(), "repeaters=3; rounds=923,923,923");
    EXPECT_THROW(standard_protocol("P9", 1), std::invalid_argument);
}

TEST(efficiency, identity_protocol_has_unit_efficiency) {
    ChainPlan identity = ChainPlan::parse("repeaters=0; rounds=skip,skip,skip");
    for (double f : {0.82, 0.9, 0.99, 1.0}) {
        EXPECT_NEAR(efficiency(identity, f), 1.0, 1e-15);
    }
}

TEST(efficiency, undefined_at_or_below_hashing_threshold) {
    EXPECT_THROW(efficiency(standard_protocol("P1", 1).plan, 0.8), std::domain_error);
    EXPECT_THROW(efficiency_curve(standard_protocol("P1", 1), uniform_grid(0.8, 0.9, 11)), std::domain_error);
}

TEST(efficiency, high_fidelity_prefers_p4) {
    EXPECT_LT(efficiency(standard_protocol("P1", 1).plan, 0.99), efficiency(standard_protocol("P4", 1).plan, 0.99));
}

TEST(efficiency, curve_is_continuous) {
    auto curves = standard_curves(1);
    const auto &p3 = curves[2];
    for (size_t i = 1; i < p3.efficiency.size(); i++) {
        EXPECT_LT(std::abs(p3.efficiency[i] - p3.efficiency[i - 1]), 1e-3);
    }
}

TEST(efficiency, switching_points_one_repeater) {
    auto curves = standard_curves(1);
    auto sps = switching_points(curves);
    ASSERT_EQ(sps.size(), 3u);
    const double expected[] = {0.9343, 0.9356, 0.9655};
    for (size_t i = 0; i < 3; i++) {
        ASSERT_TRUE(sps[i].f_sw.has_value());
        EXPECT_NEAR(*sps[i].f_sw, expected[i], 0.003);
    }
    EXPECT_EQ(sps[0].from, "P1");
    EXPECT_EQ(sps[0].to, "P2");
}

TEST(efficiency, switching_points_five_repeaters) {
    auto sps = switching_points(standard_curves(5));
    const double expected[] = {0.9524, 0.9532, 0.9747};
    for (size_t i = 0; i < 3; i++) {
        ASSERT_TRUE(sps[i].f_sw.has_value());
        EXPECT_NEAR(*sps[i].f_sw, expected[i], 0.003);
    }
}

TEST(efficiency, switching_points_move_right_with_repeaters) {
    std::vector<std::vector<SwitchPoint>> by_count;
    for (int r : {1, 3, 5, 7}) {
        by_count.push_back(switching_points(standard_curves(r)));
    }
    for (size_t c = 1; c < by_count.size(); c++) {
        for (size_t i = 0; i < 3; i++) {
            EXPECT_GE(*by_count[c][i].f_sw, *by_count[c - 1][i].f_sw);
        }
    }
}

TEST(efficiency, switching_points_stable_under_refinement) {
    auto coarse = switching_points(standard_curves(3));
    auto fine = switching_points(standard_curves(3, 2 * kSwitchGridPoints));
    for (size_t i = 0; i < 3; i++) {
        EXPECT_LT(std::abs(*coarse[i].f_sw - *fine[i].f_sw), 5e-4);
    }
}

TEST(efficiency, envelope_examples) {
    auto curves = standard_curves(1);
    Envelope env = optimal_envelope(curves);
    EXPECT_EQ(active_at(env, 0.92), "P1");
    EXPECT_EQ(active_at(env, 0.95), "P3");
    EXPECT_EQ(active_at(env, 0.98), "P4");
    for (size_t i = 0; i < env.f_in.size(); i++) {
        for (const auto &c : curves) {
            EXPECT_GE(env.efficiency[i], c.efficiency[i]);
        }
    }
}

TEST(efficiency, envelope_is_continuous_at_switch) {
    // At the P2 -> P3 crossing for three repeaters the two curves agree.
    ChainPlan p2 = standard_protocol("P2", 3).plan, p3 = standard_protocol("P3", 3).plan;
    auto sps = switching_points(standard_curves(3));
    double f = *sps[1].f_sw;
    EXPECT_NEAR(efficiency(p2, f), efficiency(p3, f), 1e-6);
    EXPECT_NEAR(f, 0.9474, 0.003);
}

TEST(efficiency, mismatched_grids_rejected) {
    auto a = efficiency_curve(standard_protocol("P1", 1), uniform_grid(0.85, 1.0, 10));
    auto b = efficiency_curve(standard_protocol("P2", 1), uniform_grid(0.85, 1.0, 11));
    std::vector<EfficiencyCurve> both{a, b};
    EXPECT_THROW(switching_points(both), std::invalid_argument);
    EXPECT_THROW(optimal_envelope(both), std::invalid_argument);
    EXPECT_THROW(optimal_envelope(std::vector<EfficiencyCurve>{}), std::invalid_argument);
}

TEST(efficiency, switching_points_across_chain_lengths) {
    struct Row {
        int repeaters;
        double f[3];
    };
    const Row rows[] = {{1, {0.9343, 0.9356, 0.9655}},   {3, {0.9465, 0.9474, 0.9717}},
                        {5, {0.9524, 0.9532, 0.9747}},   {7, {0.9561, 0.9568, 0.9766}},
                        {9, {0.9587, 0.9594, 0.9780}},   {11, {0.9608, 0.9614, 0.9791}},
                        {13, {0.9624, 0.9630, 0.9799}},  {101, {0.9779, 0.9782, 0.9881}},
                        {1001, {0.9877, 0.9879, 0.9934}}};
    for (const auto &row : rows) {
        auto sps = switching_points(standard_curves(row.repeaters));
        for (size_t i = 0; i < 3; i++) {
            ASSERT_TRUE(sps[i].f_sw.has_value()) << row.repeaters;
            EXPECT_NEAR(*sps[i].f_sw, row.f[i], 0.003) << row.repeaters << " repeaters, crossing " << i;
        }
    }
}
