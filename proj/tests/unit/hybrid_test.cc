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

#include <cmath>
#include <stdexcept>

#include "adistill/code_book.h"
#include "adistill/purification.h"
#include "adistill/werner.h"
#include "gtest/gtest.h"

using namespace adistill;

namespace {

const LogicalFidelityPolynomial &poly933() { return CodeBook::builtin().polynomial("933"); }

/// Independent DEJMPS iteration on (I, X, Y, Z).
double dejmps_fidelity(double f, int rounds) {
    double a = f, b = (1 - f) / 3, c = b, d = b;
    for (int r = 0; r < rounds; r++) {
        double na = a * a + c * c, nb = b * b + d * d, nc = 2 * b * d, nd = 2 * a * c;
        double s = na + nb + nc + nd;
        a = na / s;
        b = nb / s;
        c = nc / s;
        d = nd / s;
    }
    return a;
}

}  // namespace

TEST(hybrid, min_rounds_examples) {
    EXPECT_EQ(min_rounds_to_fidelity(0.97, 0.9563), 0);
    EXPECT_EQ(min_rounds_to_fidelity(0.5, 0.6), std::nullopt);
    EXPECT_EQ(min_rounds_to_fidelity(0.3, 0.6), std::nullopt);
    std::optional<int> rounds = min_rounds_to_fidelity(0.85, 0.9563);
    ASSERT_TRUE(rounds.has_value());
    EXPECT_GE(dejmps_fidelity(0.85, *rounds), 0.9563);
    EXPECT_LT(dejmps_fidelity(0.85, *rounds - 1), 0.9563);
    EXPECT_EQ(*rounds, 2);
    EXPECT_EQ(min_rounds_to_fidelity(0.51, 0.999999, 2), std::nullopt);
    EXPECT_THROW(min_rounds_to_fidelity(0.9, 1.0), std::domain_error);
    EXPECT_THROW(min_rounds_to_fidelity(0.9, 0.5), std::domain_error);
}

TEST(hybrid, pseudo_thresholds) {
    double t933 = pseudo_threshold(poly933());
    EXPECT_NEAR(t933, 0.9563, 0.002);
    for (const char *name : {"913", "923", "933"}) {
        const auto &poly = CodeBook::builtin().polynomial(name);
        double t = pseudo_threshold(poly);
        EXPECT_GT(poly.evaluate(t + 1e-6), t + 1e-6) << name;
        EXPECT_LT(poly.evaluate(t - 1e-6), t - 1e-6) << name;
        for (int i = 1; i < 100; i++) {
            double f = t + (1 - t) * i / 100.0;
            EXPECT_GT(poly.evaluate(f), f) << name;
        }
    }
    EXPECT_THROW(pseudo_threshold(poly933(), 0.97, 0.99), std::domain_error);
}

TEST(hybrid, above_threshold_is_one_bare_round) {
    double t = pseudo_threshold(poly933());
    HybridResult r = hybrid_run(0.97, poly933(), t);
    EXPECT_EQ(r.i_pre, 0);
    EXPECT_DOUBLE_EQ(r.rate, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(r.f_out, eval_qec_map(poly933(), 0.97));
    HybridResult just_above = hybrid_run(t + 1e-9, poly933(), t);
    EXPECT_EQ(just_above.i_pre, 0);
}

TEST(hybrid, run_composition) {
    double t = pseudo_threshold(poly933());
    for (double f : {0.55, 0.7, 0.85, 0.95}) {
        HybridResult r = hybrid_run(f, poly933(), t);
        EXPECT_GE(r.f_at_threshold, t);
        if (r.i_pre >= 1) {
            EXPECT_LT(dejmps_fidelity(f, r.i_pre - 1), t);
        }
        EXPECT_NEAR(r.f_at_threshold, dejmps_fidelity(f, r.i_pre), 1e-14);
        EXPECT_NEAR(r.f_out, poly933().evaluate(r.f_at_threshold), 1e-15);
        PurificationTrace trace = run_rounds(PurificationProtocol::kDejmps, false, f, r.i_pre);
        EXPECT_EQ(r.rate, r.rate_1g * r.rate_2g);
        EXPECT_DOUBLE_EQ(r.rate_1g, (1 - trace.p_total_discard()) / std::pow(2.0, r.i_pre));
        EXPECT_GT(r.rate, 0.0);
        EXPECT_LE(r.rate, 1.0);
        ASSERT_TRUE(r.i_match.has_value());
        EXPECT_GE(dejmps_fidelity(f, *r.i_match), r.f_out);
        EXPECT_LT(dejmps_fidelity(f, *r.i_match - 1), r.f_out);
    }
    EXPECT_THROW(hybrid_run(0.5, poly933(), t), std::domain_error);
}

TEST(hybrid, refined_efficiency_rules) {
    EXPECT_EQ(refined_efficiency(1.0, 0.8, 0.12), 0.0);
    EXPECT_NEAR(refined_efficiency(1.0, 0.95, distillable_entanglement(0.95)), 1.0, 1e-15);
    EXPECT_THROW(refined_efficiency(1.0, 0.95, 0.0), std::domain_error);
    // Baseline is D(F_in) itself once that reaches 0.12.
    EXPECT_DOUBLE_EQ(*refined_baseline(0.95), distillable_entanglement(0.95));
    // Below that, DEJMPS rounds raise it.
    std::optional<double> low = refined_baseline(0.7);
    ASSERT_TRUE(low.has_value());
    EXPECT_GE(*low, 0.12);
    EXPECT_EQ(refined_baseline(0.5), std::nullopt);
}

TEST(hybrid, checkpoint_scan_properties) {
    double t = pseudo_threshold(poly933());
    GridSpec grid{kHybridGridMin, kHybridGridMax, kHybridGridPoints};
    auto rows = checkpoint_scan(poly933(), t, grid, {0.12, 40, 2});
    ASSERT_EQ(rows.size(), kHybridGridPoints);
    int ones = 0, twos = 0;
    for (size_t i = 0; i < rows.size(); i++) {
        const auto &row = rows[i];
        if (i > 0) {
            EXPECT_LE(row.i_pre, rows[i - 1].i_pre);
        }
        EXPECT_GE(row.e_dejmps, 0.0);
        EXPECT_LE(row.e_dejmps, 1.0);
        EXPECT_GE(row.e_hybrid, 0.0);
        EXPECT_LE(row.e_hybrid, 1.0);
        std::string expected =
            row.e_hybrid > row.e_dejmps ? "hybrid" : row.e_dejmps > row.e_hybrid ? "dejmps" : "tie";
        EXPECT_EQ(row.winner, expected);
        if (row.i_match) {
            int extra = *row.i_match - row.i_pre;
            EXPECT_TRUE(extra == 1 || extra == 2) << row.f_in;
            ones += extra == 1;
            twos += extra == 2;
        }
        if (row.f_in >= t) {
            EXPECT_EQ(row.i_pre, 0);
            EXPECT_DOUBLE_EQ(row.f_out_hybrid, poly933().evaluate(row.f_in));
        }
    }
    EXPECT_GT(ones, twos);
    auto marks = checkpoints(rows);
    int low = 0, high = 0;
    for (size_t i : marks) {
        low += rows[i].f_in >= 0.51 && rows[i].f_in <= 0.6;
        high += rows[i].f_in >= 0.9 && rows[i].f_in < t;
    }
    EXPECT_GT(low, high);
}

TEST(hybrid, scan_skips_unreachable_points) {
    double t = pseudo_threshold(poly933());
    auto rows = checkpoint_scan(poly933(), t, GridSpec{0.4, 0.6, 5});
    for (const auto &row : rows) {
        EXPECT_GT(row.f_in, 0.5);
    }
    EXPECT_EQ(rows.size(), 2u);
}
