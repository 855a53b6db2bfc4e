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

#include "adistill/convergence.h"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace adistill {

namespace {

constexpr double kNormalizationTolerance = 1e-14;
constexpr double kDoublingTolerance = 1e-10;
constexpr double kSquaringTolerance = 1e-12;
/// Traces shorter than this are not expected to show the limits.
constexpr int kLimitMinSteps = 30;
constexpr double kLimitTolerance = 1e-8;

ConvergenceStep make_step(PurificationProtocol protocol, int n, double a, double b, double c, double d) {
    ConvergenceStep step{n, a, b, c, d};
    if (protocol == PurificationProtocol::kBbpssw) {
        step.s = a + d;
        step.t = b + c;
    } else {
        step.s = a + c;
        step.t = b + d;
    }
    step.u = step.t > 0 ? step.s / step.t : std::numeric_limits<double>::infinity();
    step.r = d / a;
    step.q = (1 - step.r) / (1 + step.r);
    return step;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

ConvergenceTrace iterate(PurificationProtocol protocol, const std::array<double, 4> &start, int n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("iteration count must be non-negative");
    }
    auto [a, b, c, d] = start;
    if (!(a > 0.5)) {
        throw std::invalid_argument("start requires a_0 > 1/2, got a_0 = " + format_double(a));
    }
    if (!(b >= 0 && c >= 0 && d >= 0)) {
        throw std::invalid_argument("start requires non-negative b_0, c_0, d_0");
    }
    double sum = a + b + c + d;
    if (!(std::abs(sum - 1.0) <= 1e-9)) {
        throw std::invalid_argument("start must sum to 1, got " + format_double(sum));
    }
    a /= sum;
    b /= sum;
    c /= sum;
    d /= sum;
    ConvergenceTrace trace{protocol, {}};
    trace.steps.push_back(make_step(protocol, 0, a, b, c, d));
    for (int n = 1; n <= n_max; n++) {
        double na, nb, nc, nd;
        if (protocol == PurificationProtocol::kBbpssw) {
            na = a * a + d * d;
            nb = b * b + c * c;
            nc = 2 * b * c;
            nd = 2 * a * d;
        } else {
            na = a * a + c * c;
            nb = b * b + d * d;
            nc = 2 * b * d;
            nd = 2 * a * c;
        }
        double p_keep = na + nb + nc + nd;
        a = na / p_keep;
        b = nb / p_keep;
        c = nc / p_keep;
        d = nd / p_keep;
        trace.steps.push_back(make_step(protocol, n, a, b, c, d));
    }
    return trace;
}

bool IdentityReport::ok() const {
    for (const auto &check : checks) {
        if (!check.passed) {
            return false;
        }
    }
    return counterexample_candidates.empty();
}

std::string IdentityReport::summary() const {
    std::ostringstream out;
    for (const auto &check : checks) {
        out << (check.passed ? "PASS " : "FAIL ") << check.name;
        if (!check.detail.empty()) {
            out << ": " << check.detail;
        }
        out << "\n";
    }
    if (!counterexample_candidates.empty()) {
        out << "counterexample candidates at n =";
        for (int n : counterexample_candidates) {
            out << " " << n;
        }
        out << "\n";
    }
    return out.str();
}

IdentityReport check_identities(const ConvergenceTrace &trace) {
    IdentityReport report;
    const auto &steps = trace.steps;
    if (steps.empty()) {
        report.checks.push_back({"non-empty trace", false, "trace has no steps"});
        return report;
    }
    int last = static_cast<int>(steps.size()) - 1;

    IdentityCheck normalization{"normalization", true, ""};
    for (const auto &st : steps) {
        double err = std::abs(st.a + st.b + st.c + st.d - 1.0);
        if (err > kNormalizationTolerance || st.a < 0 || st.b < 0 || st.c < 0 || st.d < 0) {
            normalization.passed = false;
            normalization.detail = "step " + std::to_string(st.n) + " off by " + format_double(err);
            break;
        }
    }
    report.checks.push_back(normalization);

    if (trace.protocol == PurificationProtocol::kBbpssw) {
        IdentityCheck doubling{"u_n = u_0^(2^n)", true, ""};
        const ConvergenceStep &s0 = steps.front();
        int compared = 0;
        if (std::isfinite(s0.u)) {
            double log_u0 = std::log(s0.u);
            for (const auto &st : steps) {
                if (!(st.t >= DBL_MIN && st.s >= DBL_MIN)) {
                    break;  // u_n itself is no longer representable
                }
                double expected = std::pow(s0.u, std::ldexp(1.0, st.n));
                double err;
                if (std::isfinite(expected) && expected > 0) {
                    err = std::abs(st.u / expected - 1.0);
                } else {
                    double expected_log = std::ldexp(log_u0, st.n);
                    err = std::abs((std::log(st.s) - std::log(st.t)) / expected_log - 1.0);
                }
                compared++;
                if (!(err <= kDoublingTolerance)) {
                    doubling.passed = false;
                    doubling.detail = "step " + std::to_string(st.n) + " relative error " + format_double(err);
                    break;
                }
            }
        }
        if (doubling.passed) {
            doubling.detail = std::to_string(compared) + " representable steps compared";
        }
        report.checks.push_back(doubling);

        IdentityCheck squaring{"q_{n+1} = q_n^2", true, ""};
        IdentityCheck monotone{"q_n non-increasing", true, ""};
        for (int n = 0; n < last; n++) {
            double q = steps[n].q, next = steps[n + 1].q;
            if (std::abs(next - q * q) > kSquaringTolerance && squaring.passed) {
                squaring.passed = false;
                squaring.detail = "step " + std::to_string(n + 1) + " error " + format_double(std::abs(next - q * q));
            }
            if (next > q + kSquaringTolerance && monotone.passed) {
                monotone.passed = false;
                monotone.detail = "q rises at step " + std::to_string(n + 1);
            }
        }
        report.checks.push_back(squaring);
        report.checks.push_back(monotone);
    } else {
        IdentityCheck increase{"u_n eventually increasing (m <= " + std::to_string(kEventualIncreaseWindow) + ")",
                               true, ""};
        for (int n = 0; n < last; n++) {
            if (std::isinf(steps[n].u)) {
                continue;  // already diverged
            }
            bool found = false;
            int reach = std::min(kEventualIncreaseWindow, last - n);
            for (int m = 1; m <= reach && !found; m++) {
                found = steps[n + m].u > steps[n].u;
            }
            if (!found && reach == kEventualIncreaseWindow) {
                report.counterexample_candidates.push_back(n);
            }
        }
        if (!report.counterexample_candidates.empty()) {
            increase.passed = false;
            increase.detail = std::to_string(report.counterexample_candidates.size()) + " candidate(s)";
        }
        report.checks.push_back(increase);

        IdentityCheck vanish{"b_n + c_n -> 0", true, ""};
        const ConvergenceStep &end = steps.back();
        if (last < kLimitMinSteps) {
            vanish.detail = "skipped: trace shorter than " + std::to_string(kLimitMinSteps) + " steps";
        } else if (!(end.b + end.c < kLimitTolerance)) {
            vanish.passed = false;
            vanish.detail = "b + c = " + format_double(end.b + end.c) + " at n = " + std::to_string(end.n);
        }
        report.checks.push_back(vanish);

        IdentityCheck diverge{"u_n -> infinity", true, ""};
        if (last < kLimitMinSteps) {
            diverge.detail = "skipped: trace shorter than " + std::to_string(kLimitMinSteps) + " steps";
        } else if (!(end.u > 1.0 / kLimitTolerance)) {
            diverge.passed = false;
            diverge.detail = "u = " + format_double(end.u) + " at n = " + std::to_string(end.n);
        }
        report.checks.push_back(diverge);
    }
    return report;
}

}  // namespace adistill
