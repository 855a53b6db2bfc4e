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

#include "adistill/repeater_chain.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "adistill/werner.h"

namespace adistill {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        b++;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        e--;
    }
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

bool is_skip(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s == "skip";
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("Bell pair count overflows 64 bits");
    }
    return out;
}

}  // namespace

void ChainPlan::validate() const {
    if (n_repeaters < 0 || (n_repeaters != 0 && n_repeaters % 2 == 0)) {
        throw std::invalid_argument("repeater count must be 0 or odd, got " + std::to_string(n_repeaters));
    }
}

std::array<int, kChainRounds> ChainPlan::swaps_before_round() const {
    validate();
    if (n_repeaters == 0) {
        return {0, 0, 0};
    }
    int segments_after_halving = (n_repeaters + 1) / 2;
    return {0, 1, segments_after_halving - 1};
}

std::string ChainPlan::str() const {
    std::ostringstream out;
    out << "repeaters=" << n_repeaters << "; rounds=";
    for (size_t r = 0; r < kChainRounds; r++) {
        out << (r ? "," : "") << rounds[r].value_or("skip");
    }
    return out.str();
}

ChainPlan ChainPlan::parse(std::string_view text) {
    ChainPlan plan;
    bool have_repeaters = false, have_rounds = false;
    for (const auto &field : split(text, ';')) {
        if (field.empty()) {
            continue;
        }
        auto eq = field.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("chain plan field '" + field + "' is not key=value");
        }
        std::string key = trim(std::string_view(field).substr(0, eq));
        std::string value = trim(std::string_view(field).substr(eq + 1));
        if (key == "repeaters") {
            try {
                size_t used = 0;
                plan.n_repeaters = std::stoi(value, &used);
                if (used != value.size()) {
                    throw std::invalid_argument(value);
                }
            } catch (const std::logic_error &) {
                throw std::invalid_argument("bad repeater count '" + value + "'");
            }
            have_repeaters = true;
        } else if (key == "rounds") {
            auto names = split(value, ',');
            if (names.size() != kChainRounds) {
                throw std::invalid_argument("a chain plan needs exactly 3 rounds, got '" + value + "'");
            }
            for (size_t r = 0; r < kChainRounds; r++) {
                if (names[r].empty()) {
                    throw std::invalid_argument("empty round entry in '" + value + "'");
                }
                plan.rounds[r] = is_skip(names[r]) ? std::nullopt : std::optional<std::string>(names[r]);
            }
            have_rounds = true;
        } else {
            throw std::invalid_argument("unknown chain plan field '" + key + "'");
        }
    }
    if (!have_repeaters || !have_rounds) {
        throw std::invalid_argument("chain plan needs both repeaters= and rounds=: '" + std::string(text) + "'");
    }
    plan.validate();
    return plan;
}

double run_chain(const ChainPlan &plan, double f_in, const CodeBook &codes) {
    auto swaps = plan.swaps_before_round();
    std::array<const LogicalFidelityPolynomial *, kChainRounds> maps{};
    for (size_t r = 0; r < kChainRounds; r++) {
        if (plan.rounds[r]) {
            maps[r] = &codes.polynomial(*plan.rounds[r]);
        }
    }
    double f = f_in;
    if (!(f >= 0.0 && f <= 1.0)) {
        throw std::domain_error("input fidelity must lie in [0, 1], got " + std::to_string(f_in));
    }
    for (size_t r = 0; r < kChainRounds; r++) {
        if (swaps[r] > 0) {
            f = swap_fidelity_uniform(f, swaps[r]);
        }
        if (maps[r] != nullptr) {
            f = eval_qec_map(*maps[r], f);
        }
    }
    return f;
}

RoundAccounting rate_accounting(const ChainPlan &plan, const CodeBook &codes) {
    plan.validate();
    // A skipped round passes pairs through untouched, like a trivial n = k = 1 block.
    std::array<uint64_t, kChainRounds> block{}, logical{};
    for (size_t r = 0; r < kChainRounds; r++) {
        block[r] = plan.rounds[r] ? codes.code(*plan.rounds[r]).n : 1;
        logical[r] = plan.rounds[r] ? codes.code(*plan.rounds[r]).k : 1;
    }
    RoundAccounting acc;
    acc.n_in[0] = checked_mul(static_cast<uint64_t>(plan.n_repeaters) + 1, block[0]);
    acc.k_out[0] = logical[0];
    for (size_t r = 1; r < kChainRounds; r++) {
        uint64_t l = std::lcm(acc.k_out[r - 1], block[r]);
        acc.lcm[r - 1] = l;
        acc.n_in[r] = checked_mul(l / acc.k_out[r - 1], acc.n_in[r - 1]);
        acc.k_out[r] = checked_mul(l / block[r], logical[r]);
    }
    return acc;
}

}  // namespace adistill
