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

#ifndef ADISTILL_REPEATER_CHAIN_H
#define ADISTILL_REPEATER_CHAIN_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "adistill/code_book.h"

namespace adistill {

inline constexpr size_t kChainRounds = 3;

/// A linear chain with `n_repeaters` repeaters (odd, or 0 for a bare link)
/// and one code per distillation round. An empty round is skipped; its
/// swaps still happen on schedule.
///
/// Round 1 distills every elementary link. Adjacent links are then swapped
/// pairwise, halving the segment count, and round 2 distills those
/// segments. The remaining segments are swapped end to end before round 3.
struct ChainPlan {
    int n_repeaters = 0;
    std::array<std::optional<std::string>, kChainRounds> rounds;

    /// Throws std::invalid_argument for an even nonzero or negative
    /// repeater count.
    void validate() const;

    /// Swaps each surviving segment undergoes right before each round.
    std::array<int, kChainRounds> swaps_before_round() const;

    /// "repeaters=3; rounds=913,923,933", with "skip" for skipped rounds.
    std::string str() const;
    static ChainPlan parse(std::string_view text);

    bool operator==(const ChainPlan &other) const = default;
};

/// End-to-end fidelity for uniform elementary-link fidelity `f_in`.
double run_chain(const ChainPlan &plan, double f_in, const CodeBook &codes = CodeBook::builtin());

/// Bell-pair bookkeeping across the three rounds. `lcm[r]` matches the
/// output of round r+1 against the block size of round r+2.
struct RoundAccounting {
    std::array<uint64_t, kChainRounds> n_in{};
    std::array<uint64_t, kChainRounds> k_out{};
    std::array<uint64_t, kChainRounds - 1> lcm{};

    uint64_t pairs_consumed() const { return n_in.back(); }
    uint64_t pairs_delivered() const { return k_out.back(); }
    double rate() const { return static_cast<double>(pairs_delivered()) / static_cast<double>(pairs_consumed()); }
};

/// A skipped round counts as a trivial block with n = k = 1.
RoundAccounting rate_accounting(const ChainPlan &plan, const CodeBook &codes = CodeBook::builtin());

}  // namespace adistill

#endif
