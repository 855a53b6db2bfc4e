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

#ifndef ADISTILL_GRID_H
#define ADISTILL_GRID_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace adistill {

/// Uniform grid `points` values from `min` to `max` inclusive. A single
/// point requires min == max.
struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    size_t points = 1000;

    /// Throws std::invalid_argument unless min < max with points >= 2, or
    /// min == max with points == 1.
    void validate() const;
    std::vector<double> values() const;
    /// "min:max:points"
    std::string str() const;
    static GridSpec parse(std::string_view text);
};

std::vector<double> uniform_grid(double min, double max, size_t points);

}  // namespace adistill

#endif
