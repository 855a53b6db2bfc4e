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

#include "adistill/grid.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace adistill {

void GridSpec::validate() const {
    if (!std::isfinite(min) || !std::isfinite(max)) {
        throw std::invalid_argument("grid bounds must be finite");
    }
    if (points == 1 && min == max) {
        return;
    }
    if (!(min < max)) {
        throw std::invalid_argument("grid needs min < max (or min == max with 1 point), got " + str());
    }
    if (points < 2) {
        throw std::invalid_argument("grid needs at least 2 points when min < max, got " + str());
    }
}

std::vector<double> GridSpec::values() const {
    validate();
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = min;
        return out;
    }
    double step = (max - min) / static_cast<double>(points - 1);
    for (size_t i = 0; i < points; i++) {
        out[i] = min + step * static_cast<double>(i);
    }
    out.back() = max;
    return out;
}

namespace {

/// Shortest text that parses back to the same double.
std::string shortest(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string GridSpec::str() const { return shortest(min) + ":" + shortest(max) + ":" + std::to_string(points); }

GridSpec GridSpec::parse(std::string_view text) {
    std::string s(text);
    auto c1 = s.find(':');
    auto c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    if (c2 == std::string::npos || s.find(':', c2 + 1) != std::string::npos) {
        throw std::invalid_argument("grid must look like min:max:points, got '" + s + "'");
    }
    GridSpec g;
    try {
        size_t used = 0;
        std::string a = s.substr(0, c1), b = s.substr(c1 + 1, c2 - c1 - 1), c = s.substr(c2 + 1);
        g.min = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(a);
        g.max = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
        long long p = std::stoll(c, &used);
        if (used != c.size() || p < 1) throw std::invalid_argument(c);
        g.points = static_cast<size_t>(p);
    } catch (const std::logic_error &) {
        throw std::invalid_argument("grid must look like min:max:points with a positive point count, got '" + s +
                                    "'");
    }
    g.validate();
    return g;
}

std::vector<double> uniform_grid(double min, double max, size_t points) { return GridSpec{min, max, points}.values(); }

}  // namespace adistill
