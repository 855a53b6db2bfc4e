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

#ifndef ADISTILL_PARALLEL_H
#define ADISTILL_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace adistill {

/// Calls fn(i) for every i in [0, count) on up to `jobs` threads. Indices
/// are handed out dynamically; callers write results into slot i so output
/// order never depends on completion order. The first exception thrown by
/// any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(size_t count, int jobs, Fn &&fn) {
    size_t workers = std::min<size_t>(jobs < 1 ? 1 : static_cast<size_t>(jobs), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back(work);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

/// Ordered map over a grid.
template <typename Fn>
std::vector<double> parallel_map(const std::vector<double> &grid, int jobs, Fn &&fn) {
    std::vector<double> out(grid.size());
    parallel_for(grid.size(), jobs, [&](size_t i) { out[i] = fn(grid[i]); });
    return out;
}

}  // namespace adistill

#endif
