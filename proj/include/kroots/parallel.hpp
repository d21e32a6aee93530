// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace kroots::parallel {

/// Upper bound on worker threads for all engine parallelism (grid kernels
/// and quadrant tasks share one pool). 1 disables threading.
int max_threads();
void set_max_threads(int n);

/// Run body(i) for i in [0, n). Iterations must be independent; results are
/// written by index, so output is identical to the serial loop.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

/// Serial reference for the same contract; kept for tests and benchmarks.
void serial_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

/// Run independent tasks, joining before return.
void parallel_invoke(const std::vector<std::function<void()>>& tasks);

}  // namespace kroots::parallel
