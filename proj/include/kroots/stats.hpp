// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdint>

namespace kroots {

/// Per-process counters for reporting; order-independent so parallel runs
/// stay deterministic in everything but these numbers' update order.
struct RunStats {
  std::atomic<std::uint64_t> refine_iterations{0};
  std::atomic<std::int64_t> max_precision_bits{0};

  void reset() {
    refine_iterations.store(0, std::memory_order_relaxed);
    max_precision_bits.store(0, std::memory_order_relaxed);
  }
  void note_precision(std::int64_t bits) {
    std::int64_t cur = max_precision_bits.load(std::memory_order_relaxed);
    while (bits > cur &&
           !max_precision_bits.compare_exchange_weak(cur, bits, std::memory_order_relaxed)) {
    }
  }
};

RunStats& stats();

}  // namespace kroots
