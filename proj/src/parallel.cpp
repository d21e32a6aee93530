// SPDX-License-Identifier: Apache-2.0
#include "kroots/parallel.hpp"

#include <atomic>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kroots::parallel {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = library default

int default_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// First exception wins; others are dropped. Loop bodies are expected to be
// exception-free in steady state, this only preserves diagnostics.
struct ExceptionBox {
  std::atomic<bool> armed{false};
  std::exception_ptr ptr;
  void capture() {
    if (!armed.exchange(true)) ptr = std::current_exception();
  }
  void rethrow() {
    if (armed.load() && ptr) std::rethrow_exception(ptr);
  }
};
}  // namespace

int max_threads() {
  const int n = g_max_threads.load(std::memory_order_relaxed);
  return n > 0 ? n : default_threads();
}

void set_max_threads(int n) { g_max_threads.store(n, std::memory_order_relaxed); }

void serial_for(std::int64_t n, const std::function<void(std::int64_t)>& body) {
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body) {
#ifdef _OPENMP
  const int nt = max_threads();
  if (nt <= 1 || n <= 1) {
    serial_for(n, body);
    return;
  }
  ExceptionBox box;
  if (omp_in_parallel()) {
#pragma omp taskloop grainsize(1) shared(box)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        box.capture();
      }
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt) shared(box)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        box.capture();
      }
    }
  }
  box.rethrow();
#else
  serial_for(n, body);
#endif
}

void parallel_invoke(const std::vector<std::function<void()>>& tasks) {
#ifdef _OPENMP
  const int nt = max_threads();
  if (nt <= 1 || tasks.size() <= 1) {
    for (const auto& t : tasks) t();
    return;
  }
  ExceptionBox box;
  const std::size_t n = tasks.size();
  if (omp_in_parallel()) {
    // Already inside the engine's team: nest as sibling tasks.
    for (std::size_t i = 0; i < n; ++i) {
      const auto* tp = &tasks[i];
#pragma omp task shared(box) firstprivate(tp)
      {
        try {
          (*tp)();
        } catch (...) {
          box.capture();
        }
      }
    }
#pragma omp taskwait
  } else {
#pragma omp parallel num_threads(nt) shared(box)
#pragma omp single
    {
      for (std::size_t i = 0; i < n; ++i) {
        const auto* tp = &tasks[i];
#pragma omp task shared(box) firstprivate(tp)
        {
          try {
            (*tp)();
          } catch (...) {
            box.capture();
          }
        }
      }
    }
  }
  box.rethrow();
#else
  for (const auto& t : tasks) t();
#endif
}

}  // namespace kroots::parallel
