// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace kroots {

enum class Diag {
  grid_degenerate,
  refinement_stalled,
  wrapper_failed,
  separation_below_threshold,
  precision_ceiling,
  contract_violation,
  zero_coefficient,
  oracle_ceiling,
};

inline const char* diag_code(Diag d) {
  switch (d) {
    case Diag::grid_degenerate: return "grid_degenerate";
    case Diag::refinement_stalled: return "refinement_stalled";
    case Diag::wrapper_failed: return "wrapper_failed";
    case Diag::separation_below_threshold: return "separation_below_threshold";
    case Diag::precision_ceiling: return "precision_ceiling";
    case Diag::contract_violation: return "contract_violation";
    case Diag::zero_coefficient: return "zero_coefficient";
    case Diag::oracle_ceiling: return "oracle_ceiling";
  }
  return "unknown";
}

/// Runtime condition the engine can detect but not repair. The CLI maps
/// these to exit code 3 with a machine-readable code.
class DiagnosticError : public std::runtime_error {
 public:
  DiagnosticError(Diag d, const std::string& detail)
      : std::runtime_error(std::string(diag_code(d)) + ": " + detail), diag_(d) {}
  Diag diag() const { return diag_; }

 private:
  Diag diag_;
};

[[noreturn]] inline void raise(Diag d, const std::string& detail) {
  throw DiagnosticError(d, detail);
}

#define KROOTS_REQUIRE(cond, diag, detail) \
  do {                                     \
    if (!(cond)) ::kroots::raise(diag, detail); \
  } while (0)

}  // namespace kroots
