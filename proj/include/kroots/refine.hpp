// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "kroots/admissible.hpp"
#include "kroots/tower.hpp"

namespace kroots {

/// Bracket around exactly one simple root: the target polynomial has
/// opposite certified signs at the endpoints and is monotone between them
/// in every calling context. Certificates are present whenever an endpoint
/// was produced as an admissible point (original endpoints may lack them).
struct IsolatingInterval {
  Dyadic a, b;
  int sign_a = 0, sign_b = 0;
  AdmissiblePtr cert_a, cert_b;

  Dyadic width() const { return b - a; }
};

/// Shrinks the bracket for a root of tower.level(level) to width <= 2^-L.
///
/// Trial-and-error Newton against bisection: every tested point is an
/// admissible point of the full tower (grid t = k^2, spacing derived from
/// the current width and speed parameter), so each step also certifies the
/// signs of every tower member there. The Newton denominator comes from the
/// next tower level, which the admissibility certificate keeps away from
/// zero; level must therefore not be the last tower entry.
IsolatingInterval refine(const FractionalTower& tower, std::size_t level,
                         const IsolatingInterval& interval, std::int64_t L);

}  // namespace kroots
