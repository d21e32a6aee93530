// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "kroots/dyadic.hpp"

namespace kroots {

/// Open disk in the complex plane with a real center. radius 0 is reserved
/// for the degenerate exact-zero entry of a covering.
struct Disk {
  Dyadic center;
  Dyadic radius;
};

/// Disk together with the exact number of roots it contains (multiplicity
/// counted).
struct CountedDisk {
  Disk disk;
  std::int64_t mu = 0;
};

}  // namespace kroots
