// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "kroots/dyadic.hpp"

namespace kroots {

/// Arithmetic grid of 2t+1 points with spacing `step`, symmetric about
/// `center`: point(i) = center + (i - t) * step for i = 0..2t.
struct Multipoint {
  Dyadic center;
  std::int64_t t;
  Dyadic step;

  std::int64_t size() const { return 2 * t + 1; }
  Dyadic point(std::int64_t i) const {
    return center + Dyadic(mpz_class(static_cast<long>(i - t))) * step;
  }
  Dyadic halfwidth() const { return Dyadic(mpz_class(static_cast<long>(t))) * step; }
};

}  // namespace kroots
