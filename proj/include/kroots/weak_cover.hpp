// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "kroots/refine.hpp"

namespace kroots {

/// Open interval of a weak covering. Endpoints carry the admissibility
/// certificates produced when they were chosen, so the sign of any tower
/// member there is available without re-evaluation.
struct WeakInterval {
  Dyadic lo, hi;
  AdmissiblePtr cert_lo, cert_hi;

  Dyadic width() const { return hi - lo; }
};

/// Sorted disjoint intervals of width <= 2^-L covering every real root of
/// the target polynomial between range_lo and range_hi.
struct WeakCovering {
  std::vector<WeakInterval> intervals;
  std::int64_t L = 0;
  Dyadic range_lo, range_hi;
};

struct SeparationParams {
  std::int64_t L;
  mpz_class lambda;  // neighbor gap must reach min(2^-L, lambda * width)
};

/// Weak covering of f over [0, 1 + 1/n], built level by level down the
/// fractional-derivative tower: sign changes of the next level across the
/// gaps of the previous covering are refined to width <= 2^-L. At most k^2
/// intervals. Requires f normalized (constant term, k >= 2).
WeakCovering weak_covering(const SparsePoly& f, std::int64_t L);
WeakCovering weak_covering(const FractionalTower& tower, std::int64_t L);

/// Merges neighbors closer than min(2^-L, lambda * width) until none
/// violate; every input interval ends up inside an output interval.
WeakCovering separate(const WeakCovering& w, const SeparationParams& params);

/// Composition: weak covering at L + ceil(k^2 log2(2 + lambda)) followed by
/// separation at (L, lambda); output widths stay <= 2^-L.
WeakCovering separated_weak_covering(const SparsePoly& f, std::int64_t L,
                                     const mpz_class& lambda);
WeakCovering separated_weak_covering(const FractionalTower& tower, std::int64_t L,
                                     const mpz_class& lambda);

}  // namespace kroots
