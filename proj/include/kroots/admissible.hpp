// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "kroots/multipoint.hpp"
#include "kroots/sparse_poly.hpp"

namespace kroots {

/// A grid point whose tuple values are all comfortably non-zero, plus the
/// certificates that make later sign queries free.
///
/// Guarantees: min_j |g_j(point)| is at least 1/8 of the grid maximum of
/// that minimum, and 2^(magnitude_exp - 1) <= min_j |g_j(point)|.
struct AdmissibleResult {
  struct Entry {
    int sign;          // certified sign of g_j at the point
    Dyadic value;      // approximation with |err| < 2^err_exp < |g_j(point)|
    std::int64_t err_exp;
  };

  Dyadic point;
  std::int64_t magnitude_exp = 0;  // two-sided dyadic magnitude certificate
  std::vector<Entry> values;       // one per tuple member, tuple order
  std::int64_t grid_index = 0;
  std::int64_t final_prec = 1;     // terminal precision; a good warm start nearby
};

using AdmissiblePtr = std::shared_ptr<const AdmissibleResult>;

/// Picks the grid point maximizing the (approximate) minimum of |g_j| over
/// the tuple, doubling the evaluation precision until the winner clears
/// 4 * 2^-L. All grid points must be positive and every g_j must be non-zero
/// somewhere on the grid, else the precision ceiling trips.
///
/// `prec_hint` seeds the doubling loop (contract unchanged).
AdmissibleResult admissible_point(std::span<const SparsePoly> tuple, const Multipoint& grid,
                                  std::int64_t prec_hint = 1);

}  // namespace kroots
