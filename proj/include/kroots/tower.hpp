// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "kroots/eval.hpp"
#include "kroots/sparse_poly.hpp"

namespace kroots {

/// The chain f = g_0, g_1, ..., g_(k-1) where each g_(i+1) is the derivative
/// of g_i divided by the largest power of x dividing it. Level i has k-i
/// terms and a non-zero constant term; the chain ends at a constant.
class FractionalTower {
 public:
  explicit FractionalTower(std::vector<SparsePoly> levels) : levels_(std::move(levels)) {}

  std::size_t size() const { return levels_.size(); }
  const SparsePoly& level(std::size_t i) const { return levels_[i]; }
  std::span<const SparsePoly> tuple() const { return levels_; }
  const SparsePoly& base() const { return levels_.front(); }

 private:
  std::vector<SparsePoly> levels_;
};

/// Builds the tower for f. Requires the lowest exponent of f to be zero.
/// Level-i coefficients reuse f's oracles scaled by exact integer products
/// of exponent differences.
FractionalTower fractional_derivatives(const SparsePoly& f);

/// min_i |g_i(x)| within 2^-L; requires x > 0 and a non-empty tuple.
Dyadic min_abs(std::span<const SparsePoly> tuple, const Dyadic& x, std::int64_t L);

}  // namespace kroots
