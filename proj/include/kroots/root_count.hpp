// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

#include "kroots/admissible.hpp"
#include "kroots/disk.hpp"
#include "kroots/tower.hpp"

namespace kroots {

enum class SoftResult { True, False, Undecided };

/// Expression that can be approximated to any absolute precision:
/// fn(L) returns a value within 2^-L of the target.
using ApproxExpr = std::function<Dyadic(std::int64_t)>;

/// Compares two non-negative expressions with a soft margin. True certifies
/// left > right, False certifies right > left; Undecided certifies
/// left/(1+delta) < right <= (1+delta) * left. `one_plus_delta` must be a
/// dyadic rational > 1. Not both expressions may be zero.
SoftResult soft_compare(const ApproxExpr& left, const ApproxExpr& right,
                        const Dyadic& one_plus_delta, std::int64_t prec_seed = 1);

/// i-th Taylor coefficient of f(center + radius*x) within 2^-L, computed as
/// a k-term evaluation with exact binomial scaling (never more than k^2+1
/// coefficients are ever needed). Zero for i beyond the degree.
Dyadic taylor_coeff(const SparsePoly& f, const Disk& disk, std::int64_t i, std::int64_t L);

/// Shared per-disk coefficient store so the l-loop reuses evaluations.
class TaylorCache {
 public:
  TaylorCache(const SparsePoly& f, const Disk& disk, std::int64_t count);
  Dyadic get(std::int64_t i, std::int64_t L);
  std::int64_t count() const { return count_; }

 private:
  const SparsePoly& f_;
  Disk disk_;
  std::int64_t count_;
  std::vector<std::pair<std::int64_t, Dyadic>> memo_;  // per index: (L, value)
};

/// Dominance test on the first k^2 Taylor coefficients of f over the disk:
/// True certifies that the disk contains exactly l roots, provided the tail
/// sum of the remaining coefficients is at most |a_0|/128 (the caller's
/// obligation, discharged by count_roots' geometry).
bool tl_test(const SparsePoly& f, const Disk& disk, std::int64_t l);
bool tl_test(TaylorCache& cache, std::int64_t l, std::int64_t prec_seed = 1);

/// Recenters the disk at an admissible point, then tests growing rings
/// 16 n M^i (2r) for i = 0..k and l = 0..k until some test certifies a
/// count. Requires center >= radius + 2*R*n*radius with the blow-up bound
/// R = 2^(8k+4) n^(5k+16); the returned disk contains the input disk and
/// has radius <= R * radius.
CountedDisk count_roots(const SparsePoly& f, const FractionalTower& tower, const Disk& disk);

/// Blow-up bound R for the wrapper's precondition, as an exact integer.
mpz_class wrapper_blowup(std::int64_t k, std::uint64_t n);

}  // namespace kroots
