// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "kroots/root_count.hpp"
#include "kroots/weak_cover.hpp"

namespace kroots {

/// Disjoint disks with exact root counts, sorted by center, every radius
/// <= 2^-L, covering all real roots of the target in `range`. The exact
/// root at zero (multiplicity = lowest input exponent) is reported both in
/// zero_root_multiplicity and, when positive, as a radius-0 entry.
struct Covering {
  std::vector<CountedDisk> entries;
  std::int64_t L = 0;
  Dyadic range_lo, range_hi;
  bool whole_line = false;
  std::uint64_t zero_root_multiplicity = 0;
};

/// Covering of [0, 1 + 1/n]: wraps each interval of an (L', 8R)-separated
/// weak covering (L' = L + ceil(log2 R) + 4 tau + 5) through the ring
/// counter. Zero-count disks are dropped. Requires f normalized, k >= 2.
Covering covering_unit(const SparsePoly& f, std::int64_t L);

/// x^n f(1/x): exponents mirrored, same coefficient oracles.
SparsePoly reverse_poly(const SparsePoly& f);

/// f(-x): odd-exponent coefficients negated.
SparsePoly negate_poly(const SparsePoly& f);

/// Maps each disk D(m, r) to D(m, r)/(m^2 - r^2)-style image of 1/z, exact
/// in rationals, rounded outward to dyadics well below the radius budget.
/// Input must come from covering_unit of the reversed polynomial at
/// L_in >= L_out + 4 tau + 10; output covers [n/(n+1), inf) at L_out.
Covering invert_covering(const Covering& c, std::int64_t L_out);

/// Merge of a [0, 1+1/n] covering and a [n/(n+1), inf) covering: disks
/// intersecting a partner from the other list are resolved by the
/// center-vs-1 rule; no real root is lost. Requires L > 3 + log2 n.
Covering merge_positive(const Covering& c1, const Covering& c2, std::int64_t L,
                        std::uint64_t n);

/// Full covering of the real line with fewer than 2k disks: positive axis
/// from f and its reversal, negative axis from f(-x) reflected, zero root
/// split off up front.
Covering l_covering(const SparsePoly& f, std::int64_t L);

/// Doubles L from L_start until every disk of the covering holds exactly
/// one root; diagnostic when L_max is passed (multiple roots never split).
Covering isolate(const SparsePoly& f, std::int64_t L_start, std::int64_t L_max);

}  // namespace kroots
