// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kroots/disk.hpp"
#include "kroots/dyadic.hpp"

namespace kroots::oracle {

/// Dense exact-rational polynomial, index = exponent. Verification-side
/// machinery only: shares no code with the sparse pipeline.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<mpq_class> coeffs);

  static DensePoly from_terms(const std::vector<std::pair<std::uint64_t, mpq_class>>& terms);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class eval(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const { return sgn(eval(x)); }
  DensePoly derivative() const;

 private:
  std::vector<mpq_class> c_;  // trailing (leading) zeros stripped
};

/// Exact isolating interval: lo == hi marks an exact rational root.
struct IsolatedRoot {
  mpq_class lo, hi;
  int multiplicity;
  bool exact() const { return lo == hi; }
};

constexpr int kIsolateDegreeCap = 64;
constexpr int kDiskDegreeCap = 12;

/// All real roots of p in (range_lo, range_hi), isolated with multiplicity.
/// Square-free parts by exact gcd, counts by sign-variation (Sturm) bisection.
/// Degree capped at kIsolateDegreeCap.
std::vector<IsolatedRoot> dense_isolate(const DensePoly& p, const mpq_class& range_lo,
                                        const mpq_class& range_hi);

/// Convenience: all real roots (Cauchy bound range).
std::vector<IsolatedRoot> dense_isolate(const DensePoly& p);

/// Shrink an isolating interval below `width` (no-op for exact roots).
IsolatedRoot refine_root(const DensePoly& p, const IsolatedRoot& r, const mpq_class& width);

/// Exact number of complex roots of p in the open disk, multiplicity
/// included, via the winding number of p over the boundary circle computed
/// from Cauchy indices of the rational parametrization. Returns nullopt when
/// a root lies on the boundary (callers treat that as boundary-degenerate).
/// Degree capped at kDiskDegreeCap.
std::optional<int> dense_count_in_disk(const DensePoly& p, const Disk& disk);

/// Exact Taylor coefficients of p(m + r x).
std::vector<mpq_class> taylor_shift(const DensePoly& p, const mpq_class& m, const mpq_class& r);

}  // namespace kroots::oracle
