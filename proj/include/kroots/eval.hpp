// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kroots/dyadic.hpp"
#include "kroots/sparse_poly.hpp"

namespace kroots {

/// base^e with every intermediate truncated to `frac_bits` fractional bits.
Dyadic pow_fixed(const Dyadic& base, std::uint64_t e, std::int64_t frac_bits);

/// base^e with relative error < 2^-rel_bits; requires base > 0. Safe for
/// exponent*log2(base) far outside fixed-point range.
Dyadic pow_rel(const Dyadic& base, std::uint64_t e, std::int64_t rel_bits);

/// Value of f at c with |result - f(c)| < 2^-L. Requires c > 0 and L >= 0.
///
/// Every operation runs at a fixed fractional precision chosen from L, the
/// coefficient magnitudes, the degree, and (for c > 1) the bit growth of
/// the powers; powers use repeated squaring with truncation after each step.
Dyadic approx_eval(const SparsePoly& f, const Dyadic& c, std::int64_t L);

/// Entrywise approx_eval; each result is within 2^-L of g_i(c).
std::vector<Dyadic> approx_eval_tuple(std::span<const SparsePoly> tuple, const Dyadic& c,
                                      std::int64_t L);

/// Sign of f(c), certified by doubling the precision until the value clears
/// the error bound. Requires f(c) != 0; gives up at `max_bits`.
int certified_sign(const SparsePoly& f, const Dyadic& c, std::int64_t max_bits = (1 << 22));

/// Grid kernel: out[i*tuple.size()+j] = value of tuple[j] at points[i] within
/// 2^-L. `parallel` selects the OpenMP path; both orderings write by index
/// and produce identical output.
void eval_grid(std::span<const SparsePoly> tuple, std::span<const Dyadic> points, std::int64_t L,
               std::vector<Dyadic>& out, bool parallel = true);

}  // namespace kroots
