// SPDX-License-Identifier: Apache-2.0
#include "kroots/eval.hpp"

#include <stdexcept>

#include "kroots/diagnostics.hpp"
#include "kroots/parallel.hpp"
#include "kroots/stats.hpp"

namespace kroots {

Dyadic pow_fixed(const Dyadic& base, std::uint64_t e, std::int64_t frac_bits) {
  if (e == 0) return Dyadic(1);
  Dyadic acc = base.truncate(frac_bits);
  std::uint64_t mask = std::uint64_t(1) << (63 - __builtin_clzll(e));
  for (mask >>= 1; mask != 0; mask >>= 1) {
    acc = (acc * acc).truncate(frac_bits);
    if (e & mask) acc = (acc * base).truncate(frac_bits);
  }
  return acc;
}

Dyadic pow_rel(const Dyadic& base, std::uint64_t e, std::int64_t rel_bits) {
  if (base.sign() <= 0) throw std::domain_error("pow_rel needs a positive base");
  if (e == 0) return Dyadic(1);
  // Relative errors of rounded products add (to first order); one guard
  // doubling covers the higher-order terms.
  const std::int64_t nmul = 2 * (63 - __builtin_clzll(e)) + 1;
  const std::int64_t keep = rel_bits + ceil_log2_u64(static_cast<std::uint64_t>(nmul) + 1) + 4;
  Dyadic acc = base.truncate_sig(keep);
  std::uint64_t mask = std::uint64_t(1) << (63 - __builtin_clzll(e));
  for (mask >>= 1; mask != 0; mask >>= 1) {
    acc = (acc * acc).truncate_sig(keep);
    if (e & mask) acc = (acc * base).truncate_sig(keep);
  }
  return acc;
}

namespace {

// Fractional working precision making the accumulated truncation error of
// one full evaluation smaller than 2^-L.
std::int64_t working_precision(const SparsePoly& f, const Dyadic& c, std::int64_t L) {
  const std::int64_t k = static_cast<std::int64_t>(f.sparsity());
  const std::uint64_t n = f.degree();
  const std::int64_t logn = n < 2 ? 1 : ceil_log2_u64(n);
  std::int64_t pos_bits = 0;  // ceil(n * log2 c) when c > 1
  if (c > Dyadic(1)) {
    const std::int64_t cl = c.floor_log2() + 1;  // log2 c <= cl
    if (cl > 0 && n > (std::uint64_t(1) << 40))
      raise(Diag::precision_ceiling, "power growth exceeds supported range");
    pos_bits = static_cast<std::int64_t>(n) * cl;
  }
  return L + ceil_log2_u64(static_cast<std::uint64_t>(k)) + 2 + f.tau_estimate() +
         (2 * logn + 1) * (pos_bits + 2);
}

}  // namespace

Dyadic approx_eval(const SparsePoly& f, const Dyadic& c, std::int64_t L) {
  if (c.sign() <= 0) throw std::domain_error("approx_eval needs a positive point");
  if (L < 0) L = 0;
  const std::int64_t K = working_precision(f, c, L);
  stats().note_precision(K);
  Dyadic sum;
  for (const Term& t : f.terms()) {
    const Dyadic coef = t.coeff.query(K);
    if (t.exponent == 0) {
      sum = (sum + coef).truncate(K);
    } else {
      const Dyadic p = pow_fixed(c, t.exponent, K);
      sum = (sum + (coef * p).truncate(K)).truncate(K);
    }
  }
  return sum;
}

std::vector<Dyadic> approx_eval_tuple(std::span<const SparsePoly> tuple, const Dyadic& c,
                                      std::int64_t L) {
  std::vector<Dyadic> out;
  out.reserve(tuple.size());
  for (const SparsePoly& g : tuple) out.push_back(approx_eval(g, c, L));
  return out;
}

int certified_sign(const SparsePoly& f, const Dyadic& c, std::int64_t max_bits) {
  for (std::int64_t L = 1;; L *= 2) {
    if (L > max_bits) raise(Diag::precision_ceiling, "sign not certified; value may be zero");
    const Dyadic v = approx_eval(f, c, L);
    if (v.abs() > Dyadic::pow2(-L)) return v.sign();
  }
}

void eval_grid(std::span<const SparsePoly> tuple, std::span<const Dyadic> points, std::int64_t L,
               std::vector<Dyadic>& out, bool parallel) {
  const std::int64_t np = static_cast<std::int64_t>(points.size());
  const std::int64_t nt = static_cast<std::int64_t>(tuple.size());
  out.assign(static_cast<std::size_t>(np * nt), Dyadic());
  auto body = [&](std::int64_t i) {
    for (std::int64_t j = 0; j < nt; ++j)
      out[static_cast<std::size_t>(i * nt + j)] = approx_eval(tuple[j], points[i], L);
  };
  if (parallel)
    parallel::parallel_for(np, body);
  else
    parallel::serial_for(np, body);
}

}  // namespace kroots
