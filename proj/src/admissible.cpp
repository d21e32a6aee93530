// SPDX-License-Identifier: Apache-2.0
#include "kroots/admissible.hpp"

#include "kroots/diagnostics.hpp"
#include "kroots/eval.hpp"
#include "kroots/parallel.hpp"

namespace kroots {

namespace {
constexpr std::int64_t kPrecisionCeiling = std::int64_t(1) << 23;

// round(log2 v) for v > 0, ties down: l such that |l - log2 v| <= 1/2.
std::int64_t rounded_log2(const Dyadic& v) {
  const std::int64_t lo = v.floor_log2();
  // log2 v <= lo + 1/2  <=>  v^2 <= 2^(2lo+1)
  return (v * v <= Dyadic::pow2(2 * lo + 1)) ? lo : lo + 1;
}
}  // namespace

AdmissibleResult admissible_point(std::span<const SparsePoly> tuple, const Multipoint& grid,
                                  std::int64_t prec_hint) {
  if (tuple.empty()) throw std::invalid_argument("empty tuple");
  const std::int64_t npts = grid.size();
  std::vector<Dyadic> points;
  points.reserve(npts);
  for (std::int64_t i = 0; i < npts; ++i) {
    points.push_back(grid.point(i));
    if (points.back().sign() <= 0) throw std::invalid_argument("grid point not positive");
  }

  std::vector<Dyadic> approx_min(npts);
  std::vector<char> full(npts, 1);
  Dyadic max_floor;   // certified lower bound on the grid maximum so far
  bool have_floor = false;

  for (std::int64_t L = std::max<std::int64_t>(1, prec_hint);; L *= 2) {
    if (L > kPrecisionCeiling)
      raise(Diag::grid_degenerate, "no grid point separates the tuple from zero");
    const Dyadic tol = Dyadic::pow2(-L);
    // Points whose minimum provably stays below an eighth of the grid
    // maximum can never be selected; skip their remaining evaluations.
    const Dyadic cutoff = have_floor ? max_floor.mul_pow2(-3) : Dyadic();

    parallel::parallel_for(npts, [&](std::int64_t i) {
      Dyadic mn;
      bool complete = true;
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        Dyadic a = approx_eval(tuple[j], points[i], L).abs();
        if (j == 0 || a < mn) mn = std::move(a);
        if (have_floor && !(mn + tol > cutoff)) {
          complete = false;
          break;
        }
      }
      approx_min[i] = std::move(mn);
      full[i] = complete ? 1 : 0;
    });

    std::int64_t best = -1;
    for (std::int64_t i = 0; i < npts; ++i) {
      if (full[i] && (best < 0 || approx_min[i] > approx_min[best])) best = i;
    }
    if (best < 0) continue;  // cannot happen while the floor is valid
    const Dyadic& m = approx_min[best];
    if (m > tol && (!have_floor || m - tol > max_floor)) {
      max_floor = m - tol;
      have_floor = true;
    }
    if (!(m >= tol.mul_pow2(2))) continue;

    AdmissibleResult res;
    res.point = points[best];
    res.grid_index = best;
    res.magnitude_exp = rounded_log2(m);
    res.final_prec = L;
    // Certify every tuple sign at the winner: error strictly below both
    // 2^(magnitude_exp - 2) and the values themselves.
    const std::int64_t cert = std::max(L, 3 - res.magnitude_exp);
    res.values.reserve(tuple.size());
    for (const SparsePoly& g : tuple) {
      Dyadic v = approx_eval(g, res.point, cert);
      if (!(v.abs() > Dyadic::pow2(-cert)))
        raise(Diag::grid_degenerate, "tuple value lost certification at winner");
      res.values.push_back({v.sign(), std::move(v), -cert});
    }
    return res;
  }
}

}  // namespace kroots
