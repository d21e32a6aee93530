// SPDX-License-Identifier: Apache-2.0
#include "kroots/refine.hpp"

#include <memory>

#include "kroots/diagnostics.hpp"
#include "kroots/eval.hpp"
#include "kroots/stats.hpp"

namespace kroots {

namespace {

// Speed parameter N = 2^nu, squared on Newton success, square-rooted on
// failure. The exponent cap keeps step arithmetic in range.
constexpr std::int64_t kNuCap = std::int64_t(1) << 24;

// Admissible grid around `center`: spacing is the largest power of two with
// t * spacing <= width * ceil(k/2) / (8 k^2 N); grids shrink with the
// bracket so perturbations never cross subdivision order.
Multipoint grid_at(const Dyadic& center, const Dyadic& width_pow2, std::int64_t nu,
                   std::int64_t k) {
  const std::int64_t t = k * k;
  const mpz_class num(static_cast<long>((k + 1) / 2));
  const mpz_class den(static_cast<long>(8 * k * k * t));
  const std::int64_t sp = width_pow2.floor_log2() - nu + floor_log2_ratio(num, den);
  return Multipoint{center, t, Dyadic::pow2(sp)};
}

}  // namespace

IsolatingInterval refine(const FractionalTower& tower, std::size_t level,
                         const IsolatingInterval& interval, std::int64_t L) {
  if (level + 1 >= tower.size())
    throw std::invalid_argument("refine needs a successor tower level");
  const SparsePoly& g = tower.level(level);
  const std::int64_t k = static_cast<std::int64_t>(tower.size());
  const Dyadic target = Dyadic::pow2(-L);

  IsolatingInterval cur = interval;
  if (!(cur.width() > target)) return cur;
  if (cur.sign_a * cur.sign_b != -1)
    throw std::invalid_argument("endpoint signs must straddle zero");

  // power scaling between g' and the next tower level
  const std::uint64_t strip_pow = g.term(1).exponent - 1;

  const std::int64_t n_log = g.degree() < 2 ? 1 : ceil_log2_u64(g.degree());
  const std::int64_t tl_log = ceil_log2(mpz_class(static_cast<long>(g.tau_estimate() + L)));
  const std::int64_t ceiling = 64 * k * (n_log + tl_log + 8);

  std::int64_t nu = 2;  // N = 4
  std::int64_t hint = 1;
  std::int64_t iters = 0;

  while (cur.width() > target) {
    if (++iters > ceiling)
      raise(Diag::refinement_stalled, "iteration ceiling hit; bracket may not isolate");
    stats().refine_iterations.fetch_add(1, std::memory_order_relaxed);

    const Dyadic w = cur.width();
    const Dyadic u = pow2_floor(w);
    const Dyadic mid = (cur.a + cur.b).mul_pow2(-1);
    const Multipoint mgrid = grid_at(mid, u, nu, k);

    auto xi = std::make_shared<AdmissibleResult>(admissible_point(tower.tuple(), mgrid, hint));
    hint = xi->final_prec;
    const int s_mid = xi->values[level].sign;

    bool contracted = false;
    {
      // Newton trial: candidate from certified values of g and g' at xi,
      // then a sign test on an admissible bracket of radius ~w/N around it.
      const std::int64_t cbits = nu + 8;
      const std::int64_t lv = std::max<std::int64_t>(1, cbits - (xi->magnitude_exp - 1));
      const Dyadic v = approx_eval(g, xi->point, lv);
      const Dyadic succ = approx_eval(tower.level(level + 1), xi->point, lv);
      Dyadic dv = succ;
      if (strip_pow > 0) dv = dv * pow_rel(xi->point, strip_pow, cbits + 4);
      if (!dv.is_zero() && !v.is_zero()) {
        const Dyadic step = div_rel(v, dv, cbits);
        const Dyadic lam = (xi->point - step).truncate(-u.floor_log2() + nu + 8);
        const Dyadic radius = u.mul_pow2(1 - nu);
        const Dyadic halfw = mgrid.halfwidth();
        const Dyadic lo = lam - radius, hi = lam + radius;
        if (lo - halfw > cur.a && hi + halfw < cur.b) {
          auto left = std::make_shared<AdmissibleResult>(
              admissible_point(tower.tuple(), grid_at(lo, u, nu, k), hint));
          auto right = std::make_shared<AdmissibleResult>(
              admissible_point(tower.tuple(), grid_at(hi, u, nu, k), hint));
          hint = right->final_prec;
          const int sl = left->values[level].sign;
          const int sr = right->values[level].sign;
          if (sl * sr == -1) {
            cur = {left->point, right->point, sl, sr, left, right};
            nu = std::min(2 * nu, kNuCap);
            contracted = true;
          }
        }
      }
    }
    if (!contracted) {
      // bisection at the admissible point near the midpoint
      if (s_mid == cur.sign_a) {
        cur.a = xi->point;
        cur.sign_a = s_mid;
        cur.cert_a = xi;
      } else {
        cur.b = xi->point;
        cur.sign_b = s_mid;
        cur.cert_b = xi;
      }
      nu = std::max<std::int64_t>(2, nu / 2);
    }
  }
  return cur;
}

}  // namespace kroots
