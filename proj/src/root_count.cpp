// SPDX-License-Identifier: Apache-2.0
#include "kroots/root_count.hpp"

#include <algorithm>

#include "kroots/diagnostics.hpp"
#include "kroots/eval.hpp"

namespace kroots {

namespace {
constexpr std::int64_t kSoftCeiling = std::int64_t(1) << 23;
}

SoftResult soft_compare(const ApproxExpr& left, const ApproxExpr& right,
                        const Dyadic& one_plus_delta, std::int64_t prec_seed) {
  if (!(one_plus_delta > Dyadic(1)))
    throw std::invalid_argument("soft margin must exceed 1");
  for (std::int64_t L = std::max<std::int64_t>(1, prec_seed);; L *= 2) {
    const Dyadic tol = Dyadic::pow2(-L);
    const Dyadic el = left(L);
    const Dyadic er = right(L);
    if (el - er > tol.mul_pow2(1)) return SoftResult::True;
    if (er - el > tol.mul_pow2(1)) return SoftResult::False;
    // certify the two-sided ratio sandwich
    if (er + tol <= one_plus_delta * (el - tol) && one_plus_delta * (er - tol) > el + tol)
      return SoftResult::Undecided;
    if (L > kSoftCeiling) {
      if (el <= tol.mul_pow2(1) && er <= tol.mul_pow2(1))
        raise(Diag::contract_violation, "soft comparison of two zero expressions");
      raise(Diag::precision_ceiling, "soft comparison did not converge");
    }
  }
}

namespace {

// Oracle for f_j * binom(e_j, i) * r^i: exact integer binomial, power of the
// radius to a matching relative error, base coefficient boosted to absorb
// the scale.
CoeffOracle shifted_coeff_oracle(const CoeffOracle& base, std::uint64_t e, std::int64_t i,
                                 const Dyadic& radius, std::int64_t tau) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(i));
  const Dyadic b(binom);
  const std::int64_t b_bits = static_cast<std::int64_t>(mpz_sizeinbase(binom.get_mpz_t(), 2));
  const std::int64_t r_log = radius.is_zero() ? 0 : radius.floor_log2() + 1;
  const std::int64_t scale_log = tau + 1 + b_bits + std::max<std::int64_t>(0, i * r_log);
  return CoeffOracle([base, b, radius, i, b_bits, r_log, scale_log](std::int64_t k) {
    const Dyadic coef = base.query(k + 2 + b_bits + std::max<std::int64_t>(0, i * r_log));
    Dyadic rp(1);
    if (i > 0)
      rp = pow_rel(radius, static_cast<std::uint64_t>(i), k + 4 + std::max<std::int64_t>(0, scale_log));
    return (coef * b * rp).truncate(k + 2);
  });
}

}  // namespace

Dyadic taylor_coeff(const SparsePoly& f, const Disk& disk, std::int64_t i, std::int64_t L) {
  if (disk.center.sign() <= 0) throw std::invalid_argument("disk center must be positive");
  if (i < 0) throw std::invalid_argument("negative coefficient index");
  const std::uint64_t ui = static_cast<std::uint64_t>(i);
  if (ui > f.degree()) return Dyadic();
  const std::int64_t tau = f.tau_estimate();
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    if (t.exponent < ui) continue;
    terms.push_back({t.exponent - ui, shifted_coeff_oracle(t.coeff, t.exponent, i, disk.radius, tau)});
  }
  if (terms.empty()) return Dyadic();
  return approx_eval(SparsePoly(std::move(terms)), disk.center, L);
}

TaylorCache::TaylorCache(const SparsePoly& f, const Disk& disk, std::int64_t count)
    : f_(f), disk_(disk), count_(count), memo_(static_cast<std::size_t>(count), {-1, Dyadic()}) {}

Dyadic TaylorCache::get(std::int64_t i, std::int64_t L) {
  auto& slot = memo_[static_cast<std::size_t>(i)];
  if (slot.first < L) slot = {L, taylor_coeff(f_, disk_, i, L)};
  return slot.second;
}

bool tl_test(TaylorCache& cache, std::int64_t l, std::int64_t prec_seed) {
  const std::int64_t count = cache.count();
  if (l >= count) return false;  // beyond the degree the coefficient is zero
  const Dyadic scale(mpz_class(65), -6);  // 65/64
  const std::int64_t sum_guard = ceil_log2(mpz_class(static_cast<long>(count + 1))) + 1;
  ApproxExpr left = [&cache, l](std::int64_t L) { return cache.get(l, L).abs(); };
  ApproxExpr right = [&cache, l, count, sum_guard, scale](std::int64_t L) {
    Dyadic sum;
    for (std::int64_t i = 0; i < count; ++i) {
      if (i == l) continue;
      sum += cache.get(i, L + sum_guard).abs();
    }
    return sum * scale;
  };
  const Dyadic one_plus_delta(mpz_class(129), -7);  // 1 + 1/128
  return soft_compare(left, right, one_plus_delta, prec_seed) == SoftResult::True;
}

bool tl_test(const SparsePoly& f, const Disk& disk, std::int64_t l) {
  const std::int64_t k = static_cast<std::int64_t>(f.sparsity());
  if (l < 0 || l > k) throw std::invalid_argument("l out of range");
  const std::int64_t count =
      std::min<std::int64_t>(k * k, static_cast<std::int64_t>(f.degree())) + 1;
  TaylorCache cache(f, disk, count);
  return tl_test(cache, l);
}

mpz_class wrapper_blowup(std::int64_t k, std::uint64_t n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(5 * k + 16));
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(8 * k + 4));
  return r;
}

CountedDisk count_roots(const SparsePoly& f, const FractionalTower& tower, const Disk& disk) {
  const std::int64_t k = static_cast<std::int64_t>(f.sparsity());
  const std::uint64_t n = f.degree();
  if (disk.radius.sign() <= 0) throw std::invalid_argument("disk radius must be positive");
  const mpz_class r_bound = wrapper_blowup(k, n);

  {
    // center >= radius * (1 + 2 R n)
    const Dyadic factor =
        Dyadic(1) + Dyadic(r_bound * mpz_class(static_cast<unsigned long>(n))).mul_pow2(1);
    KROOTS_REQUIRE(disk.center >= disk.radius * factor, Diag::contract_violation,
                   "disk too close to the origin for certified counting");
  }

  // recenter at an admissible point of a grid spanning [center - r, center + r]
  const std::int64_t t = k * k;
  const std::int64_t sp = disk.radius.floor_log2() -
                          ceil_log2(mpz_class(static_cast<long>(t)));
  auto anchor = admissible_point(tower.tuple(), Multipoint{disk.center, t, Dyadic::pow2(sp)});

  const Dyadic r2 = disk.radius.mul_pow2(1);
  mpz_class growth(static_cast<unsigned long>(n));  // ring factor 256 n^5
  growth = growth * growth * growth * growth * growth;
  mpz_mul_2exp(growth.get_mpz_t(), growth.get_mpz_t(), 8);

  const std::int64_t count = static_cast<std::int64_t>(std::min<std::uint64_t>(
                                 static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k), n)) +
                             1;
  Dyadic ring = Dyadic(mpz_class(static_cast<unsigned long>(16 * n))) * r2;
  const std::int64_t seed = std::max<std::int64_t>(1, -anchor.magnitude_exp + 6);
  for (std::int64_t i = 0; i <= k; ++i) {
    if (i > 0) ring = ring * Dyadic(growth);
    TaylorCache cache(f, Disk{anchor.point, ring}, count);
    for (std::int64_t l = 0; l <= k; ++l) {
      if (tl_test(cache, l, seed)) return CountedDisk{Disk{anchor.point, ring}, l};
    }
  }
  raise(Diag::wrapper_failed, "no ring certified a count; preconditions likely violated");
}

}  // namespace kroots
