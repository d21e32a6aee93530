// SPDX-License-Identifier: Apache-2.0
#include "kroots/cover.hpp"

#include <algorithm>

#include "kroots/diagnostics.hpp"
#include "kroots/parallel.hpp"

namespace kroots {

namespace {

void check_sorted_disjoint(const std::vector<CountedDisk>& v, const char* what) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[i + 1];
    KROOTS_REQUIRE(a.disk.center < b.disk.center, Diag::contract_violation,
                   std::string(what) + ": centers not increasing");
    KROOTS_REQUIRE(b.disk.center - a.disk.center >= a.disk.radius + b.disk.radius,
                   Diag::contract_violation, std::string(what) + ": disks overlap");
  }
}

}  // namespace

Covering covering_unit(const SparsePoly& f, std::int64_t L) {
  if (f.min_exponent() != 0) throw std::invalid_argument("polynomial not normalized");
  const std::int64_t k = static_cast<std::int64_t>(f.sparsity());
  if (k < 2) throw std::invalid_argument("covering needs at least two terms");
  const std::uint64_t n = f.degree();
  const std::int64_t tau = f.tau_estimate();

  const mpz_class blowup = wrapper_blowup(k, n);
  const std::int64_t inner_L = L + ceil_log2(blowup) + 4 * tau + 5;

  const FractionalTower tower = fractional_derivatives(f);
  const WeakCovering weak = separated_weak_covering(tower, inner_L, 8 * blowup);

  Covering out;
  out.L = L;
  out.range_lo = Dyadic(0);
  // informational: slight over-approximation of 1 + 1/n
  out.range_hi = Dyadic(1) + div_abs(Dyadic(1), Dyadic(mpz_class(static_cast<unsigned long>(n))), 64) +
                 Dyadic::pow2(-64);

  const Dyadic cap = Dyadic::pow2(-L);
  for (const WeakInterval& iv : weak.intervals) {
    const Dyadic m = (iv.lo + iv.hi).mul_pow2(-1);
    const Dyadic r = iv.width().mul_pow2(-1);
    CountedDisk cd = count_roots(f, tower, Disk{m, r});
    KROOTS_REQUIRE(cd.disk.radius <= cap, Diag::contract_violation,
                   "wrapped disk exceeds the radius budget");
    if (cd.mu > 0) out.entries.push_back(std::move(cd));
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CountedDisk& a, const CountedDisk& b) { return a.disk.center < b.disk.center; });
  check_sorted_disjoint(out.entries, "unit covering");
  // real traces stay well inside the positive axis
  const Dyadic left_bound = Dyadic::pow2(-2 * tau - 4);
  for (const CountedDisk& cd : out.entries) {
    KROOTS_REQUIRE(cd.disk.center - cd.disk.radius >= left_bound, Diag::contract_violation,
                   "disk trace reaches the origin");
    KROOTS_REQUIRE(cd.disk.center + cd.disk.radius <= Dyadic(4), Diag::contract_violation,
                   "disk trace beyond the unit-side bound");
  }
  return out;
}

SparsePoly reverse_poly(const SparsePoly& f) {
  const std::uint64_t n = f.degree();
  std::vector<Term> terms;
  terms.reserve(f.sparsity());
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({n - it->exponent, it->coeff});
  return SparsePoly(std::move(terms));
}

SparsePoly negate_poly(const SparsePoly& f) {
  std::vector<Term> terms;
  terms.reserve(f.sparsity());
  for (const Term& t : f.terms()) {
    if (t.exponent % 2 == 0) {
      terms.push_back(t);
    } else {
      const CoeffOracle base = t.coeff;
      terms.push_back({t.exponent, CoeffOracle([base](std::int64_t k) {
                         Dyadic v = base.query(k);
                         v.negate();
                         return v;
                       })});
    }
  }
  return SparsePoly(std::move(terms));
}

Covering invert_covering(const Covering& c, std::int64_t L_out) {
  Covering out;
  out.L = L_out;
  out.range_lo = Dyadic(0);
  out.range_hi = Dyadic(0);
  const std::int64_t guard = L_out + 64;
  const Dyadic cap = Dyadic::pow2(-L_out);

  for (const CountedDisk& cd : c.entries) {
    const Dyadic& m = cd.disk.center;
    const Dyadic& r = cd.disk.radius;
    KROOTS_REQUIRE(m > r, Diag::contract_violation, "inversion needs center > radius");
    const mpq_class mq = m.to_mpq(), rq = r.to_mpq();
    const mpq_class den = mq * mq - rq * rq;  // dyadic rational, exactly representable
    const mpq_class cen = mq / den;
    const mpq_class rad = 2 * rq / den;
    // outward dyadic rounding: center snapped, radius enlarged to absorb it
    const Dyadic center = div_abs(m, Dyadic::from_mpq_exact(den), guard);
    mpq_class shift = cen - center.to_mpq();
    if (sgn(shift) < 0) shift = -shift;
    // smallest multiple of 2^-guard at least rad + shift
    mpq_class need = rad + shift;
    mpz_class num = need.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(guard));
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), need.get_den().get_mpz_t());
    const Dyadic radius(q, -guard);
    KROOTS_REQUIRE(radius.to_mpq() >= rad + shift, Diag::contract_violation,
                   "inverted disk rounding lost containment");
    KROOTS_REQUIRE(radius <= cap, Diag::contract_violation,
                   "inverted disk exceeds the radius budget");
    out.entries.push_back({Disk{center, radius}, cd.mu});
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CountedDisk& a, const CountedDisk& b) { return a.disk.center < b.disk.center; });
  check_sorted_disjoint(out.entries, "inverted covering");
  return out;
}

Covering merge_positive(const Covering& c1, const Covering& c2, std::int64_t L,
                        std::uint64_t n) {
  KROOTS_REQUIRE(L > 3 + ceil_log2(mpz_class(static_cast<unsigned long>(std::max<std::uint64_t>(n, 1)))),
                 Diag::contract_violation, "merge needs L > 3 + log2 n");
  auto intersects = [](const CountedDisk& a, const CountedDisk& b) {
    const Dyadic d = a.disk.center < b.disk.center ? b.disk.center - a.disk.center
                                                   : a.disk.center - b.disk.center;
    return d < a.disk.radius + b.disk.radius;
  };
  const Dyadic one(1);
  std::vector<CountedDisk> kept;
  std::vector<char> drop2(c2.entries.size(), 0);
  for (const CountedDisk& a : c1.entries) {
    bool keep_a = true;
    for (std::size_t j = 0; j < c2.entries.size(); ++j) {
      if (!intersects(a, c2.entries[j])) continue;
      if (a.disk.center <= one)
        drop2[j] = 1;  // first list wins at or left of 1
      else
        keep_a = false;
    }
    if (keep_a) kept.push_back(a);
  }
  for (std::size_t j = 0; j < c2.entries.size(); ++j)
    if (!drop2[j]) kept.push_back(c2.entries[j]);

  Covering out;
  out.L = L;
  out.range_lo = Dyadic(0);
  out.range_hi = Dyadic(0);
  out.entries = std::move(kept);
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CountedDisk& a, const CountedDisk& b) { return a.disk.center < b.disk.center; });
  check_sorted_disjoint(out.entries, "merged positive covering");
  return out;
}

namespace {

// Covering of (0, inf) for a normalized polynomial: unit side plus the
// inverted covering of the reversal.
Covering positive_covering(const SparsePoly& g, std::int64_t L) {
  if (g.sparsity() < 2) return Covering{{}, L, Dyadic(0), Dyadic(0), false, 0};
  const std::int64_t tau = g.tau_estimate();
  const std::int64_t L_rev = L + 4 * tau + 10;
  Covering c1, c2raw;
  parallel::parallel_invoke({[&] { c1 = covering_unit(g, L); },
                             [&] { c2raw = covering_unit(reverse_poly(g), L_rev); }});
  const Covering c2 = invert_covering(c2raw, L);
  return merge_positive(c1, c2, L, g.degree());
}

}  // namespace

Covering l_covering(const SparsePoly& f, std::int64_t L) {
  const auto [zero_mult, g] = split_zero_root(f);
  Covering out;
  out.whole_line = true;
  out.L = L;
  out.zero_root_multiplicity = zero_mult;

  if (g.sparsity() >= 2) {
    const std::uint64_t n = g.degree();
    const std::int64_t tau = g.tau_estimate();
    const std::int64_t log_n = ceil_log2(mpz_class(static_cast<unsigned long>(n)));
    const std::int64_t L_eff = std::max({L, 4 + log_n, 2 * tau + log_n + 6});

    Covering pos, neg;
    parallel::parallel_invoke({[&] { pos = positive_covering(g, L_eff); },
                               [&] { neg = positive_covering(negate_poly(g), L_eff); }});

    for (auto it = neg.entries.rbegin(); it != neg.entries.rend(); ++it) {
      CountedDisk d = *it;
      d.disk.center.negate();
      out.entries.push_back(std::move(d));
    }
    if (zero_mult > 0)
      out.entries.push_back({Disk{Dyadic(0), Dyadic(0)}, static_cast<std::int64_t>(zero_mult)});
    for (const CountedDisk& d : pos.entries) out.entries.push_back(d);
  } else if (zero_mult > 0) {
    out.entries.push_back({Disk{Dyadic(0), Dyadic(0)}, static_cast<std::int64_t>(zero_mult)});
  }

  check_sorted_disjoint(out.entries, "full covering");
  const std::int64_t k = static_cast<std::int64_t>(f.sparsity());
  KROOTS_REQUIRE(static_cast<std::int64_t>(out.entries.size()) < 2 * k, Diag::contract_violation,
                 "covering has too many disks");
  return out;
}

Covering isolate(const SparsePoly& f, std::int64_t L_start, std::int64_t L_max) {
  for (std::int64_t L = std::max<std::int64_t>(2, L_start); L <= L_max; L *= 2) {
    Covering c = l_covering(f, L);
    const bool simple = std::all_of(c.entries.begin(), c.entries.end(),
                                    [](const CountedDisk& d) { return d.mu == 1; });
    if (simple) return c;
  }
  raise(Diag::separation_below_threshold,
        "some disk kept more than one root up to the precision limit");
}

}  // namespace kroots
