// SPDX-License-Identifier: Apache-2.0
#include "kroots/weak_cover.hpp"

#include <algorithm>

#include "kroots/diagnostics.hpp"

namespace kroots {

namespace {

struct Node {
  Dyadic lo, hi;
  AdmissiblePtr cert_lo, cert_hi;
  bool sentinel;
};

}  // namespace

WeakCovering weak_covering(const SparsePoly& f, std::int64_t L) {
  return weak_covering(fractional_derivatives(f), L);
}

WeakCovering weak_covering(const FractionalTower& tower, std::int64_t L) {
  const SparsePoly& f = tower.base();
  const std::int64_t k = static_cast<std::int64_t>(tower.size());
  if (k < 2) throw std::invalid_argument("weak covering needs at least two terms");
  const std::uint64_t n = f.degree();
  const std::int64_t tau = f.tau_estimate();
  const std::int64_t t = k * k;

  // grid spacing: power of two with t*step <= min(1/n, 2^(-2 tau - 2)) / 2,
  // so the left grid stays strictly positive
  const std::int64_t n_up = ceil_log2(mpz_class(static_cast<unsigned long>(n)));
  const std::int64_t sp =
      std::min(-n_up, -2 * tau - 2) - ceil_log2(mpz_class(static_cast<long>(t))) - 1;
  const Dyadic step = Dyadic::pow2(sp);

  // anchors: perturbed versions of a point below every positive root and a
  // point above 1 + 1/n
  const Dyadic m_lo = Dyadic::pow2(-2 * tau - 2);
  const std::int64_t n_down = mpz_sizeinbase(mpz_class(static_cast<unsigned long>(n)).get_mpz_t(), 2) - 1;
  const Dyadic m_hi = Dyadic(1) + Dyadic::pow2(1 - n_down);

  auto lo_res = std::make_shared<AdmissibleResult>(
      admissible_point(tower.tuple(), Multipoint{m_lo, t, step}));
  auto hi_res = std::make_shared<AdmissibleResult>(
      admissible_point(tower.tuple(), Multipoint{m_hi, t, step}));
  const Dyadic a_star = lo_res->point;
  const Dyadic b_star = hi_res->point;

  // a* stays below every positive root (Cauchy-type bound), b* above 1+1/n.
  KROOTS_REQUIRE(a_star <= Dyadic::pow2(-2 * tau - 1), Diag::contract_violation,
                 "left anchor drifted above the root lower bound");
  {
    const Dyadic lhs = b_star * Dyadic(mpz_class(static_cast<unsigned long>(n)));
    const Dyadic rhs = Dyadic(mpz_class(static_cast<unsigned long>(n))) + Dyadic(1);
    KROOTS_REQUIRE(lhs >= rhs, Diag::contract_violation, "right anchor below 1 + 1/n");
  }

  std::vector<Node> nodes;
  nodes.push_back({a_star, a_star, lo_res, lo_res, true});
  nodes.push_back({b_star, b_star, hi_res, hi_res, true});

  for (std::int64_t level = k - 2; level >= 0; --level) {
    std::vector<Node> added;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      const Node& left = nodes[i];
      const Node& right = nodes[i + 1];
      const int sl = left.cert_hi->values[static_cast<std::size_t>(level)].sign;
      const int sr = right.cert_lo->values[static_cast<std::size_t>(level)].sign;
      if (sl * sr >= 0) continue;
      IsolatingInterval gap{left.hi, right.lo, sl, sr, left.cert_hi, right.cert_lo};
      IsolatingInterval out = refine(tower, static_cast<std::size_t>(level), gap, L);
      added.push_back({out.a, out.b, out.cert_a, out.cert_b, false});
    }
    nodes.insert(nodes.end(), added.begin(), added.end());
    std::sort(nodes.begin(), nodes.end(),
              [](const Node& x, const Node& y) { return x.lo < y.lo; });
  }

  WeakCovering w;
  w.L = L;
  w.range_lo = a_star;
  w.range_hi = b_star;
  for (Node& nd : nodes) {
    if (nd.sentinel) continue;
    w.intervals.push_back({nd.lo, nd.hi, nd.cert_lo, nd.cert_hi});
  }
  KROOTS_REQUIRE(static_cast<std::int64_t>(w.intervals.size()) <= t, Diag::contract_violation,
                 "weak covering exceeded k^2 intervals");
  return w;
}

WeakCovering separate(const WeakCovering& w, const SeparationParams& params) {
  WeakCovering out = w;
  out.L = params.L;
  auto& iv = out.intervals;
  const Dyadic cap = Dyadic::pow2(-params.L);
  const Dyadic lam(params.lambda);

  auto violates = [&](const WeakInterval& a, const WeakInterval& b) {
    const Dyadic dist = b.lo - a.hi;
    if (dist >= cap) return false;
    return dist < lam * a.width() || dist < lam * b.width();
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
      if (!violates(iv[i], iv[i + 1])) continue;
      iv[i].hi = iv[i + 1].hi;
      iv[i].cert_hi = iv[i + 1].cert_hi;
      iv.erase(iv.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      changed = true;
      break;
    }
  }
  return out;
}

WeakCovering separated_weak_covering(const SparsePoly& f, std::int64_t L,
                                     const mpz_class& lambda) {
  return separated_weak_covering(fractional_derivatives(f), L, lambda);
}

WeakCovering separated_weak_covering(const FractionalTower& tower, std::int64_t L,
                                     const mpz_class& lambda) {
  const std::int64_t k = static_cast<std::int64_t>(tower.size());
  const std::int64_t inner = L + k * k * ceil_log2(lambda + 2);
  WeakCovering w = weak_covering(tower, inner);
  WeakCovering s = separate(w, SeparationParams{L, lambda});
  const Dyadic cap = Dyadic::pow2(-L);
  for (const WeakInterval& i : s.intervals)
    KROOTS_REQUIRE(i.width() <= cap, Diag::contract_violation,
                   "separated interval wider than 2^-L");
  return s;
}

}  // namespace kroots
