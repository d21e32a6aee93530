// SPDX-License-Identifier: Apache-2.0
#include "kroots/sparse_poly.hpp"

#include <stdexcept>

#include "kroots/diagnostics.hpp"

namespace kroots {

namespace {
// Hard stop for the doubling loop: a coefficient that cannot be certified
// non-zero by this precision violates the k-nomial contract.
constexpr std::int64_t kTauOracleCeiling = std::int64_t(1) << 20;
}  // namespace

SparsePoly::SparsePoly(std::vector<Term> terms) : d_(std::make_shared<Data>()) {
  if (terms.empty()) throw std::invalid_argument("polynomial needs at least one term");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i - 1].exponent >= terms[i].exponent)
      throw std::invalid_argument("exponents must be strictly increasing");
  }
  d_->terms = std::move(terms);
}

std::int64_t SparsePoly::tau_estimate() const {
  std::call_once(d_->tau_once, [this] {
    // Double the query precision until every coefficient is certified away
    // from zero, then bound each magnitude strictly from above.
    for (std::int64_t k = 1;; k *= 2) {
      if (k > kTauOracleCeiling)
        raise(Diag::zero_coefficient,
              "coefficient not certified non-zero by 2^20 bits");
      bool all_big = true;
      std::vector<Dyadic> approx;
      approx.reserve(d_->terms.size());
      const Dyadic thresh = Dyadic::pow2(-k + 1);
      for (const Term& t : d_->terms) {
        Dyadic v = t.coeff.query(k);
        if (!(v.abs() > thresh)) {
          all_big = false;
          break;
        }
        approx.push_back(std::move(v));
      }
      if (!all_big) continue;
      std::int64_t tau = 1;
      for (const Dyadic& v : approx) {
        const std::int64_t fl = v.floor_log2();
        // smallest integer strictly above |log2|v||
        const std::int64_t t = fl >= 0 ? fl + 1 : (v.is_pow2() || v.mantissa() == -1 ? -fl + 1 : -fl);
        if (t > tau) tau = t;
      }
      d_->tau = tau;
      return;
    }
  });
  return d_->tau;
}

std::int64_t estimate_tau(const SparsePoly& f) { return f.tau_estimate(); }

std::pair<std::uint64_t, SparsePoly> split_zero_root(const SparsePoly& f) {
  const std::uint64_t e1 = f.min_exponent();
  if (e1 == 0) return {0, f};
  std::vector<Term> shifted;
  shifted.reserve(f.sparsity());
  for (const Term& t : f.terms()) shifted.push_back({t.exponent - e1, t.coeff});
  return {e1, SparsePoly(std::move(shifted))};
}

}  // namespace kroots
