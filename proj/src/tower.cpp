// SPDX-License-Identifier: Apache-2.0
#include "kroots/tower.hpp"

#include <stdexcept>

namespace kroots {

namespace {

CoeffOracle scaled_oracle(const CoeffOracle& base, const mpz_class& mult) {
  const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(mult.get_mpz_t(), 2));
  const Dyadic m(mult);
  return CoeffOracle([base, m, bits](std::int64_t k) { return base.query(k + bits) * m; });
}

}  // namespace

FractionalTower fractional_derivatives(const SparsePoly& f) {
  if (f.min_exponent() != 0)
    throw std::invalid_argument("tower needs a non-zero constant term");
  const std::size_t k = f.sparsity();
  std::vector<SparsePoly> levels;
  levels.reserve(k);
  levels.push_back(f);
  // Term i of level j carries coefficient c_i * prod_{s<j} (e_i - e_s) at
  // exponent e_i - e_j (original indices; one term drops per level).
  std::vector<mpz_class> mult(k, mpz_class(1));
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<Term> terms;
    terms.reserve(k - j);
    const std::uint64_t ej = f.term(j).exponent;
    const std::uint64_t prev = f.term(j - 1).exponent;
    for (std::size_t i = j; i < k; ++i) {
      const std::uint64_t ei = f.term(i).exponent;
      mult[i] *= mpz_class(static_cast<unsigned long>(ei - prev));
      terms.push_back({ei - ej, scaled_oracle(f.term(i).coeff, mult[i])});
    }
    levels.emplace_back(std::move(terms));
  }
  return FractionalTower(std::move(levels));
}

Dyadic min_abs(std::span<const SparsePoly> tuple, const Dyadic& x, std::int64_t L) {
  if (tuple.empty()) throw std::invalid_argument("empty tuple");
  Dyadic best;
  bool first = true;
  for (const SparsePoly& g : tuple) {
    Dyadic v = approx_eval(g, x, L + 1).abs();
    if (first || v < best) {
      best = std::move(v);
      first = false;
    }
  }
  return best;
}

}  // namespace kroots
