// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kroots/dense_oracle.hpp"
#include "kroots/sparse_poly.hpp"

namespace kroots::testing {

/// Rational-valued sparse polynomial kept symbolic so tests can evaluate
/// exactly, independent of the oracle pipeline under test.
struct RationalSparse {
  std::vector<std::pair<std::uint64_t, mpq_class>> terms;  // ascending exponents

  SparsePoly to_sparse() const {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& [e, c] : terms) out.push_back({e, make_rational_oracle(c)});
    return SparsePoly(std::move(out));
  }

  oracle::DensePoly to_dense() const { return oracle::DensePoly::from_terms(terms); }

  mpq_class eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (const auto& [e, c] : terms) {
      mpq_class p(1);
      mpz_pow_ui(p.get_num().get_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(p.get_den().get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(e));
      acc += c * p;
    }
    return acc;
  }

  std::uint64_t degree() const { return terms.back().first; }
  std::size_t sparsity() const { return terms.size(); }

  /// Exact fractional-derivative chain (differentiate, strip powers of x).
  std::vector<RationalSparse> tower() const {
    std::vector<RationalSparse> out{*this};
    while (out.back().terms.size() > 1) {
      const RationalSparse& g = out.back();
      RationalSparse d;
      for (std::size_t i = 1; i < g.terms.size(); ++i) {
        const auto& [e, c] = g.terms[i];
        d.terms.emplace_back(e - g.terms[1].first, c * mpq_class(static_cast<unsigned long>(e)));
      }
      out.push_back(std::move(d));
    }
    return out;
  }
};

inline RationalSparse make_rs(std::vector<std::pair<std::uint64_t, mpq_class>> terms) {
  return RationalSparse{std::move(terms)};
}

/// Random k-nomial with integer coefficients in [-coeff_mag, coeff_mag]\{0}
/// and distinct exponents in [0, n_max].
inline RationalSparse random_knomial(std::mt19937_64& rng, int k, std::uint64_t n_max,
                                     long coeff_mag, bool force_constant_term = false) {
  std::uniform_int_distribution<std::uint64_t> edist(0, n_max);
  std::uniform_int_distribution<long> cdist(-coeff_mag, coeff_mag);
  std::vector<std::uint64_t> exps;
  while (static_cast<int>(exps.size()) < k) {
    std::uint64_t e = exps.empty() && force_constant_term ? 0 : edist(rng);
    bool dup = false;
    for (auto x : exps) dup = dup || x == e;
    if (!dup) exps.push_back(e);
  }
  std::sort(exps.begin(), exps.end());
  RationalSparse rs;
  for (auto e : exps) {
    long c = 0;
    while (c == 0) c = cdist(rng);
    rs.terms.emplace_back(e, mpq_class(c));
  }
  return rs;
}

/// sqrt(v) truncated to `bits` fractional bits (integer square root).
inline Dyadic dyadic_sqrt(unsigned long v, std::int64_t bits) {
  mpz_class scaled(v);
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * bits));
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return Dyadic(root, -bits);
}

}  // namespace kroots::testing
