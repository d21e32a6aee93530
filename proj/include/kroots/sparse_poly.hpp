// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "kroots/oracle.hpp"

namespace kroots {

struct Term {
  std::uint64_t exponent;
  CoeffOracle coeff;
};

/// k-nomial sum of c_i * x^(e_i) with strictly increasing exponents and
/// non-zero coefficients reachable only through their oracles.
///
/// Immutable after construction; copies share state, so the cached magnitude
/// estimate is computed once per polynomial.
class SparsePoly {
 public:
  explicit SparsePoly(std::vector<Term> terms);

  std::size_t sparsity() const { return d_->terms.size(); }
  std::uint64_t degree() const { return d_->terms.back().exponent; }
  std::uint64_t min_exponent() const { return d_->terms.front().exponent; }
  const Term& term(std::size_t i) const { return d_->terms[i]; }
  const std::vector<Term>& terms() const { return d_->terms; }

  /// Integer t with max_i |log2 |c_i|| strictly between t-2 and t; cached.
  std::int64_t tau_estimate() const;

 private:
  struct Data {
    std::vector<Term> terms;
    std::once_flag tau_once;
    std::int64_t tau = 0;
  };
  std::shared_ptr<Data> d_;
};

/// Same contract as SparsePoly::tau_estimate.
std::int64_t estimate_tau(const SparsePoly& f);

/// Split off the power of x dividing f: returns (e1, f / x^e1).
std::pair<std::uint64_t, SparsePoly> split_zero_root(const SparsePoly& f);

}  // namespace kroots
