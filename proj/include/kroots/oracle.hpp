// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "kroots/dyadic.hpp"

namespace kroots {

/// Black-box access to one real coefficient: query(k) returns a dyadic
/// approximation with absolute error < 2^-k.
///
/// Answers are memoized per precision, so query(k) is a pure function of k
/// regardless of evaluation order or thread interleaving.
class CoeffOracle {
 public:
  using Fn = std::function<Dyadic(std::int64_t)>;

  CoeffOracle() = default;
  explicit CoeffOracle(Fn fn) : impl_(std::make_shared<Impl>(std::move(fn))) {}

  Dyadic query(std::int64_t prec_bits) const;

 private:
  struct Impl {
    explicit Impl(Fn f) : fn(std::move(f)) {}
    Fn fn;
    std::mutex mu;
    std::map<std::int64_t, Dyadic> memo;
  };
  std::shared_ptr<Impl> impl_;
};

/// Oracle for an exact rational coefficient. Rejects zero: k-nomial terms
/// are non-zero by contract. Exact whenever the denominator is a power of
/// two.
CoeffOracle make_rational_oracle(const mpq_class& value);
CoeffOracle make_rational_oracle(long p, long q);

}  // namespace kroots
