// SPDX-License-Identifier: Apache-2.0
#include "kroots/oracle.hpp"

#include <stdexcept>

namespace kroots {

Dyadic CoeffOracle::query(std::int64_t prec_bits) const {
  if (!impl_) throw std::logic_error("empty oracle");
  Impl& im = *impl_;
  {
    std::lock_guard<std::mutex> lock(im.mu);
    auto it = im.memo.find(prec_bits);
    if (it != im.memo.end()) return it->second;
  }
  Dyadic v = im.fn(prec_bits);
  std::lock_guard<std::mutex> lock(im.mu);
  return im.memo.emplace(prec_bits, std::move(v)).first->second;
}

CoeffOracle make_rational_oracle(const mpq_class& value) {
  if (sgn(value) == 0) throw std::invalid_argument("zero coefficient");
  mpq_class v = value;
  v.canonicalize();
  // Exact if the denominator is a power of two, else floor(p*2^(k+1)/q)/2^(k+1)
  // which is within 2^-(k+1) < 2^-k.
  const mpz_class& den = v.get_den();
  const bool exact = mpz_popcount(den.get_mpz_t()) == 1;
  if (exact) {
    const Dyadic d = Dyadic::from_mpq_exact(v);
    return CoeffOracle([d](std::int64_t) { return d; });
  }
  return CoeffOracle([v](std::int64_t k) {
    const std::int64_t shift = k < 0 ? 1 : k + 1;
    mpz_class num = v.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    return Dyadic(q, -shift);
  });
}

CoeffOracle make_rational_oracle(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  if (p == 0) throw std::invalid_argument("zero coefficient");
  return make_rational_oracle(mpq_class(p, q));
}

}  // namespace kroots
