// SPDX-License-Identifier: Apache-2.0
#include "kroots/dyadic.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace kroots {

void Dyadic::normalize() {
  if (sgn(man_) == 0) {
    exp_ = 0;
    return;
  }
  const mp_bitcnt_t tz = mpz_scan1(man_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), tz);
    exp_ += static_cast<std::int64_t>(tz);
  }
}

std::int64_t Dyadic::floor_log2() const {
  if (is_zero()) throw std::domain_error("floor_log2 of zero");
  // |man| odd: 2^(bits-1) <= |man| < 2^bits, exact even for powers of two.
  const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(man_.get_mpz_t(), 2));
  return exp_ + bits - 1;
}

Dyadic Dyadic::truncate(std::int64_t frac_bits) const {
  if (is_zero() || exp_ >= -frac_bits) return *this;
  const std::int64_t shift = -frac_bits - exp_;
  Dyadic r;
  mpz_tdiv_q_2exp(r.man_.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  r.exp_ = -frac_bits;
  r.normalize();
  return r;
}

Dyadic Dyadic::truncate_sig(std::int64_t bits) const {
  if (is_zero()) return *this;
  const auto have = static_cast<std::int64_t>(mpz_sizeinbase(man_.get_mpz_t(), 2));
  if (have <= bits) return *this;
  return truncate(-(exp_ + have - bits));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t e = std::min(a.exp_, b.exp_);
  Dyadic r;
  mpz_class am = a.man_, bm = b.man_;
  if (a.exp_ > e) mpz_mul_2exp(am.get_mpz_t(), am.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exp_ - e));
  if (b.exp_ > e) mpz_mul_2exp(bm.get_mpz_t(), bm.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exp_ - e));
  r.man_ = am + bm;
  r.exp_ = e;
  r.normalize();
  return r;
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return Dyadic();
  Dyadic r;
  r.man_ = a.man_ * b.man_;
  r.exp_ = a.exp_ + b.exp_;
  // Product of odd mantissas is odd: already canonical.
  return r;
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Same sign: compare magnitudes via floor_log2 first (cheap), exact fallback.
  const std::int64_t la = a.floor_log2(), lb = b.floor_log2();
  if (la != lb) return (la < lb) == (sa > 0) ? -1 : 1;
  const std::int64_t e = std::min(a.exp_, b.exp_);
  mpz_class am = a.man_, bm = b.man_;
  if (a.exp_ > e) mpz_mul_2exp(am.get_mpz_t(), am.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exp_ - e));
  if (b.exp_ > e) mpz_mul_2exp(bm.get_mpz_t(), bm.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exp_ - e));
  return ::cmp(am, bm);
}

mpq_class Dyadic::to_mpq() const {
  mpq_class q(man_);
  if (exp_ >= 0) {
    mpz_mul_2exp(q.get_num().get_mpz_t(), q.get_num().get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
  } else {
    mpz_mul_2exp(q.get_den().get_mpz_t(), q.get_den().get_mpz_t(), static_cast<mp_bitcnt_t>(-exp_));
  }
  q.canonicalize();
  return q;
}

Dyadic Dyadic::from_mpq_exact(const mpq_class& q) {
  const mpz_class& den = q.get_den();
  const mp_bitcnt_t tz = mpz_scan1(den.get_mpz_t(), 0);
  mpz_class odd;
  mpz_tdiv_q_2exp(odd.get_mpz_t(), den.get_mpz_t(), tz);
  if (odd != 1) throw std::domain_error("not a dyadic rational");
  return Dyadic(q.get_num(), -static_cast<std::int64_t>(tz));
}

std::string Dyadic::to_string() const {
  return man_.get_str() + "*2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(const std::string& text) {
  const auto pos = text.find("*2^");
  if (pos == std::string::npos) throw std::invalid_argument("bad dyadic literal: " + text);
  mpz_class man;
  if (mpz_set_str(man.get_mpz_t(), text.substr(0, pos).c_str(), 10) != 0)
    throw std::invalid_argument("bad dyadic mantissa: " + text);
  const std::string es = text.substr(pos + 3);
  std::size_t used = 0;
  const long long e = std::stoll(es, &used);
  if (used != es.size()) throw std::invalid_argument("bad dyadic exponent: " + text);
  return Dyadic(man, e);
}

std::string Dyadic::to_decimal(int sig) const {
  if (is_zero()) return "0";
  const std::string sign = this->sign() < 0 ? "-" : "";
  const mpz_class mag = ::abs(man_);

  // d10 = floor(log10 |x|), found from a log2 estimate plus exact correction.
  auto pow10 = [](std::int64_t p) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(p));
    return r;
  };
  auto magnitude_cmp_pow10 = [&](std::int64_t p) {
    // compare |x| with 10^p, exact
    mpz_class lhs = mag, rhs = p >= 0 ? pow10(p) : mpz_class(1);
    std::int64_t e = exp_;
    if (p < 0) lhs *= pow10(-p);
    if (e >= 0)
      mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    else
      mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return ::cmp(lhs, rhs);
  };
  std::int64_t d10 = static_cast<std::int64_t>(static_cast<double>(floor_log2()) * 0.30102999566398119);
  while (magnitude_cmp_pow10(d10) < 0) --d10;
  while (magnitude_cmp_pow10(d10 + 1) >= 0) ++d10;

  // digits = round(|x| * 10^(sig-1-d10)) rendered with an implied point.
  const std::int64_t scale = static_cast<std::int64_t>(sig) - 1 - d10;
  mpz_class num = mag, den(1);
  if (scale >= 0) num *= pow10(scale); else den *= pow10(-scale);
  if (exp_ >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
  else
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp_));
  mpz_class digits = (2 * num + den) / (2 * den);
  std::string ds = digits.get_str();
  if (static_cast<int>(ds.size()) > sig) {  // rounding carried into a new digit
    ds.pop_back();
    ++d10;
  }
  while (ds.size() > 1 && ds.back() == '0') ds.pop_back();

  std::string out;
  if (d10 >= 0 && d10 <= 20) {
    if (static_cast<std::int64_t>(ds.size()) <= d10 + 1) {
      out = ds + std::string(static_cast<std::size_t>(d10 + 1) - ds.size(), '0');
    } else {
      out = ds.substr(0, static_cast<std::size_t>(d10 + 1)) + "." +
            ds.substr(static_cast<std::size_t>(d10 + 1));
    }
  } else if (d10 < 0 && d10 >= -6) {
    out = "0." + std::string(-d10 - 1, '0') + ds;
  } else {
    out = ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::string(d10 >= 0 ? "+" : "") + std::to_string(d10);
  }
  return sign + out;
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  Dyadic t = truncate_sig(64);
  return mpz_get_d(t.man_.get_mpz_t()) * std::ldexp(1.0, static_cast<int>(t.exp_ > 2000 ? 2000 : (t.exp_ < -2000 ? -2000 : t.exp_)));
}

Dyadic div_abs(const Dyadic& a, const Dyadic& b, std::int64_t frac_bits) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return Dyadic();
  // q = trunc(a / b * 2^frac_bits) / 2^frac_bits
  mpz_class num = a.mantissa();
  const std::int64_t shift = frac_bits + a.exponent() - b.exponent();
  if (shift >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  mpz_class den = b.mantissa();
  if (shift < 0)
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(q, -frac_bits);
}

Dyadic div_rel(const Dyadic& a, const Dyadic& b, std::int64_t rel_bits) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return Dyadic();
  // |a/b| >= 2^(fla - flb - 1); absolute precision anchored there.
  const std::int64_t anchor = a.floor_log2() - b.floor_log2() - 1;
  return div_abs(a, b, rel_bits - anchor + 1);
}

Dyadic pow2_floor(const Dyadic& x) {
  if (x.sign() <= 0) throw std::domain_error("pow2_floor needs a positive value");
  return Dyadic::pow2(x.floor_log2());
}

std::int64_t floor_log2_ratio(const mpz_class& a, const mpz_class& b) {
  if (sgn(a) <= 0 || sgn(b) <= 0) throw std::domain_error("floor_log2_ratio needs positive inputs");
  const auto ba = static_cast<std::int64_t>(mpz_sizeinbase(a.get_mpz_t(), 2));
  const auto bb = static_cast<std::int64_t>(mpz_sizeinbase(b.get_mpz_t(), 2));
  std::int64_t d = ba - bb;  // candidate; true value is d or d-1
  mpz_class lhs = a, rhs = b;
  if (d >= 0)
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(d));
  else
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-d));
  return lhs >= rhs ? d : d - 1;
}

std::int64_t ceil_log2(const mpz_class& v) {
  if (sgn(v) <= 0) throw std::domain_error("ceil_log2 needs a positive value");
  if (v == 1) return 0;
  mpz_class w = v - 1;
  return static_cast<std::int64_t>(mpz_sizeinbase(w.get_mpz_t(), 2));
}

std::int64_t ceil_log2_u64(std::uint64_t v) { return ceil_log2(mpz_class(static_cast<unsigned long>(v))); }

}  // namespace kroots
