// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kroots {

/// Arbitrary-precision number mantissa * 2^exponent.
///
/// Canonical form keeps the mantissa zero or odd, so every value has a
/// unique representation and equality is structural. Ring operations
/// (+, -, *) are exact; rounding happens only through the explicit
/// truncate/round entry points.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : man_(v) { normalize(); }            // NOLINT(google-explicit-constructor)
  explicit Dyadic(mpz_class mantissa, std::int64_t exponent = 0)
      : man_(std::move(mantissa)), exp_(exponent) {
    normalize();
  }

  static Dyadic pow2(std::int64_t e) { return Dyadic(mpz_class(1), e); }

  const mpz_class& mantissa() const { return man_; }
  std::int64_t exponent() const { return exp_; }

  bool is_zero() const { return sgn(man_) == 0; }
  int sign() const { return sgn(man_); }
  bool is_pow2() const { return man_ == 1; }

  /// Exact floor(log2 |x|); requires x != 0.
  std::int64_t floor_log2() const;

  Dyadic abs() const {
    Dyadic r = *this;
    r.man_ = ::abs(r.man_);
    return r;
  }
  void negate() { man_ = -man_; }

  /// Exact multiplication by 2^e.
  Dyadic mul_pow2(std::int64_t e) const {
    if (is_zero()) return Dyadic();
    Dyadic r = *this;
    r.exp_ += e;
    return r;
  }

  /// Truncate toward zero to `frac_bits` fractional bits: the result is a
  /// multiple of 2^-frac_bits with |x - result| < 2^-frac_bits.
  Dyadic truncate(std::int64_t frac_bits) const;

  /// Keep only the top `bits` bits of the mantissa (relative error < 2^-bits).
  Dyadic truncate_sig(std::int64_t bits) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a) {
    Dyadic r = a;
    r.negate();
    return r;
  }

  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  /// Three-way comparison, exact.
  static int cmp(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.man_ == b.man_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

  mpq_class to_mpq() const;
  /// Exact only for dyadic rationals; throws otherwise.
  static Dyadic from_mpq_exact(const mpq_class& q);

  /// Exact textual form "m*2^e"; round-trips through parse().
  std::string to_string() const;
  static Dyadic parse(const std::string& text);

  /// Decimal rendering with `sig` significant digits (display only).
  std::string to_decimal(int sig = 17) const;

  double to_double() const;

 private:
  void normalize();

  mpz_class man_{0};
  std::int64_t exp_{0};
};

/// Quotient a/b truncated to `frac_bits` fractional bits; |err| < 2^-frac_bits.
Dyadic div_abs(const Dyadic& a, const Dyadic& b, std::int64_t frac_bits);

/// Quotient a/b with relative error < 2^-rel_bits; requires b != 0.
Dyadic div_rel(const Dyadic& a, const Dyadic& b, std::int64_t rel_bits);

/// Largest power of two <= x; requires x > 0.
Dyadic pow2_floor(const Dyadic& x);

/// floor(log2(a/b)) for positive integers, exact.
std::int64_t floor_log2_ratio(const mpz_class& a, const mpz_class& b);

/// Smallest i with 2^i >= v, for v >= 1.
std::int64_t ceil_log2(const mpz_class& v);
std::int64_t ceil_log2_u64(std::uint64_t v);

}  // namespace kroots
