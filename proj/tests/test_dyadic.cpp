// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kroots/dyadic.hpp"

using kroots::Dyadic;

TEST_CASE("canonical form keeps the mantissa odd or zero") {
  Dyadic a(mpz_class(8), 0);
  CHECK(a.mantissa() == 1);
  CHECK(a.exponent() == 3);
  CHECK(Dyadic(0).is_zero());
  CHECK(Dyadic(0).exponent() == 0);
  CHECK(Dyadic(mpz_class(-12), 2) == Dyadic(mpz_class(-3), 4));
}

TEST_CASE("ring operations are exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> md(-1000000, 1000000);
  std::uniform_int_distribution<int> ed(-40, 40);
  for (int i = 0; i < 500; ++i) {
    const Dyadic a(mpz_class(md(rng)), ed(rng));
    const Dyadic b(mpz_class(md(rng)), ed(rng));
    const Dyadic c(mpz_class(md(rng)), ed(rng));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(((a + b) - b) == a);
    CHECK((a * b).to_mpq() == a.to_mpq() * b.to_mpq());
  }
}

TEST_CASE("comparison agrees with rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> md(-1000, 1000);
  std::uniform_int_distribution<int> ed(-20, 20);
  for (int i = 0; i < 500; ++i) {
    const Dyadic a(mpz_class(md(rng)), ed(rng));
    const Dyadic b(mpz_class(md(rng)), ed(rng));
    const int want = cmp(a.to_mpq(), b.to_mpq());
    CHECK(Dyadic::cmp(a, b) == (want > 0 ? 1 : want < 0 ? -1 : 0));
  }
}

TEST_CASE("floor_log2 is exact") {
  CHECK(Dyadic(1).floor_log2() == 0);
  CHECK(Dyadic(mpz_class(5), -4).floor_log2() == -2);   // 5/16 in [1/4, 1/2)
  CHECK(Dyadic(mpz_class(-8), 0).floor_log2() == 3);
  CHECK(Dyadic::pow2(-7).floor_log2() == -7);
}

TEST_CASE("truncate bounds the error by the grid step") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> md(-100000, 100000);
  for (int i = 0; i < 200; ++i) {
    const Dyadic a(mpz_class(md(rng)), -17);
    const Dyadic t = a.truncate(5);
    mpq_class err = a.to_mpq() - t.to_mpq();
    if (sgn(err) < 0) err = -err;
    CHECK(err < mpq_class(1, 32));
    CHECK(t.exponent() >= -5);
  }
}

TEST_CASE("truncate_sig keeps a relative error bound") {
  const Dyadic a(mpz_class("12345678901234567"), -3);
  const Dyadic t = a.truncate_sig(20);
  mpq_class rel = (a.to_mpq() - t.to_mpq()) / a.to_mpq();
  if (sgn(rel) < 0) rel = -rel;
  CHECK(rel < mpq_class(1, 1 << 20));
}

TEST_CASE("string round trip is exact") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> md(-1000000000L, 1000000000L);
  std::uniform_int_distribution<int> ed(-60, 60);
  for (int i = 0; i < 200; ++i) {
    const Dyadic a(mpz_class(md(rng)), ed(rng));
    CHECK(Dyadic::parse(a.to_string()) == a);
  }
  CHECK(Dyadic::parse("5*2^-3") == Dyadic(mpz_class(5), -3));
}

TEST_CASE("decimal rendering") {
  CHECK(Dyadic(mpz_class(1), -1).to_decimal() == "0.5");
  CHECK(Dyadic(mpz_class(5), -4).to_decimal() == "0.3125");
  CHECK(Dyadic(0).to_decimal() == "0");
  CHECK(Dyadic(mpz_class(-3), 2).to_decimal() == "-12");
  CHECK(Dyadic(mpz_class(1), -70).to_decimal(5) == "8.4703e-22");
}

TEST_CASE("division helpers meet their error contracts") {
  const Dyadic a(mpz_class(1), 0);
  const Dyadic b(mpz_class(3), 0);
  const Dyadic q = kroots::div_abs(a, b, 10);
  mpq_class err = mpq_class(1, 3) - q.to_mpq();
  if (sgn(err) < 0) err = -err;
  CHECK(err < mpq_class(1, 1024));

  const Dyadic qr = kroots::div_rel(Dyadic(mpz_class(7), 40), Dyadic(mpz_class(9), -13), 30);
  mpq_class want = mpq_class(7) * mpq_class(mpz_class(1) << 40) /
                   (mpq_class(9) / mpq_class(mpz_class(1) << 13));
  mpq_class rel = (want - qr.to_mpq()) / want;
  if (sgn(rel) < 0) rel = -rel;
  CHECK(rel < mpq_class(1, 1 << 30));
}

TEST_CASE("pow2_floor and log ratio") {
  CHECK(kroots::pow2_floor(Dyadic(mpz_class(9), -2)) == Dyadic(2));
  CHECK(kroots::pow2_floor(Dyadic::pow2(5)) == Dyadic::pow2(5));
  CHECK(kroots::floor_log2_ratio(mpz_class(9), mpz_class(2)) == 2);
  CHECK(kroots::floor_log2_ratio(mpz_class(8), mpz_class(8)) == 0);
  CHECK(kroots::floor_log2_ratio(mpz_class(1), mpz_class(5)) == -3);
  CHECK(kroots::ceil_log2(mpz_class(1)) == 0);
  CHECK(kroots::ceil_log2(mpz_class(9)) == 4);
}
