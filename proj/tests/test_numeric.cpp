// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kroots/diagnostics.hpp"
#include "kroots/eval.hpp"
#include "support/fixtures.hpp"

using namespace kroots;
using testing::RationalSparse;
using testing::make_rs;

namespace {
mpq_class abs_q(mpq_class v) {
  if (sgn(v) < 0) v = -v;
  return v;
}
}  // namespace

TEST_CASE("rational oracle meets its error bound") {
  SUBCASE("power-of-two denominator is exact") {
    const CoeffOracle o = make_rational_oracle(1, 2);
    CHECK(o.query(0) == Dyadic(mpz_class(1), -1));
    CHECK(o.query(100) == Dyadic(mpz_class(1), -1));
  }
  SUBCASE("one third at four bits") {
    const CoeffOracle o = make_rational_oracle(1, 3);
    const Dyadic v = o.query(4);
    CHECK(abs_q(v.to_mpq() - mpq_class(1, 3)) < mpq_class(1, 16));
  }
  SUBCASE("integers are exact") {
    const CoeffOracle o = make_rational_oracle(-7, 1);
    CHECK(o.query(0) == Dyadic(-7));
  }
  SUBCASE("zero rejected") {
    CHECK_THROWS_AS(make_rational_oracle(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_rational_oracle(1, 0), std::invalid_argument);
  }
  SUBCASE("repeated queries return identical values") {
    const CoeffOracle o = make_rational_oracle(2, 7);
    for (int k : {1, 5, 9, 5, 1}) CHECK(o.query(k) == o.query(k));
  }
}

TEST_CASE("magnitude estimate brackets the true magnitudes") {
  auto tau_of = [](std::vector<std::pair<std::uint64_t, mpq_class>> terms) {
    return make_rs(std::move(terms)).to_sparse().tau_estimate();
  };
  CHECK(tau_of({{0, mpq_class(1)}, {1, mpq_class(-1)}}) == 1);
  CHECK(tau_of({{0, mpq_class(4)}, {1, mpq_class(1, 4)}}) == 3);
  CHECK(tau_of({{0, mpq_class(3)}, {1, mpq_class(1)}}) == 2);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const RationalSparse rs = testing::random_knomial(rng, 4, 30, 1024);
    const std::int64_t t = rs.to_sparse().tau_estimate();
    // 2^-t < |c| < 2^t for every coefficient, exactly
    const mpq_class hi = mpq_class(mpz_class(1) << static_cast<unsigned>(t));
    for (const auto& [e, c] : rs.terms) {
      CHECK(abs_q(c) < hi);
      CHECK(abs_q(c) > 1 / hi);
    }
  }
}

TEST_CASE("evaluation error stays below the requested bound") {
  SUBCASE("exact root gives a tiny value") {
    const RationalSparse rs = make_rs({{0, mpq_class(-1)}, {3, mpq_class(1)}});
    const Dyadic v = approx_eval(rs.to_sparse(), Dyadic(1), 10);
    CHECK(v.abs() < Dyadic::pow2(-10));
  }
  SUBCASE("linear at its root") {
    const RationalSparse rs = make_rs({{0, mpq_class(-1, 2)}, {1, mpq_class(1)}});
    const Dyadic v = approx_eval(rs.to_sparse(), Dyadic(mpz_class(1), -1), 30);
    CHECK(v.abs() < Dyadic::pow2(-30));
  }
  SUBCASE("high power with a tiny tail term") {
    const RationalSparse rs = make_rs({{0, mpq_class(1)}, {100, mpq_class(32)}});
    const Dyadic v = approx_eval(rs.to_sparse(), Dyadic(mpz_class(1), -1), 20);
    const mpq_class want = rs.eval(mpq_class(1, 2));
    CHECK(abs_q(v.to_mpq() - want) < mpq_class(1, 1 << 20));
  }
  SUBCASE("randomized against exact rational evaluation") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> kd(2, 5);
    std::uniform_int_distribution<long> pd(1, 2000);
    std::uniform_int_distribution<int> Ld(1, 120);
    for (int i = 0; i < 300; ++i) {
      const RationalSparse rs = testing::random_knomial(rng, kd(rng), 40, 512);
      const Dyadic c(mpz_class(pd(rng)), -10);  // (0, ~2)
      const int L = Ld(rng);
      const Dyadic v = approx_eval(rs.to_sparse(), c, L);
      const mpq_class err = abs_q(v.to_mpq() - rs.eval(c.to_mpq()));
      CHECK(err < mpq_class(mpz_class(1), mpz_class(1) << static_cast<unsigned>(L)));
    }
  }
}

TEST_CASE("tuple evaluation") {
  const RationalSparse a = make_rs({{1, mpq_class(1)}});
  const RationalSparse b = make_rs({{0, mpq_class(2)}});
  const std::vector<SparsePoly> tuple{a.to_sparse(), b.to_sparse()};
  const auto vals = approx_eval_tuple(tuple, Dyadic(1), 5);
  REQUIRE(vals.size() == 2);
  CHECK(abs_q(vals[0].to_mpq() - 1) < mpq_class(1, 32));
  CHECK(abs_q(vals[1].to_mpq() - 2) < mpq_class(1, 32));

  SUBCASE("derivative pair of a quadratic") {
    const RationalSparse f = make_rs({{0, mpq_class(-1)}, {2, mpq_class(1)}});
    const RationalSparse df = make_rs({{1, mpq_class(2)}});
    const std::vector<SparsePoly> g{f.to_sparse(), df.to_sparse()};
    const auto vv = approx_eval_tuple(g, Dyadic(1), 10);
    CHECK(vv[0].abs() < Dyadic::pow2(-10));
    CHECK(abs_q(vv[1].to_mpq() - 2) < mpq_class(1, 1 << 10));
  }
  SUBCASE("empty tuple") {
    CHECK(approx_eval_tuple(std::span<const SparsePoly>{}, Dyadic(1), 5).empty());
  }
}

TEST_CASE("grid kernel serial and parallel paths agree bit for bit") {
  std::mt19937_64 rng(31);
  const RationalSparse rs = testing::random_knomial(rng, 4, 50, 100);
  std::vector<SparsePoly> tuple{rs.to_sparse()};
  std::vector<Dyadic> pts;
  for (int i = 1; i <= 40; ++i) pts.push_back(Dyadic(mpz_class(i), -5));
  std::vector<Dyadic> a, b;
  eval_grid(tuple, pts, 64, a, false);
  eval_grid(tuple, pts, 64, b, true);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("certified sign") {
  const RationalSparse rs = make_rs({{0, mpq_class(-1, 3)}, {2, mpq_class(1)}});
  const SparsePoly f = rs.to_sparse();
  CHECK(certified_sign(f, Dyadic(mpz_class(1), -1)) == -1);  // 1/4 - 1/3 < 0
  CHECK(certified_sign(f, Dyadic(1)) == 1);

  // a value that is exactly zero can never certify; the cap must trip
  const RationalSparse z = make_rs({{0, mpq_class(-1)}, {2, mpq_class(1)}});
  CHECK_THROWS_AS(certified_sign(z.to_sparse(), Dyadic(1), 64), DiagnosticError);
}
