// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kroots/dense_oracle.hpp"
#include "kroots/diagnostics.hpp"
#include "support/fixtures.hpp"

using namespace kroots;
using namespace kroots::oracle;

namespace {

DensePoly poly(std::vector<long> coeffs) {
  std::vector<mpq_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return DensePoly(std::move(c));
}

// product of (x - r_i) for rational roots
DensePoly from_roots(const std::vector<mpq_class>& roots) {
  std::vector<mpq_class> c{mpq_class(1)};
  for (const auto& r : roots) {
    std::vector<mpq_class> nc(c.size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      nc[i + 1] += c[i];
      nc[i] -= c[i] * r;
    }
    c = std::move(nc);
  }
  return DensePoly(std::move(c));
}

}  // namespace

TEST_CASE("isolation on closed forms") {
  SUBCASE("x^2 - 2 in (0, 2)") {
    const auto roots = dense_isolate(poly({-2, 0, 1}), mpq_class(0), mpq_class(2));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[0].lo > 1);
    CHECK(roots[0].hi < 2);
  }
  SUBCASE("double root") {
    // (x - 1/2)^2 = x^2 - x + 1/4
    const DensePoly p(std::vector<mpq_class>{mpq_class(1, 4), mpq_class(-1), mpq_class(1)});
    const auto roots = dense_isolate(p, mpq_class(0), mpq_class(1));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[0].lo <= mpq_class(1, 2));
    CHECK(roots[0].hi >= mpq_class(1, 2));
  }
  SUBCASE("no real roots") {
    CHECK(dense_isolate(poly({1, 0, 1})).empty());
  }
  SUBCASE("exact rational roots with multiplicities") {
    // (x-1)^2 (x-3) (x+2)^3
    std::vector<mpq_class> roots{1, 1, 3, -2, -2, -2};
    const auto iso = dense_isolate(from_roots(roots));
    REQUIRE(iso.size() == 3);
    CHECK(iso[0].multiplicity == 3);
    CHECK(iso[1].multiplicity == 2);
    CHECK(iso[2].multiplicity == 1);
  }
  SUBCASE("random products of linear factors") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<mpq_class> roots;
      const int m = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < m; ++i) roots.emplace_back(num(rng), den(rng));
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      const DensePoly p = from_roots(roots);
      const auto iso = dense_isolate(p);
      REQUIRE(iso.size() == roots.size());
      for (std::size_t i = 0; i < iso.size(); ++i) {
        CHECK(iso[i].lo <= roots[i]);
        CHECK(iso[i].hi >= roots[i]);
      }
    }
  }
}

TEST_CASE("interval refinement tightens without losing the root") {
  const DensePoly p = poly({-2, 0, 1});
  auto r = dense_isolate(p, mpq_class(0), mpq_class(2))[0];
  r = refine_root(p, r, mpq_class(1, mpz_class(1) << 40));
  CHECK(r.hi - r.lo < mpq_class(1, mpz_class(1) << 40));
  // sqrt(2) stays inside: check sign change
  CHECK(p.sign_at(r.lo) * p.sign_at(r.hi) == -1);
}

TEST_CASE("taylor shift is exact") {
  // x^2 - 2 about (3/2, 1/8): 1/4 + (3/8) y + (1/64) y^2
  const auto a = taylor_shift(poly({-2, 0, 1}), mpq_class(3, 2), mpq_class(1, 8));
  REQUIRE(a.size() == 3);
  CHECK(a[0] == mpq_class(1, 4));
  CHECK(a[1] == mpq_class(3, 8));
  CHECK(a[2] == mpq_class(1, 64));
}

TEST_CASE("disk counting on closed forms") {
  auto disk = [](long cm, std::int64_t ce, long rm, std::int64_t re) {
    return Disk{Dyadic(mpz_class(cm), ce), Dyadic(mpz_class(rm), re)};
  };
  SUBCASE("x^2 - 2 around 3/2 radius 1/8") {
    CHECK(dense_count_in_disk(poly({-2, 0, 1}), disk(3, -1, 1, -3)) == 1);
  }
  SUBCASE("x^2 + 1 around 1 radius 1/2") {
    CHECK(dense_count_in_disk(poly({1, 0, 1}), disk(1, 0, 1, -1)) == 0);
  }
  SUBCASE("double root fully inside") {
    const DensePoly p(std::vector<mpq_class>{mpq_class(1, 4), mpq_class(-1), mpq_class(1)});
    CHECK(dense_count_in_disk(p, disk(1, -1, 1, -2)) == 2);
  }
  SUBCASE("complex pair inside a wide disk") {
    // roots +-i: disk around 0 of radius 2 contains both
    CHECK(dense_count_in_disk(poly({1, 0, 1}), disk(1, -4, 2, 0)) == 2);
  }
  SUBCASE("boundary root reported as degenerate") {
    // root at 1 on the boundary of disk(0, 1): the parametrized curve hits 0
    const auto r = dense_count_in_disk(poly({-1, 0, 0, 1}), Disk{Dyadic(2), Dyadic(1)});
    CHECK_FALSE(r.has_value());
  }
  SUBCASE("total count over a huge disk equals the degree") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> cd(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<mpq_class> c;
      const int n = 2 + static_cast<int>(rng() % 7);
      for (int i = 0; i < n; ++i) c.emplace_back(cd(rng));
      c.emplace_back(1 + std::abs(cd(rng)));
      const DensePoly p(std::move(c));
      const auto cnt = dense_count_in_disk(p, Disk{Dyadic(mpz_class(1), -7), Dyadic(mpz_class(1) << 12)});
      REQUIRE(cnt.has_value());
      CHECK(*cnt == p.degree());
    }
  }
  SUBCASE("counts match real isolation for real-rooted fixtures") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 5);
    int done = 0;
    while (done < 30) {
      std::vector<mpq_class> roots;
      const int m = 2 + static_cast<int>(rng() % 4);
      for (int i = 0; i < m; ++i) roots.emplace_back(num(rng), den(rng));
      const DensePoly p = from_roots(roots);
      const Disk d{Dyadic(mpz_class(static_cast<long>(rng() % 33) - 16), -2),
                   Dyadic(mpz_class(1 + static_cast<long>(rng() % 15)), -2)};
      const auto cnt = dense_count_in_disk(p, d);
      if (!cnt.has_value()) continue;  // boundary hit; fixture regenerated
      const mpq_class c = d.center.to_mpq(), r = d.radius.to_mpq();
      int want = 0;
      for (const auto& root : roots)
        if (root > c - r && root < c + r) ++want;
      CHECK(*cnt == want);
      ++done;
    }
  }
}

TEST_CASE("degree caps trip the oracle ceiling") {
  std::vector<mpq_class> c(70, mpq_class(1));
  CHECK_THROWS_AS(dense_isolate(DensePoly(std::move(c))), DiagnosticError);
  std::vector<mpq_class> c2(20, mpq_class(1));
  CHECK_THROWS_AS(dense_count_in_disk(DensePoly(std::move(c2)), Disk{Dyadic(1), Dyadic(1)}),
                  DiagnosticError);
}
