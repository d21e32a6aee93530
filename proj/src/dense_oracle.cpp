// SPDX-License-Identifier: Apache-2.0
#include "kroots/dense_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "kroots/diagnostics.hpp"

namespace kroots::oracle {

namespace {

using ZPoly = std::vector<mpz_class>;  // dense, ascending, no leading zeros

void strip(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly derivative_z(const ZPoly& p) {
  ZPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  strip(d);
  return d;
}

// Divide by content and make the leading coefficient positive only through
// a positive factor (sign kept).
void make_primitive(ZPoly& p) {
  strip(p);
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) c /= g;
}

// Remainder of a by b scaled by a positive rational (sign structure of the
// exact remainder preserved). b non-empty.
ZPoly prem_pos(ZPoly a, const ZPoly& b) {
  const int db = deg(b);
  const mpz_class& lb = b.back();
  int steps = 0;
  while (deg(a) >= db) {
    const int shift = deg(a) - db;
    const mpz_class head = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= head * b[static_cast<std::size_t>(i)];
    strip(a);
    ++steps;
    if (a.empty()) break;
  }
  if (sgn(lb) < 0 && (steps % 2) == 1)
    for (auto& c : a) c = -c;
  make_primitive(a);
  return a;
}

std::vector<ZPoly> sturm_chain(const ZPoly& p) {
  std::vector<ZPoly> chain;
  chain.push_back(p);
  make_primitive(chain.back());
  ZPoly d = derivative_z(p);
  make_primitive(d);
  if (d.empty()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    ZPoly r = prem_pos(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

// Sign of p at a/b, b > 0, exact.
int sign_at_q(const ZPoly& p, const mpq_class& x) {
  if (p.empty()) return 0;
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  mpz_class acc = 0, bp = 1;
  // sum_{i} c_i a^i b^(d-i), built from the top
  for (int i = deg(p); i >= 0; --i) {
    acc = acc * a + p[static_cast<std::size_t>(i)] * bp;
    if (i > 0) bp *= b;
  }
  return sgn(acc);
}

int variations_at(const std::vector<ZPoly>& chain, const mpq_class& x) {
  int v = 0, prev = 0;
  for (const auto& s : chain) {
    const int sg = sign_at_q(s, x);
    if (sg != 0) {
      if (prev != 0 && sg != prev) ++v;
      prev = sg;
    }
  }
  return v;
}

int variations_at_inf(const std::vector<ZPoly>& chain, bool positive) {
  int v = 0, prev = 0;
  for (const auto& s : chain) {
    if (s.empty()) continue;
    int sg = sgn(s.back());
    if (!positive && (deg(s) % 2) == 1) sg = -sg;
    if (sg != 0) {
      if (prev != 0 && sg != prev) ++v;
      prev = sg;
    }
  }
  return v;
}

// Roots of square-free p in (a, b); requires p(a) != 0 and p(b) != 0.
int sturm_count(const std::vector<ZPoly>& chain, const mpq_class& a, const mpq_class& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

ZPoly to_primitive_z(const std::vector<mpq_class>& q) {
  mpz_class den = 1;
  for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly p;
  p.reserve(q.size());
  for (const auto& c : q) {
    mpq_class s = c * den;
    p.push_back(s.get_num());
  }
  make_primitive(p);
  return p;
}

std::vector<mpq_class> to_q(const ZPoly& p) {
  std::vector<mpq_class> q;
  q.reserve(p.size());
  for (const auto& c : p) q.emplace_back(c);
  return q;
}

ZPoly gcd_z(ZPoly a, ZPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = prem_pos(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (sgn(a.back()) < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Exact quotient a/b (remainder must vanish).
ZPoly div_exact_z(const ZPoly& a, const ZPoly& b) {
  std::vector<mpq_class> rem = to_q(a);
  std::vector<mpq_class> quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class lb(b.back());
  for (int i = static_cast<int>(rem.size()) - 1; i >= deg(b); --i) {
    mpq_class c = rem[static_cast<std::size_t>(i)] / lb;
    if (sgn(c) == 0) continue;
    quo[static_cast<std::size_t>(i - deg(b))] = c;
    for (int j = 0; j <= deg(b); ++j)
      rem[static_cast<std::size_t>(i - deg(b) + j)] -= c * mpq_class(b[static_cast<std::size_t>(j)]);
  }
  for (const auto& c : rem)
    if (sgn(c) != 0) throw std::logic_error("division not exact");
  return to_primitive_z(quo);  // positive scaling, signs preserved
}

// Remove a rational root (exact synthetic division).
ZPoly deflate(const ZPoly& p, const mpq_class& root) {
  std::vector<mpq_class> q = to_q(p);
  std::vector<mpq_class> out(q.size() - 1, mpq_class(0));
  mpq_class carry = q.back();
  for (int i = static_cast<int>(q.size()) - 2; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = carry;
    carry = q[static_cast<std::size_t>(i)] + carry * root;
  }
  if (sgn(carry) != 0) throw std::logic_error("not a root");
  return to_primitive_z(out);
}

using QPoly = std::vector<mpq_class>;

void strip_q(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly derivative_q(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  strip_q(d);
  return d;
}

QPoly sub_q(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip_q(a);
  return a;
}

// Exact quotient over the rationals; the division must come out even.
QPoly div_exact_q(QPoly rem, const ZPoly& b) {
  QPoly quo(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class lb(b.back());
  for (int i = static_cast<int>(rem.size()) - 1; i >= deg(b); --i) {
    mpq_class c = rem[static_cast<std::size_t>(i)] / lb;
    if (sgn(c) == 0) continue;
    quo[static_cast<std::size_t>(i - deg(b))] = c;
    for (int j = 0; j <= deg(b); ++j)
      rem[static_cast<std::size_t>(i - deg(b) + j)] -= c * mpq_class(b[static_cast<std::size_t>(j)]);
  }
  for (const auto& c : rem)
    if (sgn(c) != 0) throw std::logic_error("division not exact");
  strip_q(quo);
  return quo;
}

// Square-free decomposition: list of (factor, multiplicity), factors
// pairwise coprime and square-free. The c/d recurrence stays in exact
// rationals; only the gcds drop to primitive integer form.
std::vector<std::pair<ZPoly, int>> yun(const ZPoly& p) {
  std::vector<std::pair<ZPoly, int>> out;
  if (deg(p) < 1) return out;
  const ZPoly dp = derivative_z(p);
  const ZPoly g = gcd_z(p, dp);
  if (deg(g) == 0) {
    out.push_back({p, 1});
    return out;
  }
  QPoly c = div_exact_q(to_q(p), g);
  QPoly d = sub_q(div_exact_q(to_q(dp), g), derivative_q(c));
  for (int mult = 1; static_cast<int>(c.size()) - 1 >= 1; ++mult) {
    const ZPoly u = gcd_z(to_primitive_z(c), to_primitive_z(d));
    if (deg(u) >= 1) out.push_back({u, mult});
    c = div_exact_q(std::move(c), u);
    d = sub_q(div_exact_q(std::move(d), u), derivative_q(c));
  }
  return out;
}

mpq_class cauchy_bound(const ZPoly& p) {
  mpq_class mx(0);
  const mpq_class lead(abs(p.back()));
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    mpq_class r = mpq_class(abs(p[i])) / lead;
    if (r > mx) mx = r;
  }
  return mx + 1;
}

struct FactorRoot {
  IsolatedRoot rec;
  ZPoly factor;  // square-free witness with a sign change over rec (unless exact)
};

// Isolate roots of square-free u in the open interval (lo, hi).
void isolate_squarefree(ZPoly u, mpq_class lo, mpq_class hi, int mult,
                        std::vector<IsolatedRoot>& out) {
  if (deg(u) < 1 || lo >= hi) return;
  // Deflate roots sitting exactly on the range boundary; they are excluded.
  while (deg(u) >= 1 && sign_at_q(u, lo) == 0) u = deflate(u, lo);
  while (deg(u) >= 1 && sign_at_q(u, hi) == 0) u = deflate(u, hi);
  if (deg(u) < 1) return;

  const auto chain = sturm_chain(u);
  struct Seg {
    mpq_class a, b;
    int count;
  };
  std::vector<Seg> work{{lo, hi, sturm_count(chain, lo, hi)}};
  while (!work.empty()) {
    Seg s = std::move(work.back());
    work.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      out.push_back({s.a, s.b, mult});
      continue;
    }
    mpq_class m = (s.a + s.b) / 2;
    if (sign_at_q(u, m) == 0) {
      out.push_back({m, m, mult});
      ZPoly v = deflate(u, m);
      isolate_squarefree(v, s.a, s.b, mult, out);
      continue;
    }
    const int left = sturm_count(chain, s.a, m);
    work.push_back({s.a, m, left});
    work.push_back({m, s.b, s.count - left});
  }
}

}  // namespace

DensePoly::DensePoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

DensePoly DensePoly::from_terms(const std::vector<std::pair<std::uint64_t, mpq_class>>& terms) {
  std::vector<mpq_class> c;
  for (const auto& [e, v] : terms) {
    if (e >= c.size()) c.resize(e + 1, mpq_class(0));
    c[e] += v;
  }
  return DensePoly(std::move(c));
}

mpq_class DensePoly::eval(const mpq_class& x) const {
  mpq_class acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
  return acc;
}

DensePoly DensePoly::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return DensePoly(std::move(d));
}

std::vector<IsolatedRoot> dense_isolate(const DensePoly& p, const mpq_class& range_lo,
                                        const mpq_class& range_hi) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  KROOTS_REQUIRE(p.degree() <= kIsolateDegreeCap, Diag::oracle_ceiling,
                 "dense isolation degree cap exceeded");
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  const ZPoly z = to_primitive_z(p.coeffs());
  const mpq_class bound = cauchy_bound(z);
  const mpq_class neg_bound = -bound;
  const mpq_class lo = std::max(range_lo, neg_bound);
  const mpq_class hi = std::min(range_hi, bound);
  for (auto& [u, mult] : yun(z)) isolate_squarefree(u, lo, hi, mult, out);
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
  return out;
}

std::vector<IsolatedRoot> dense_isolate(const DensePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  const ZPoly z = to_primitive_z(p.coeffs());
  const mpq_class b = p.degree() >= 1 ? cauchy_bound(z) : mpq_class(1);
  return dense_isolate(p, -b - 1, b + 1);
}

IsolatedRoot refine_root(const DensePoly& p, const IsolatedRoot& r, const mpq_class& width) {
  if (r.exact()) return r;
  const ZPoly z = to_primitive_z(p.coeffs());
  const ZPoly g = gcd_z(z, derivative_z(z));
  const ZPoly sf = deg(g) >= 1 ? div_exact_z(z, g) : z;
  mpq_class lo = r.lo, hi = r.hi;
  const int sl = sign_at_q(sf, lo);
  if (sl == 0 || sign_at_q(sf, hi) == 0) throw std::logic_error("endpoint hits a root");
  while (hi - lo >= width) {
    mpq_class m = (lo + hi) / 2;
    const int sm = sign_at_q(sf, m);
    if (sm == 0) return {m, m, r.multiplicity};
    (sm == sl ? lo : hi) = m;
  }
  return {lo, hi, r.multiplicity};
}

std::vector<mpq_class> taylor_shift(const DensePoly& p, const mpq_class& m, const mpq_class& r) {
  const int n = p.degree();
  std::vector<mpq_class> out(static_cast<std::size_t>(n + 1), mpq_class(0));
  // a_i = sum_j p_j binom(j,i) m^(j-i) r^i
  std::vector<mpq_class> mpow(static_cast<std::size_t>(n + 1), mpq_class(1));
  for (int i = 1; i <= n; ++i) mpow[static_cast<std::size_t>(i)] = mpow[static_cast<std::size_t>(i - 1)] * m;
  mpq_class rpow(1);
  for (int i = 0; i <= n; ++i) {
    mpz_class binom;
    for (int j = i; j <= n; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(i));
      out[static_cast<std::size_t>(i)] +=
          p.coeffs()[static_cast<std::size_t>(j)] * mpq_class(binom) * mpow[static_cast<std::size_t>(j - i)];
    }
    out[static_cast<std::size_t>(i)] *= rpow;
    rpow *= r;
  }
  return out;
}

std::optional<int> dense_count_in_disk(const DensePoly& p, const Disk& disk) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  KROOTS_REQUIRE(p.degree() <= kDiskDegreeCap, Diag::oracle_ceiling,
                 "disk counting degree cap exceeded");
  if (!(disk.radius.sign() > 0)) throw std::invalid_argument("disk radius must be positive");
  if (p.degree() == 0) return 0;

  const mpq_class m = disk.center.to_mpq(), r = disk.radius.to_mpq();
  std::vector<mpq_class> q = taylor_shift(p, m, r);  // roots of q in unit disk
  while (!q.empty() && sgn(q.back()) == 0) q.pop_back();
  const int n = static_cast<int>(q.size()) - 1;
  if (n < 1) return 0;

  // boundary point missed by the parametrization
  mpq_class at_m1(0);
  for (int i = n; i >= 0; --i) at_m1 = at_m1 * (-1) + q[static_cast<std::size_t>(i)];
  if (sgn(at_m1) == 0) return std::nullopt;

  // q(z(t)) (1+t^2)^n = A(t) + i B(t), z(t) = (1 - t^2 + 2 i t)/(1 + t^2)
  const ZPoly zq = to_primitive_z(q);
  auto mul = [](const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return ZPoly{};
    ZPoly c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    strip(c);
    return c;
  };
  auto add_scaled = [](ZPoly& a, const ZPoly& b, const mpz_class& s) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i] * s;
    strip(a);
  };
  const ZPoly wre{mpz_class(1), mpz_class(0), mpz_class(-1)};  // 1 - t^2
  const ZPoly wim{mpz_class(0), mpz_class(2)};                 // 2 t
  const ZPoly u{mpz_class(1), mpz_class(0), mpz_class(1)};     // 1 + t^2
  std::vector<ZPoly> upow(static_cast<std::size_t>(n + 1));
  upow[0] = ZPoly{mpz_class(1)};
  for (int i = 1; i <= n; ++i) upow[static_cast<std::size_t>(i)] = mul(upow[static_cast<std::size_t>(i - 1)], u);
  ZPoly wre_pow{mpz_class(1)}, wim_pow{};  // (wre + i wim)^j
  ZPoly A, B;
  for (int j = 0; j <= n; ++j) {
    add_scaled(A, mul(wre_pow, upow[static_cast<std::size_t>(n - j)]), zq[static_cast<std::size_t>(j)]);
    add_scaled(B, mul(wim_pow, upow[static_cast<std::size_t>(n - j)]), zq[static_cast<std::size_t>(j)]);
    if (j < n) {
      ZPoly nre = mul(wre_pow, wre);
      add_scaled(nre, mul(wim_pow, wim), mpz_class(-1));
      ZPoly nim = mul(wre_pow, wim);
      add_scaled(nim, mul(wim_pow, wre), mpz_class(1));
      wre_pow = std::move(nre);
      wim_pow = std::move(nim);
    }
  }
  make_primitive(A);
  make_primitive(B);
  if (A.empty() || B.empty()) {
    // Curve pinned to an axis: degenerate for a polynomial with a root-free
    // boundary only if B == 0 identically, which forces roots on the circle
    // or none; fall back to a parity check via A's sign structure.
    if (B.empty() && !A.empty()) {
      // no imaginary part anywhere: winding 0
      return 0;
    }
    return std::nullopt;
  }
  // Roots on the circle show up as common real roots of A and B.
  const ZPoly g = gcd_z(A, B);
  if (deg(g) >= 1) {
    const auto chain = sturm_chain(g);
    const mpq_class big = cauchy_bound(g);
    if (sturm_count(chain, -big, big) > 0 || sign_at_q(g, -big) == 0 || sign_at_q(g, big) == 0)
      return std::nullopt;
  }

  // Winding number from the Cauchy index of the (A, B) remainder chain.
  std::vector<ZPoly> chain;
  chain.push_back(A);
  chain.push_back(B);
  while (!chain.back().empty()) {
    ZPoly r2 = prem_pos(chain[chain.size() - 2], chain.back());
    if (r2.empty()) break;
    for (auto& c : r2) c = -c;
    chain.push_back(std::move(r2));
  }
  const int diff = variations_at_inf(chain, true) - variations_at_inf(chain, false);
  if (diff < 0 || diff % 2 != 0) return std::nullopt;
  const int w = diff / 2;
  if (w > n) return std::nullopt;
  return w;
}

}  // namespace kroots::oracle
