// SPDX-License-Identifier: Apache-2.0
//
// Benchmark of the multipoint evaluation kernel: OpenMP path against the
// serial reference, checking bit-identical results while timing both.

#include <chrono>
#include <cstring>
#include <iostream>
#include <vector>

#include "kroots/eval.hpp"
#include "kroots/parallel.hpp"
#include "kroots/tower.hpp"

using namespace kroots;

namespace {

double run(std::span<const SparsePoly> tuple, std::span<const Dyadic> pts, std::int64_t L,
           std::vector<Dyadic>& out, bool parallel) {
  const auto t0 = std::chrono::steady_clock::now();
  eval_grid(tuple, pts, L, out, parallel);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  const std::uint64_t n = quick ? 1000 : 100000;
  const std::int64_t L = quick ? 256 : 4096;
  const std::int64_t npts = quick ? 33 : 129;

  SparsePoly f(std::vector<Term>{{0, make_rational_oracle(1, 1)},
                                 {1, make_rational_oracle(-3, 1)},
                                 {n, make_rational_oracle(1, 1)}});
  const FractionalTower tower = fractional_derivatives(f);

  std::vector<Dyadic> pts;
  const Dyadic base = Dyadic(1) - Dyadic::pow2(-3);
  for (std::int64_t i = 0; i < npts; ++i)
    pts.push_back(base + Dyadic(mpz_class(static_cast<long>(i))) * Dyadic::pow2(-12));

  std::vector<Dyadic> serial_out, parallel_out;
  const double warm = run(tower.tuple(), pts, L, serial_out, false);
  (void)warm;
  const double ts = run(tower.tuple(), pts, L, serial_out, false);
  const double tp = run(tower.tuple(), pts, L, parallel_out, true);

  if (serial_out.size() != parallel_out.size()) {
    std::cerr << "size mismatch\n";
    return 1;
  }
  for (std::size_t i = 0; i < serial_out.size(); ++i) {
    if (serial_out[i] != parallel_out[i]) {
      std::cerr << "output mismatch at " << i << "\n";
      return 1;
    }
  }

  std::cout << "grid " << pts.size() << " points x " << tower.size() << " tuple members, L=" << L
            << ", degree " << n << "\n";
  std::cout << "serial   " << ts << " s\n";
  std::cout << "parallel " << tp << " s  (threads " << parallel::max_threads() << ", speedup "
            << (tp > 0 ? ts / tp : 0) << "x)\n";
  std::cout << "outputs bit-identical\n";
  return 0;
}
