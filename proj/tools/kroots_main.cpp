// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: parse a sparse polynomial, compute a certified
// covering of its real roots (or isolate them), and emit the result.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kroots/cover.hpp"
#include "kroots/diagnostics.hpp"
#include "kroots/io.hpp"
#include "kroots/parallel.hpp"
#include "kroots/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDiagnostic = 3;

struct Options {
  std::string input;
  std::string covering_file;
  std::int64_t L = 30;
  std::int64_t L_max = std::int64_t(1) << 16;
  std::string format = "json";
  int threads = 0;
  std::string gnuplot;
};

void emit(const kroots::io::Report& r, const Options& opt) {
  if (opt.format == "json")
    std::cout << kroots::io::emit_report_json(r);
  else
    std::cout << kroots::io::emit_report_text(r);
  if (!opt.gnuplot.empty()) {
    std::ofstream g(opt.gnuplot);
    g << kroots::io::emit_gnuplot(r);
  }
}

int run_cover(const Options& opt, bool isolate_mode) {
  const kroots::io::InputSpec in = kroots::io::load_input(opt.input);
  const kroots::SparsePoly f = kroots::io::to_sparse(in);
  kroots::stats().reset();
  const auto t0 = std::chrono::steady_clock::now();
  const kroots::Covering c = isolate_mode
                                 ? kroots::isolate(f, 2, opt.L_max)
                                 : kroots::l_covering(f, opt.L);
  const auto t1 = std::chrono::steady_clock::now();
  kroots::io::Report r = kroots::io::make_report(isolate_mode ? "isolate" : "cover", c);
  r.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
  emit(r, opt);
  return kExitOk;
}

int run_verify(const Options& opt) {
  using kroots::oracle::DensePoly;
  const kroots::io::InputSpec in = kroots::io::load_input(opt.input);
  const DensePoly p = kroots::io::to_dense(in);
  KROOTS_REQUIRE(p.degree() <= kroots::oracle::kIsolateDegreeCap, kroots::Diag::oracle_ceiling,
                 "degree beyond the verification oracle");

  std::ifstream f(opt.covering_file);
  if (!f) throw kroots::io::ParseError("cannot open covering file: " + opt.covering_file);
  std::stringstream ss;
  ss << f.rdbuf();
  const kroots::io::Report rep = kroots::io::parse_report(ss.str());

  bool all_ok = true;
  auto check = [&](const char* name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "pass" : "FAIL") << " " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    all_ok = all_ok && ok;
  };

  const kroots::Dyadic cap = kroots::Dyadic::pow2(-rep.L);
  bool radii = true, sorted = true;
  for (std::size_t i = 0; i < rep.disks.size(); ++i) {
    const auto& d = rep.disks[i];
    if (!(d.disk.radius <= cap)) radii = false;
    if (i > 0) {
      const auto& q = rep.disks[i - 1];
      if (!(q.disk.center < d.disk.center) ||
          d.disk.center - q.disk.center < d.disk.radius + q.disk.radius)
        sorted = false;
    }
  }
  check("radii within 2^-L", radii);
  check("disks sorted and pairwise disjoint", sorted);

  // zero-root multiplicity equals the lowest input exponent
  const std::uint64_t e1 = in.terms.front().e;
  check("zero root multiplicity", rep.zero_root_multiplicity == e1);

  // every real root sits inside some disk
  bool covered = true;
  for (auto root : kroots::oracle::dense_isolate(p)) {
    bool inside = false;
    for (int pass = 0; pass < 300 && !inside; ++pass) {
      const mpq_class lo = root.lo, hi = root.hi;
      bool outside_all = true;
      for (const auto& d : rep.disks) {
        const mpq_class c = d.disk.center.to_mpq(), r = d.disk.radius.to_mpq();
        if (lo > c - r && hi < c + r) {
          inside = true;
          break;
        }
        if (!(hi <= c - r || lo >= c + r)) outside_all = false;
      }
      if (inside || outside_all) break;
      root = kroots::oracle::refine_root(p, root, (hi - lo) / 16);
    }
    if (!inside) covered = false;
  }
  check("every real root covered", covered);

  // exact counts, where the disk oracle applies
  if (p.degree() <= kroots::oracle::kDiskDegreeCap) {
    bool mu_ok = true;
    std::string detail;
    for (const auto& d : rep.disks) {
      if (d.disk.radius.is_zero()) continue;
      const auto cnt = kroots::oracle::dense_count_in_disk(p, d.disk);
      if (!cnt.has_value()) {
        mu_ok = false;
        detail = "boundary-degenerate disk";
        break;
      }
      if (*cnt != d.mu) {
        mu_ok = false;
        detail = "count mismatch";
        break;
      }
    }
    check("root counts exact", mu_ok, detail);
  } else {
    std::cout << "skip root counts (degree beyond disk oracle)\n";
  }

  return all_ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified real-root coverings for sparse polynomials"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_L) {
    sub->add_option("--input", opt.input, "polynomial JSON file")->required();
    if (with_L) sub->add_option("--L", opt.L, "radius exponent: radii <= 2^-L");
    sub->add_option("--L-max", opt.L_max, "isolation precision ceiling");
    sub->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--threads", opt.threads, "worker thread cap");
    sub->add_option("--emit-gnuplot", opt.gnuplot, "write disk traces to a file");
  };
  CLI::App* cover = app.add_subcommand("cover", "compute a covering at fixed L");
  add_common(cover, true);
  CLI::App* isolate = app.add_subcommand("isolate", "raise L until every disk is simple");
  add_common(isolate, false);
  CLI::App* verify = app.add_subcommand("verify", "cross-check a covering against the exact oracle");
  add_common(verify, false);
  verify->add_option("--covering", opt.covering_file, "covering JSON to verify")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (opt.threads > 0) kroots::parallel::set_max_threads(opt.threads);

  try {
    if (app.got_subcommand("cover")) return run_cover(opt, false);
    if (app.got_subcommand("isolate")) return run_cover(opt, true);
    return run_verify(opt);
  } catch (const kroots::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const kroots::DiagnosticError& e) {
    if (opt.format == "json")
      std::cout << "{\n  \"diagnostic\": \"" << kroots::diag_code(e.diag())
                << "\",\n  \"detail\": \"" << e.what() << "\"\n}\n";
    else
      std::cout << "diagnostic: " << e.what() << "\n";
    return kExitDiagnostic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDiagnostic;
  }
}
