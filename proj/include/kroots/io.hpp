// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kroots/cover.hpp"
#include "kroots/dense_oracle.hpp"
#include "kroots/sparse_poly.hpp"

namespace kroots::io {

/// Raised on malformed input; the CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputSpec {
  struct InputTerm {
    std::uint64_t e;
    mpq_class c;
  };
  std::vector<InputTerm> terms;
};

/// "p/q" or a finite decimal string, exact; zero and q=0 rejected.
mpq_class parse_coeff(const std::string& text);

/// Schema: {"terms":[{"e":0,"c":"-1"},{"e":2,"c":"1"}]}.
InputSpec parse_input(const std::string& json_text);
InputSpec load_input(const std::string& path);

SparsePoly to_sparse(const InputSpec& in);
oracle::DensePoly to_dense(const InputSpec& in);

struct Report {
  std::string mode;
  std::int64_t L = 0;
  std::uint64_t zero_root_multiplicity = 0;
  std::vector<CountedDisk> disks;
  std::uint64_t iterations = 0;
  std::int64_t max_precision_bits = 0;
  double wall_time_s = 0;
};

Report make_report(const std::string& mode, const Covering& c);

/// JSON with exact dyadic strings plus decimal renderings; text format is
/// one "center radius mu" line per disk.
std::string emit_report_json(const Report& r);
std::string emit_report_text(const Report& r);
Report parse_report(const std::string& json_text);

bool reports_equal(const Report& a, const Report& b);

/// Gnuplot-friendly dump: one "trace_lo trace_hi mu" line per disk.
std::string emit_gnuplot(const Report& r);

}  // namespace kroots::io
