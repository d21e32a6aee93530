// SPDX-License-Identifier: Apache-2.0
#include "kroots/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kroots/stats.hpp"

namespace kroots::io {

using nlohmann::json;

mpq_class parse_coeff(const std::string& text) {
  if (text.empty()) throw ParseError("empty coefficient");
  std::string s = text;
  const auto slash = s.find('/');
  mpq_class v;
  try {
    if (slash != std::string::npos) {
      mpz_class p, q;
      if (mpz_set_str(p.get_mpz_t(), s.substr(0, slash).c_str(), 10) != 0)
        throw ParseError("bad numerator: " + text);
      if (mpz_set_str(q.get_mpz_t(), s.substr(slash + 1).c_str(), 10) != 0)
        throw ParseError("bad denominator: " + text);
      if (sgn(q) == 0) throw ParseError("zero denominator: " + text);
      v = mpq_class(p) / mpq_class(q);
    } else {
      const auto dot = s.find('.');
      if (dot == std::string::npos) {
        mpz_class p;
        if (mpz_set_str(p.get_mpz_t(), s.c_str(), 10) != 0)
          throw ParseError("bad integer: " + text);
        v = mpq_class(p);
      } else {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const std::size_t frac = s.size() - dot - 1;
        if (frac == 0 || digits.empty()) throw ParseError("bad decimal: " + text);
        mpz_class p;
        if (mpz_set_str(p.get_mpz_t(), digits.c_str(), 10) != 0)
          throw ParseError("bad decimal: " + text);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
        v = mpq_class(p) / mpq_class(den);
      }
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad coefficient: " + text);
  }
  v.canonicalize();
  if (sgn(v) == 0) throw ParseError("zero coefficient: " + text);
  return v;
}

InputSpec parse_input(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad input JSON: ") + e.what());
  }
  if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
    throw ParseError("input needs a non-empty terms array");
  InputSpec in;
  for (const auto& t : j["terms"]) {
    if (!t.contains("e") || !t.contains("c")) throw ParseError("term needs e and c");
    if (!t["e"].is_number_unsigned()) throw ParseError("exponent must be a non-negative integer");
    in.terms.push_back({t["e"].get<std::uint64_t>(), parse_coeff(t["c"].get<std::string>())});
  }
  std::sort(in.terms.begin(), in.terms.end(),
            [](const auto& a, const auto& b) { return a.e < b.e; });
  for (std::size_t i = 1; i < in.terms.size(); ++i)
    if (in.terms[i - 1].e == in.terms[i].e) throw ParseError("duplicate exponent");
  return in;
}

InputSpec load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open input file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str());
}

SparsePoly to_sparse(const InputSpec& in) {
  std::vector<Term> terms;
  terms.reserve(in.terms.size());
  for (const auto& t : in.terms) terms.push_back({t.e, make_rational_oracle(t.c)});
  return SparsePoly(std::move(terms));
}

oracle::DensePoly to_dense(const InputSpec& in) {
  std::vector<std::pair<std::uint64_t, mpq_class>> terms;
  terms.reserve(in.terms.size());
  for (const auto& t : in.terms) terms.emplace_back(t.e, t.c);
  return oracle::DensePoly::from_terms(terms);
}

Report make_report(const std::string& mode, const Covering& c) {
  Report r;
  r.mode = mode;
  r.L = c.L;
  r.zero_root_multiplicity = c.zero_root_multiplicity;
  r.disks = c.entries;
  r.iterations = stats().refine_iterations.load(std::memory_order_relaxed);
  r.max_precision_bits = stats().max_precision_bits.load(std::memory_order_relaxed);
  return r;
}

namespace {

json disk_json(const CountedDisk& d) {
  return json{{"center", {{"dyadic", d.disk.center.to_string()},
                          {"decimal", d.disk.center.to_decimal()}}},
              {"radius", {{"dyadic", d.disk.radius.to_string()},
                          {"decimal", d.disk.radius.to_decimal()}}},
              {"mu", d.mu}};
}

}  // namespace

std::string emit_report_json(const Report& r) {
  json j;
  j["mode"] = r.mode;
  j["L"] = r.L;
  j["zero_root_multiplicity"] = r.zero_root_multiplicity;
  j["disks"] = json::array();
  for (const auto& d : r.disks) j["disks"].push_back(disk_json(d));
  j["stats"] = {{"iterations", r.iterations},
                {"max_precision_bits", r.max_precision_bits},
                {"wall_time_s", r.wall_time_s}};
  return j.dump(2) + "\n";
}

std::string emit_report_text(const Report& r) {
  std::ostringstream os;
  os << "mode " << r.mode << " L " << r.L << " zero_root_multiplicity "
     << r.zero_root_multiplicity << "\n";
  for (const auto& d : r.disks)
    os << d.disk.center.to_decimal() << " " << d.disk.radius.to_decimal() << " " << d.mu << "\n";
  os << "stats iterations " << r.iterations << " max_precision_bits " << r.max_precision_bits
     << " wall_time_s " << r.wall_time_s << "\n";
  return os.str();
}

Report parse_report(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  Report r;
  try {
    r.mode = j.at("mode").get<std::string>();
    r.L = j.at("L").get<std::int64_t>();
    r.zero_root_multiplicity = j.at("zero_root_multiplicity").get<std::uint64_t>();
    for (const auto& d : j.at("disks")) {
      CountedDisk cd;
      cd.disk.center = Dyadic::parse(d.at("center").at("dyadic").get<std::string>());
      cd.disk.radius = Dyadic::parse(d.at("radius").at("dyadic").get<std::string>());
      cd.mu = d.at("mu").get<std::int64_t>();
      r.disks.push_back(std::move(cd));
    }
    r.iterations = j.at("stats").at("iterations").get<std::uint64_t>();
    r.max_precision_bits = j.at("stats").at("max_precision_bits").get<std::int64_t>();
    r.wall_time_s = j.at("stats").at("wall_time_s").get<double>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad report shape: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad dyadic in report: ") + e.what());
  }
  return r;
}

bool reports_equal(const Report& a, const Report& b) {
  if (a.mode != b.mode || a.L != b.L ||
      a.zero_root_multiplicity != b.zero_root_multiplicity ||
      a.iterations != b.iterations || a.max_precision_bits != b.max_precision_bits ||
      a.wall_time_s != b.wall_time_s || a.disks.size() != b.disks.size())
    return false;
  for (std::size_t i = 0; i < a.disks.size(); ++i) {
    if (a.disks[i].mu != b.disks[i].mu || a.disks[i].disk.center != b.disks[i].disk.center ||
        a.disks[i].disk.radius != b.disks[i].disk.radius)
      return false;
  }
  return true;
}

std::string emit_gnuplot(const Report& r) {
  std::ostringstream os;
  os << "# trace_lo trace_hi mu\n";
  for (const auto& d : r.disks)
    os << (d.disk.center - d.disk.radius).to_decimal() << " "
       << (d.disk.center + d.disk.radius).to_decimal() << " " << d.mu << "\n";
  return os.str();
}

}  // namespace kroots::io
