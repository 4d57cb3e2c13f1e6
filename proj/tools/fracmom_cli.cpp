// Copyright 2026 The fracmom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// fracmom command-line tool; talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fracmom/fracmom.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitIo = 4;

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(fracmom_status s) {
  switch (s) {
    case FRACMOM_OK:
      return kExitOk;
    case FRACMOM_ERR_INVALID_ARGUMENT:
    case FRACMOM_ERR_UNSUPPORTED_ARGUMENT:
    case FRACMOM_ERR_DOMAIN:
      return kExitBadFlags;
    case FRACMOM_ERR_PRECISION_UNACHIEVABLE:
      return kExitPrecision;
    case FRACMOM_ERR_IO:
      return kExitIo;
    default:
      return kExitVerifyFailed;
  }
}

void check(fracmom_status s) {
  if (s != FRACMOM_OK) throw CliError{exit_code_for(s), fracmom_last_error()};
}

struct Range {
  long lo = 0;
  long hi = 0;
};

// "A" or "A..B"
Range parse_range(const std::string& text, const char* flag) {
  auto to_long = [&](const std::string& s) {
    size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (s.empty() || pos != s.size()) throw CliError{kExitBadFlags, std::string("bad integer for ") + flag + ": " + s};
    return v;
  };
  const size_t dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_long(text);
  } else {
    r.lo = to_long(text.substr(0, dots));
    r.hi = to_long(text.substr(dots + 2));
  }
  if (r.hi < r.lo) throw CliError{kExitBadFlags, std::string("empty range for ") + flag + ": " + text};
  return r;
}

int default_precision() {
  const char* env = std::getenv("FRACMOM_PRECISION");
  if (env == nullptr || *env == '\0') return 30;
  try {
    size_t pos = 0;
    const int v = std::stoi(env, &pos);
    if (pos == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw CliError{kExitBadFlags, std::string("FRACMOM_PRECISION is not an integer: ") + env};
}

fracmom_method parse_method(const std::string& m) {
  if (m == "theorem") return FRACMOM_METHOD_THEOREM;
  if (m == "engine") return FRACMOM_METHOD_ENGINE;
  if (m == "oracle") return FRACMOM_METHOD_ORACLE;
  throw CliError{kExitBadFlags, "unknown method: " + m};
}

fracmom_family parse_family(const std::string& name) {
  fracmom_family f{};
  if (fracmom_family_from_name(name.c_str(), &f) != FRACMOM_OK) throw CliError{kExitBadFlags, fracmom_last_error()};
  return f;
}

struct Record {
  std::string family;
  const char* index_key = nullptr;  // "m", "n" or nullptr
  long index = 0;
  std::string coeffs;
  long k = 0;
  std::string symbolic;
  std::string value;
  int precision = 0;
  std::string method;
  std::string regime;
  std::string error_bound;
  bool has_discrepancy = false;
  std::string printed, engine, printed_value, engine_value;
};

Record compute_record(fracmom_family fam, long index, const std::string& coeffs, long k, int precision,
                      fracmom_method method) {
  fracmom_moment* h = nullptr;
  check(fracmom_moment_compute(fam, index, coeffs.empty() ? nullptr : coeffs.c_str(), k, precision, method, &h));
  Record r;
  r.family = fracmom_family_name(fam);
  if (fam == FRACMOM_FAMILY_BERNOULLI) r.index_key = "n";
  if (fam == FRACMOM_FAMILY_POWER || fam == FRACMOM_FAMILY_SYMPOWER) r.index_key = "m";
  r.index = index;
  r.coeffs = coeffs;
  r.k = k;
  r.symbolic = fracmom_moment_symbolic(h);
  r.value = fracmom_moment_value(h);
  r.precision = fracmom_moment_precision(h);
  r.method = fracmom_moment_method(h);
  r.regime = fracmom_moment_regime(h);
  r.error_bound = fracmom_moment_error_bound(h);
  r.has_discrepancy = fracmom_moment_has_discrepancy(h) != 0;
  r.printed = fracmom_moment_discrepancy_printed(h);
  r.engine = fracmom_moment_discrepancy_engine(h);
  r.printed_value = fracmom_moment_discrepancy_printed_value(h);
  r.engine_value = fracmom_moment_discrepancy_engine_value(h);
  fracmom_moment_free(h);
  return r;
}

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  if (r.index_key) j[r.index_key] = r.index;
  if (!r.coeffs.empty()) j["coeffs"] = r.coeffs;
  j["k"] = r.k;
  j["symbolic"] = r.symbolic;
  j["value"] = r.value;
  j["precision"] = r.precision;
  j["method"] = r.method;
  j["regime"] = r.regime;
  if (!r.error_bound.empty()) j["error_bound"] = r.error_bound;
  if (r.has_discrepancy) {
    j["discrepancy"] = {{"regime", r.regime},
                        {"printed", r.printed},
                        {"engine", r.engine},
                        {"printed_value", r.printed_value},
                        {"engine_value", r.engine_value}};
  } else {
    j["discrepancy"] = nullptr;
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* kCsvHeader = "family,m,n,coeffs,k,symbolic,value,precision,method,regime,error_bound,discrepancy";

std::string to_csv(const Record& r) {
  std::ostringstream os;
  const bool is_m = r.index_key && std::string(r.index_key) == "m";
  const bool is_n = r.index_key && std::string(r.index_key) == "n";
  os << r.family << ',' << (is_m ? std::to_string(r.index) : "") << ',' << (is_n ? std::to_string(r.index) : "")
     << ',' << csv_field(r.coeffs) << ',' << r.k << ',' << csv_field(r.symbolic) << ',' << r.value << ','
     << r.precision << ',' << r.method << ',' << csv_field(r.regime) << ',' << r.error_bound << ','
     << (r.has_discrepancy ? csv_field("printed " + r.printed_value + " vs engine " + r.engine_value) : "");
  return os.str();
}

void emit(std::ostream& os, const std::vector<Record>& rows, const std::string& format) {
  if (format == "csv") {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) os << to_csv(r) << '\n';
  } else {
    for (const auto& r : rows) os << to_json(r).dump() << '\n';
  }
}

std::vector<Record> grid(fracmom_family fam, Range idx, const std::string& coeffs, Range ks, int precision,
                         fracmom_method method) {
  const bool indexed = fam == FRACMOM_FAMILY_BERNOULLI || fam == FRACMOM_FAMILY_POWER || fam == FRACMOM_FAMILY_SYMPOWER;
  if (!indexed) idx = Range{0, 0};
  std::vector<Record> rows;
  for (long i = idx.lo; i <= idx.hi; ++i) {
    for (long k = ks.lo; k <= ks.hi; ++k) rows.push_back(compute_record(fam, i, coeffs, k, precision, method));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitIo, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw CliError{kExitIo, "error reading " + path};
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional moments int_0^1 x^k f({1/x}) dx in closed form and by numerical oracles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fracmom_version()));

  std::string family, m_text, n_text, k_text, coeffs, method = "theorem", format = "jsonl";
  int precision = 0;
  auto* compute = app.add_subcommand("compute", "Compute moments; one record per (index, k)");
  compute->add_option("--family", family, "sine|cosine|bernoulli|power|sympower|poly")->required();
  compute->add_option("--k", k_text, "moment index k, or a range A..B")->required();
  compute->add_option("--m", m_text, "exponent m (power, sympower), or a range A..B");
  compute->add_option("--n", n_text, "Bernoulli index n, or a range A..B");
  compute->add_option("--coeffs", coeffs, "poly coefficients c0,c1,... (rationals allowed)");
  compute->add_option("--precision", precision, "decimal digits (default $FRACMOM_PRECISION or 30)");
  compute->add_option("--method", method, "theorem|engine|oracle")->capture_default_str();
  compute->add_option("--format", format, std::string("jsonl|csv; CSV columns: ") + kCsvHeader)
      ->capture_default_str();

  std::string suite = "all", registry_path, vformat = "text";
  long max_m = 6, max_k = 12;
  double tol = 1e-10;
  int vprecision = 0;
  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 on unregistered failures");
  verify->add_option("--suite", suite, "all|identities|moments|sequences")->capture_default_str();
  verify->add_option("--max-m", max_m, "largest m (and n) in the grids")->capture_default_str();
  verify->add_option("--max-k", max_k, "largest k in the grids")->capture_default_str();
  verify->add_option("--tol", tol, "absolute tolerance")->capture_default_str();
  verify->add_option("--precision", vprecision, "decimal digits (default $FRACMOM_PRECISION or 30)");
  verify->add_option("--registry", registry_path, "known-discrepancy registry JSON (default: built in)");
  verify->add_option("--format", vformat, "text|jsonl")->capture_default_str();

  std::string tfamily, m_range = "1..1", k_range = "0..0", tformat = "csv", out_path, tcoeffs, tmethod = "theorem";
  int tprecision = 0;
  auto* table = app.add_subcommand("table", "Write a grid of records ordered by (family, m, k)");
  table->add_option("--family", tfamily, "sine|cosine|bernoulli|power|sympower|poly")->required();
  table->add_option("--m-range", m_range, "A..B over m (n for bernoulli)")->capture_default_str();
  table->add_option("--k-range", k_range, "A..B over k")->capture_default_str();
  table->add_option("--coeffs", tcoeffs, "poly coefficients c0,c1,...");
  table->add_option("--format", tformat, "csv|json (JSON lines)")->capture_default_str();
  table->add_option("--out", out_path, "output file")->required();
  table->add_option("--precision", tprecision, "decimal digits (default $FRACMOM_PRECISION or 30)");
  table->add_option("--method", tmethod, "theorem|engine|oracle")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadFlags;
  }

  try {
    if (*compute) {
      if (format != "jsonl" && format != "csv") throw CliError{kExitBadFlags, "unknown format: " + format};
      const fracmom_family fam = parse_family(family);
      const int p = precision ? precision : default_precision();
      Range idx{0, 0};
      if (fam == FRACMOM_FAMILY_POWER || fam == FRACMOM_FAMILY_SYMPOWER) {
        if (m_text.empty()) throw CliError{kExitBadFlags, "--m is required for family " + family};
        idx = parse_range(m_text, "--m");
      } else if (fam == FRACMOM_FAMILY_BERNOULLI) {
        if (n_text.empty()) throw CliError{kExitBadFlags, "--n is required for family bernoulli"};
        idx = parse_range(n_text, "--n");
      } else if (fam == FRACMOM_FAMILY_POLY && coeffs.empty()) {
        throw CliError{kExitBadFlags, "--coeffs is required for family poly"};
      }
      const auto rows = grid(fam, idx, coeffs, parse_range(k_text, "--k"), p, parse_method(method));
      emit(std::cout, rows, format);
      return kExitOk;
    }
    if (*verify) {
      if (vformat != "text" && vformat != "jsonl") throw CliError{kExitBadFlags, "unknown format: " + vformat};
      const int p = vprecision ? vprecision : default_precision();
      std::string registry;
      if (!registry_path.empty()) registry = read_file(registry_path);
      fracmom_report* rep = nullptr;
      check(fracmom_verify(suite.c_str(), max_m, max_k, tol, p, registry_path.empty() ? nullptr : registry.c_str(), &rep));
      const size_t n = fracmom_report_count(rep);
      for (size_t i = 0; i < n; ++i) {
        const bool pass = fracmom_report_pass(rep, i) != 0;
        const bool known = fracmom_report_known(rep, i) != 0;
        const char* status = pass ? "PASS" : (known ? "KNOWN" : "FAIL");
        if (vformat == "jsonl") {
          nlohmann::ordered_json j;
          j["suite"] = fracmom_report_text(rep, i, FRACMOM_REPORT_SUITE);
          j["name"] = fracmom_report_text(rep, i, FRACMOM_REPORT_NAME);
          j["params"] = fracmom_report_text(rep, i, FRACMOM_REPORT_PARAMS);
          j["status"] = status;
          j["detail"] = fracmom_report_text(rep, i, FRACMOM_REPORT_DETAIL);
          std::cout << j.dump() << '\n';
        } else {
          std::cout << status << "  " << fracmom_report_text(rep, i, FRACMOM_REPORT_NAME) << "  ["
                    << fracmom_report_text(rep, i, FRACMOM_REPORT_PARAMS) << "]  "
                    << fracmom_report_text(rep, i, FRACMOM_REPORT_DETAIL) << '\n';
        }
      }
      const long failures = fracmom_report_failures(rep);
      const long unregistered = fracmom_report_unregistered_failures(rep);
      std::cerr << n << " checks, " << failures << " failures (" << failures - unregistered << " known, "
                << unregistered << " unregistered)\n";
      fracmom_report_free(rep);
      return unregistered == 0 ? kExitOk : kExitVerifyFailed;
    }
    if (*table) {
      if (tformat != "csv" && tformat != "json") throw CliError{kExitBadFlags, "unknown format: " + tformat};
      const fracmom_family fam = parse_family(tfamily);
      if (fam == FRACMOM_FAMILY_POLY && tcoeffs.empty()) throw CliError{kExitBadFlags, "--coeffs is required for family poly"};
      const int p = tprecision ? tprecision : default_precision();
      const auto rows = grid(fam, parse_range(m_range, "--m-range"), tcoeffs, parse_range(k_range, "--k-range"), p,
                             parse_method(tmethod));
      std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
      if (!out) throw CliError{kExitIo, "cannot open " + out_path + " for writing"};
      emit(out, rows, tformat == "csv" ? "csv" : "jsonl");
      out.close();
      if (!out) throw CliError{kExitIo, "error writing " + out_path};
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "fracmom: " << e.message << '\n';
    return e.code;
  }
  return kExitBadFlags;
}
