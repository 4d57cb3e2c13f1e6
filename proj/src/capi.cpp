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

#include "fracmom/fracmom.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "fracmom/error.hpp"
#include "fracmom/moments.hpp"
#include "fracmom/oracle.hpp"
#include "fracmom/verify.hpp"

struct fracmom_moment {
  std::string symbolic;
  std::string value;
  std::string regime;
  std::string method;
  std::string error_bound;
  int precision = 0;
  bool has_discrepancy = false;
  std::string printed;
  std::string engine;
  std::string printed_value;
  std::string engine_value;
};

struct fracmom_report {
  fracmom::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

constexpr int kMaxDigits = 100000;

fracmom_status to_status(fracmom::ErrorCode c) {
  switch (c) {
    case fracmom::ErrorCode::kInvalidArgument:
      return FRACMOM_ERR_INVALID_ARGUMENT;
    case fracmom::ErrorCode::kUnsupportedArgument:
      return FRACMOM_ERR_UNSUPPORTED_ARGUMENT;
    case fracmom::ErrorCode::kPrecisionUnachievable:
      return FRACMOM_ERR_PRECISION_UNACHIEVABLE;
    case fracmom::ErrorCode::kDomainError:
      return FRACMOM_ERR_DOMAIN;
    case fracmom::ErrorCode::kIoError:
      return FRACMOM_ERR_IO;
  }
  return FRACMOM_ERR_INTERNAL;
}

template <class Fn>
fracmom_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return FRACMOM_OK;
  } catch (const fracmom::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return FRACMOM_ERR_INTERNAL;
}

fracmom::Precision checked_precision(int digits) {
  if (digits > kMaxDigits) {
    fracmom::fail(fracmom::ErrorCode::kPrecisionUnachievable, "precision above " + std::to_string(kMaxDigits) + " digits");
  }
  return fracmom::Precision(digits);
}

fracmom::Poly parse_coeffs(const char* csv) {
  if (csv == nullptr || *csv == '\0') fracmom::fail(fracmom::ErrorCode::kInvalidArgument, "poly family needs coefficients");
  std::vector<fracmom::Rational> c;
  std::string s(csv);
  size_t start = 0;
  while (true) {
    const size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const size_t a = item.find_first_not_of(" \t");
    const size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) fracmom::fail(fracmom::ErrorCode::kInvalidArgument, "empty coefficient in list");
    c.push_back(fracmom::parse_rational(item.substr(a, b - a + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fracmom::Poly(std::move(c));
}

fracmom::MomentFamily make_family(fracmom_family family, long index, const char* coeffs_csv) {
  switch (family) {
    case FRACMOM_FAMILY_SINE:
      return fracmom::SineFamily{};
    case FRACMOM_FAMILY_COSINE:
      return fracmom::CosineFamily{};
    case FRACMOM_FAMILY_BERNOULLI:
      return fracmom::BernoulliFamily{index};
    case FRACMOM_FAMILY_POWER:
      return fracmom::PowerFamily{index};
    case FRACMOM_FAMILY_SYMPOWER:
      return fracmom::SymPowerFamily{index};
    case FRACMOM_FAMILY_POLY:
      return fracmom::PolyFamily{parse_coeffs(coeffs_csv)};
  }
  fracmom::fail(fracmom::ErrorCode::kInvalidArgument, "unknown family");
}

const char* const kFamilyNames[] = {"sine", "cosine", "bernoulli", "power", "sympower", "poly"};

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* fracmom_last_error(void) { return g_last_error.c_str(); }

const char* fracmom_version(void) { return FRACMOM_VERSION; }

const char* fracmom_family_name(fracmom_family family) {
  const int i = static_cast<int>(family);
  if (i < 0 || i > 5) return "";
  return kFamilyNames[i];
}

fracmom_status fracmom_family_from_name(const char* name, fracmom_family* out) {
  return guarded([&] {
    if (name == nullptr || out == nullptr) fracmom::fail(fracmom::ErrorCode::kInvalidArgument, "null argument");
    for (int i = 0; i < 6; ++i) {
      if (std::strcmp(name, kFamilyNames[i]) == 0) {
        *out = static_cast<fracmom_family>(i);
        return;
      }
    }
    fracmom::fail(fracmom::ErrorCode::kInvalidArgument, std::string("unknown family: ") + name);
  });
}

fracmom_status fracmom_moment_compute(fracmom_family family, long index, const char* coeffs_csv, long k,
                                      int precision, fracmom_method method, fracmom_moment** out) {
  return guarded([&] {
    if (out == nullptr) fracmom::fail(fracmom::ErrorCode::kInvalidArgument, "null output handle");
    *out = nullptr;
    const fracmom::Precision p = checked_precision(precision);
    const fracmom::MomentFamily f = make_family(family, index, coeffs_csv);
    fracmom::validate_family(f);
    if (k < 0) fracmom::fail(fracmom::ErrorCode::kUnsupportedArgument, "moment index k must be nonnegative");
    auto m = std::make_unique<fracmom_moment>();
    m->precision = precision;
    const fracmom::MomentResult r = fracmom::compute_moment(f, k);
    m->regime = r.regime;
    if (r.discrepancy) {
      m->has_discrepancy = true;
      m->printed = r.discrepancy->printed.to_string();
      m->engine = r.discrepancy->engine.to_string();
      m->printed_value = r.discrepancy->printed_value;
      m->engine_value = r.discrepancy->engine_value;
    }
    switch (method) {
      case FRACMOM_METHOD_THEOREM:
        m->symbolic = r.value.to_string();
        m->value = fracmom::eval_sym(r.value, p).to_fixed(precision);
        m->method = fracmom::source_name(r.source);
        break;
      case FRACMOM_METHOD_ENGINE: {
        const fracmom::SymValue v = fracmom::engine_moment(f, k);
        m->symbolic = v.to_string();
        m->value = fracmom::eval_sym(v, p).to_fixed(precision);
        m->method = "engine";
        m->regime = "engine";
        break;
      }
      case FRACMOM_METHOD_ORACLE: {
        const fracmom::OracleResult o = fracmom::oracle_interval_series(f, k, p);
        m->symbolic = r.value.to_string();
        m->value = o.value.to_fixed(precision);
        m->error_bound = o.error_bound.to_scientific(3);
        m->method = "oracle";
        break;
      }
      default:
        fracmom::fail(fracmom::ErrorCode::kInvalidArgument, "unknown method");
    }
    *out = m.release();
  });
}

void fracmom_moment_free(fracmom_moment* m) { delete m; }

const char* fracmom_moment_symbolic(const fracmom_moment* m) { return m ? m->symbolic.c_str() : ""; }
const char* fracmom_moment_value(const fracmom_moment* m) { return m ? m->value.c_str() : ""; }
const char* fracmom_moment_regime(const fracmom_moment* m) { return m ? m->regime.c_str() : ""; }
const char* fracmom_moment_method(const fracmom_moment* m) { return m ? m->method.c_str() : ""; }
const char* fracmom_moment_error_bound(const fracmom_moment* m) { return m ? m->error_bound.c_str() : ""; }
int fracmom_moment_precision(const fracmom_moment* m) { return m ? m->precision : 0; }
int fracmom_moment_has_discrepancy(const fracmom_moment* m) { return m && m->has_discrepancy ? 1 : 0; }
const char* fracmom_moment_discrepancy_printed(const fracmom_moment* m) { return m ? m->printed.c_str() : ""; }
const char* fracmom_moment_discrepancy_engine(const fracmom_moment* m) { return m ? m->engine.c_str() : ""; }
const char* fracmom_moment_discrepancy_printed_value(const fracmom_moment* m) {
  return m ? m->printed_value.c_str() : "";
}
const char* fracmom_moment_discrepancy_engine_value(const fracmom_moment* m) {
  return m ? m->engine_value.c_str() : "";
}

fracmom_status fracmom_verify(const char* suite, long max_m, long max_k, double tol, int precision,
                              const char* registry_json, fracmom_report** out) {
  return guarded([&] {
    if (out == nullptr) fracmom::fail(fracmom::ErrorCode::kInvalidArgument, "null output handle");
    *out = nullptr;
    fracmom::VerifyOptions o;
    o.suite = suite ? suite : "all";
    o.max_m = max_m;
    o.max_k = max_k;
    o.tol = tol;
    o.digits = checked_precision(precision).digits;
    const auto registry =
        fracmom::parse_registry(registry_json ? std::string(registry_json) : fracmom::builtin_registry_json());
    auto r = std::make_unique<fracmom_report>();
    r->report = fracmom::run_verification(o, registry);
    *out = r.release();
  });
}

void fracmom_report_free(fracmom_report* r) { delete r; }

size_t fracmom_report_count(const fracmom_report* r) { return r ? r->report.records.size() : 0; }
long fracmom_report_failures(const fracmom_report* r) { return r ? r->report.failures() : 0; }
long fracmom_report_unregistered_failures(const fracmom_report* r) {
  return r ? r->report.unregistered_failures() : 0;
}

const char* fracmom_report_text(const fracmom_report* r, size_t i, fracmom_report_field field) {
  if (r == nullptr || i >= r->report.records.size()) return nullptr;
  const auto& rec = r->report.records[i];
  switch (field) {
    case FRACMOM_REPORT_SUITE:
      return rec.suite.c_str();
    case FRACMOM_REPORT_NAME:
      return rec.name.c_str();
    case FRACMOM_REPORT_PARAMS:
      return rec.params.c_str();
    case FRACMOM_REPORT_DETAIL:
      return rec.detail.c_str();
  }
  return nullptr;
}

int fracmom_report_pass(const fracmom_report* r, size_t i) {
  return (r && i < r->report.records.size() && r->report.records[i].pass) ? 1 : 0;
}

int fracmom_report_known(const fracmom_report* r, size_t i) {
  return (r && i < r->report.records.size() && r->report.records[i].known) ? 1 : 0;
}

const char* fracmom_builtin_registry(void) { return fracmom::builtin_registry_json().c_str(); }

fracmom_status fracmom_symbolic_eval(const char* expr, int precision, char** out) {
  return guarded([&] {
    if (expr == nullptr || out == nullptr) fracmom::fail(fracmom::ErrorCode::kInvalidArgument, "null argument");
    *out = nullptr;
    const fracmom::Precision p = checked_precision(precision);
    const fracmom::SymValue v = fracmom::SymValue::parse(expr);
    *out = dup_string(fracmom::eval_sym(v, p).to_fixed(precision));
  });
}

void fracmom_string_free(char* s) { std::free(s); }

}  // extern "C"
