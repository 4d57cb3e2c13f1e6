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

#pragma once

// Verification suites and the known-discrepancy registry.

#include <string>
#include <vector>

#include "fracmom/oracle.hpp"
#include "fracmom/quadrature.hpp"

namespace fracmom {

struct VerifyOptions {
  std::string suite = "all";  // all | identities | moments | sequences
  long max_m = 6;
  long max_k = 12;
  double tol = 1e-10;
  int digits = 30;
};

struct KnownDiscrepancy {
  std::string name;  // exact record name, or a prefix ending in '*'
  std::string suite;
  std::string reason;
};

/// Registry compiled into the library from data/known_discrepancies.json.
const std::string& builtin_registry_json();

/// Parses registry JSON; throws invalid-argument on malformed input.
std::vector<KnownDiscrepancy> parse_registry(const std::string& json_text);

/// Marks failing records whose name matches a registry entry as known.
void apply_registry(VerificationReport& report, const std::vector<KnownDiscrepancy>& registry);

VerificationReport verify_identities(const VerifyOptions& o);
VerificationReport verify_moments(const VerifyOptions& o);
VerificationReport verify_sequences(const VerifyOptions& o);

/// Runs the selected suite(s) and applies the registry.
VerificationReport run_verification(const VerifyOptions& o, const std::vector<KnownDiscrepancy>& registry);

/// int_0^1 B_n(x) log Gamma(x + shift) dx by tanh-sinh with MPFR's lngamma.
TanhSinhResult loggamma_quadrature_bernoulli(long n, long shift, const Precision& p);

/// int_0^1 trig(2 pi x) log Gamma(x + 1) dx by tanh-sinh with MPFR's lngamma.
TanhSinhResult loggamma_quadrature_trig(TrigKind kind, const Precision& p);

}  // namespace fracmom
