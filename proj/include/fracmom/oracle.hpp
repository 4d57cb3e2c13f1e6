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

// Numerical evaluations of I_k f = int_0^1 x^k f({1/x}) dx that do not use
// any closed form, each with an explicit error bound.

#include <string>
#include <vector>

#include "fracmom/moments.hpp"
#include "fracmom/real.hpp"

namespace fracmom {

enum class OracleMethod { kIntervalSeries, kPolygamma };
const char* oracle_method_name(OracleMethod m);

struct OracleParams {
  long intervals = 0;    // J; 0 for the polygamma kernel
  int max_order = 0;     // largest Gauss-Legendre rule used
  long tail_terms = 0;   // T; 0 for the polygamma kernel
  int digits = 0;        // requested precision P
};

struct OracleResult {
  Real value;
  Real error_bound;
  OracleMethod method = OracleMethod::kIntervalSeries;
  OracleParams params;
};

constexpr long kDefaultIntervals = 2000;

/// sum_{j=1}^{J} int_0^1 f(s) (j+s)^{-(k+2)} ds by Gauss-Legendre, plus the
/// tail sum_t (-1)^t C(k+1+t,t) mu_t zeta(k+2+t, J+1) with mu_t = int f s^t.
OracleResult oracle_interval_series(const MomentFamily& f, long k, const Precision& p,
                                    long intervals = kDefaultIntervals);

/// int_0^1 f(s) zeta(k+2, s+1) ds, i.e. the polygamma kernel
/// (-1)^k/(k+1)! psi^{(k+1)}(s+1), by a single Gauss-Legendre rule.
OracleResult oracle_polygamma(const MomentFamily& f, long k, const Precision& p);

OracleResult run_oracle(OracleMethod m, const MomentFamily& f, long k, const Precision& p);

/// f(s) at precision bits.
Real eval_family(const MomentFamily& f, const Real& s);

/// Upper bound of sup_{[0,1]} |f|.
double family_sup_norm(const MomentFamily& f);

/// One comparison in a verification run.
struct CheckRecord {
  std::string suite;
  std::string name;    // stable identifier, used by the discrepancy registry
  std::string params;  // human-readable parameters
  bool pass = false;
  bool known = false;  // failure matched the registry
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const VerificationReport& other);
  long failures() const;
  long unregistered_failures() const;
};

/// Compares theorem value, engine value and both oracles pairwise. A printed
/// formula that needed the engine fallback is recorded as its own failing
/// check named "printed:<family>:<regime>".
VerificationReport cross_check(const MomentFamily& f, long k, const Precision& p, const Real& tol);

/// int_0^1 int_0^1 {x/y}^m {y/x}^k dx dy by iterated Gauss-Legendre in double
/// precision; accurate to about 1e-6.
double double_moment_quadrature(long m, long k);

/// n^{k+1} (I_k x + (n-1)/(2(k+1))) from the interval-series oracle for x.
OracleResult hermite_moment_oracle(long n, long k, const Precision& p);

/// max over the sample points of |sum_{i<n} {x + i/n} - {n x} - (n-1)/2|.
Rational hermite_identity_defect(long n, const std::vector<Rational>& xs);

}  // namespace fracmom
