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

// Fractional moments I_k f = int_0^1 x^k f({1/x}) dx: the general reduction
// for polynomial f, the closed forms for the sine/cosine, Bernoulli, power
// and x^m (1-x)^m families, and the related series and remarks.

#include <optional>
#include <string>
#include <variant>

#include "fracmom/poly.hpp"
#include "fracmom/real.hpp"
#include "fracmom/sequences.hpp"
#include "fracmom/symbolic.hpp"

namespace fracmom {

struct SineFamily {};
struct CosineFamily {};
struct BernoulliFamily {
  long n = 0;
};
struct PowerFamily {
  long m = 1;
};
struct SymPowerFamily {
  long m = 1;
};
struct PolyFamily {
  Poly p;
};

using MomentFamily =
    std::variant<SineFamily, CosineFamily, BernoulliFamily, PowerFamily, SymPowerFamily, PolyFamily>;

/// "sine", "cosine", "bernoulli", "power", "sympower" or "poly".
std::string family_name(const MomentFamily& f);

/// The polynomial behind a family; empty for the trigonometric ones.
std::optional<Poly> family_poly(const MomentFamily& f);

/// Validates index bounds (n >= 0, m >= 1).
void validate_family(const MomentFamily& f);

enum class Source { kTheorem, kEngine };
const char* source_name(Source s);

/// Recorded when a printed closed form disagrees with the general reduction.
struct Discrepancy {
  std::string regime;
  SymValue printed;
  SymValue engine;
  std::string printed_value;
  std::string engine_value;
};

struct MomentResult {
  MomentFamily family;
  long k = 0;
  SymValue value;
  std::string regime;
  Source source = Source::kTheorem;
  std::optional<Discrepancy> discrepancy;
};

/// General reduction for polynomial f:
///   I_k f = (1/(k+1)!) ( sum_{j=0}^{k} (k-j)! (f^{(j)}(0) alpha_{k-j}
///           - f^{(j)}(1) (alpha_{k-j} - 1)) + int_0^1 f^{(k+2)} log Gamma(x+1) dx ),
/// the integral taken exactly through the Bernoulli expansion of f^{(k+2)}.
SymValue moment_poly_generic(const Poly& p, long k);

/// The same reduction applied to sin(2 pi x) / cos(2 pi x).
SymValue moment_trig_engine(TrigKind kind, long k);

/// Closed forms exactly as printed, per regime (no reconciliation).
namespace printed {
SymValue trig(TrigKind kind, long k);
SymValue bernoulli(long n, long k);
SymValue power(long m, long k);
SymValue sympower(long m, long k);
}  // namespace printed

std::string trig_regime(long k);
std::string bernoulli_regime(long n, long k);
std::string power_regime(long m, long k);
std::string sympower_regime(long m, long k);

/// Compares a printed closed form with the engine value: exact equality of
/// normal forms, or numerical agreement within 1e-20 at 30 digits. On
/// disagreement the engine value is returned with source = engine and the
/// discrepancy recorded.
MomentResult reconcile(const MomentFamily& f, long k, std::string regime, SymValue printed_value,
                       const SymValue& engine_value);

MomentResult moment_trig(TrigKind kind, long k);
MomentResult moment_bernoulli(long n, long k);
MomentResult moment_power(long m, long k);
MomentResult moment_sympower(long m, long k);

/// Closed form for any family (theorem where one exists, engine for poly).
MomentResult compute_moment(const MomentFamily& f, long k);
/// Engine value for any family.
SymValue engine_moment(const MomentFamily& f, long k);

/// (m!/(k+1)!) sum_{j>=1} ((k+j)!/(m+j)!) (zeta(k+j+1) - 1).
Estimate furdui_series(long m, long k, const Precision& p);

enum class ZetaSumCase { kKEqMMinus2, kKEqMMinus3, kGeneral };

/// Closed forms of the zeta series: the two displayed particular cases
/// (k = m-2, k = m-3) and, for kGeneral, the power-moment value C_k^m.
SymValue zeta_sum_closed(long m, ZetaSumCase c, long k = 0);

/// Direct summation of the series each closed form evaluates:
///   k = m-2: sum_j (zeta(m+j-1) - 1) / ((m+j)(m+j-1)),
///   k = m-3: sum_j (zeta(m+j-2) - 1) / ((m+j)(m+j-1)(m+j-2)),
///   general: furdui_series(m, k).
Estimate zeta_sum_series(long m, ZetaSumCase c, long k, const Precision& p);

/// int_0^n x^k sum_{i<n} {1/x + i/n} dx.
SymValue hermite_moment(long n, long k);

/// int_0^1 int_0^1 {x/y}^m {y/x}^k dx dy = (C_k^m + C_m^k) / 2.
SymValue double_moment(long m, long k);

/// p_{m,k} = sum_{j=m}^{k} C(m, j-m) / C(k, j).
Rational p_sum(long m, long k);

}  // namespace fracmom
