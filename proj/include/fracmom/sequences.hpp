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

// The constant sequences the moment formulas are written in, and the
// log-Gamma integrals they encode.

#include "fracmom/symbolic.hpp"

namespace fracmom {

enum class TrigKind { kSine, kCosine };

/// alpha_0 = gamma, alpha_n = zeta(n+1).
SymValue alpha_seq(long n);

/// a_n = int_0^1 B_n(x) log Gamma(x) dx. Even n: -zeta'(-n), written through
/// the functional equation as (-1)^{n/2+1} n! zeta(n+1) / (2 (2 pi)^n), with
/// a_0 = log(2 pi)/2. Odd n: B_{n+1}/(n+1) (zeta'/zeta(n+1) - log 2 pi - gamma).
SymValue a_seq(long n);

/// b_n = a_n - (1/(n+1)) sum_{k=1}^{n+1} C(n+1,k) B_{n+1-k} / k.
SymValue b_seq(long n);

/// int_0^1 B_n(x) log Gamma(x+1) dx (= b_n).
SymValue loggamma_integral_bernoulli(long n);

/// int_0^1 x^n log Gamma(x+1) dx = -1/(n+1)^2 + (1/(n+1)) sum_k C(n+1,k) a_k.
SymValue loggamma_integral_monomial(long n);

/// int_0^1 sin(2 pi x) log Gamma(x+1) dx = Ci(2 pi)/(2 pi) and
/// int_0^1 cos(2 pi x) log Gamma(x+1) dx = 1/4 - Si(2 pi)/(2 pi).
SymValue loggamma_integral_trig(TrigKind kind);

}  // namespace fracmom
