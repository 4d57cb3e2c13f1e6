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

// High-precision values of the transcendental quantities the closed forms
// are built from. Every routine works at p.bits() (digits + guard) and
// guarantees an absolute error below 10^-p.digits; the *_estimate variants
// also return the analytic truncation bound actually achieved.

#include <utility>

#include "fracmom/real.hpp"

namespace fracmom {

enum class NamedConstant { kEulerGamma, kPi, kLog2Pi };

Real eval_named_constant(NamedConstant c, const Precision& p);
Real euler_gamma(const Precision& p);
Estimate euler_gamma_estimate(const Precision& p);
Real pi(const Precision& p);
Real log_2pi(const Precision& p);

/// Hurwitz zeta sum_{k>=0} (a+k)^-s for integer s >= 2 and real a > 0, by
/// Euler-Maclaurin summation with a rigorous remainder bound.
Estimate hurwitz_zeta(long s, const Real& a, const Precision& p);

/// zeta(s) for integer s >= 2.
Real zeta_int(long s, const Precision& p);
Estimate zeta_int_estimate(long s, const Precision& p);

/// zeta'(s) for even s >= 2 (any integer s >= 2 is accepted internally).
Real zeta_prime_even(long s, const Precision& p);
Estimate zeta_prime_estimate(long s, const Precision& p);

/// log Gamma(x) for real x > 0 (Stirling series after an upward shift).
Real log_gamma(const Real& x, const Precision& p);
Estimate log_gamma_estimate(const Real& x, const Precision& p);

/// psi^{(m)}(x) for real x > 0.
Real polygamma(long m, const Real& x, const Precision& p);
Estimate polygamma_estimate(long m, const Real& x, const Precision& p);

/// Sine and cosine integrals by their power series; Ci needs x > 0.
Estimate sine_integral(const Real& x, const Precision& p);
Estimate cosine_integral(const Real& x, const Precision& p);

/// (Si(2 pi), Ci(2 pi)).
std::pair<Real, Real> si_ci_at_2pi(const Precision& p);

/// Upper limit on the number of series terms any routine may use before
/// reporting precision-unachievable.
void set_series_term_cap(long cap);
long series_term_cap();

/// The j-th even Bernoulli number B_{2j} as a Real (cached per precision).
Real bernoulli_even_real(long j, mpfr_prec_t bits);

}  // namespace fracmom
