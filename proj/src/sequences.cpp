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

#include "fracmom/sequences.hpp"

#include <map>
#include <mutex>

#include "fracmom/bernoulli.hpp"
#include "fracmom/error.hpp"

namespace fracmom {

namespace {

void require_nonneg(long n, const char* what) {
  if (n < 0) fail(ErrorCode::kUnsupportedArgument, std::string(what) + " of a negative index");
}

}  // namespace

SymValue alpha_seq(long n) {
  require_nonneg(n, "alpha");
  if (n == 0) return SymValue::of(Atom::euler_gamma());
  return SymValue::of(Atom::zeta(n + 1));
}

SymValue a_seq(long n) {
  require_nonneg(n, "a_n");
  if (n == 0) return SymValue::of(Atom::log_2pi(), make_rational(1, 2));
  if (n % 2 == 0) {
    // -zeta'(-n) = (-1)^{n/2+1} n! zeta(n+1) / (2^{n+1} pi^n)
    const Rational coeff = Rational(neg1_pow(n / 2 + 1)) * Rational(factorial(n)) /
                           Rational(Integer(1) << static_cast<mp_bitcnt_t>(n + 1));
    SymValue v = SymValue::of(Atom::zeta(n + 1), coeff);
    v *= Atom::pi(-n);
    return v;
  }
  const Rational scale = bernoulli_number(n + 1) / Rational(n + 1);
  SymValue v = SymValue::of(Atom::zeta_prime_ratio(n + 1));
  v -= SymValue::of(Atom::log_2pi());
  v -= SymValue::of(Atom::euler_gamma());
  v *= scale;
  return v;
}

SymValue b_seq(long n) {
  require_nonneg(n, "b_n");
  Rational sum(0);
  for (long k = 1; k <= n + 1; ++k) sum += binom(n + 1, k) * bernoulli_number(n + 1 - k) / Rational(k);
  return a_seq(n) - sum / Rational(n + 1);
}

SymValue loggamma_integral_bernoulli(long n) { return b_seq(n); }

SymValue loggamma_integral_monomial(long n) {
  require_nonneg(n, "log-Gamma monomial integral");
  SymValue acc;
  for (long k = 0; k <= n; ++k) acc += a_seq(k) * binom(n + 1, k);
  acc *= make_rational(1, n + 1);
  acc -= make_rational(1, (n + 1) * (n + 1));
  return acc;
}

SymValue loggamma_integral_trig(TrigKind kind) {
  if (kind == TrigKind::kSine) {
    SymValue v = SymValue::of(Atom::ci_2pi(), make_rational(1, 2));
    return v * Atom::pi(-1);
  }
  SymValue v = SymValue::of(Atom::si_2pi(), make_rational(-1, 2));
  v *= Atom::pi(-1);
  v += make_rational(1, 4);
  return v;
}

}  // namespace fracmom
