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

// Exact scalars and the combinatorial primitives built on them.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fracmom {

using Integer = mpz_class;

// GMP keeps mpq_class canonical after every arithmetic operation; values
// built from a raw numerator/denominator pair must go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

int sign(const Rational& q);

Integer factorial(long n);

// C(n, k) for n >= 0; zero when k < 0 or k > n. Negative n is rejected.
Rational binom(long n, long k);
Integer binom_int(long n, long k);

// a (a-1) ... (a-n+1); empty product for n = 0.
Rational falling(const Rational& a, long n);

// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
Rational harmonic(long n);

// (-1)^n
inline int neg1_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

// floor(a / b) for b > 0.
inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace fracmom
