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

#include "fracmom/rational.hpp"

#include <cctype>

#include "fracmom/error.hpp"

namespace fracmom {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::kDomainError, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  const auto slash = s.find('/');
  auto num = trim(s.substr(0, slash));
  if (!is_integer_literal(num)) {
    fail(ErrorCode::kInvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  auto den = trim(s.substr(slash + 1));
  if (!is_integer_literal(den)) {
    fail(ErrorCode::kInvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) fail(ErrorCode::kInvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(num), d);
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

Integer factorial(long n) {
  if (n < 0) fail(ErrorCode::kUnsupportedArgument, "factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binom_int(long n, long k) {
  if (n < 0) fail(ErrorCode::kUnsupportedArgument, "binom with negative upper index");
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational binom(long n, long k) { return Rational(binom_int(n, k)); }

Rational falling(const Rational& a, long n) {
  if (n < 0) fail(ErrorCode::kUnsupportedArgument, "falling factorial with negative length");
  Rational r(1);
  for (long i = 0; i < n; ++i) r *= a - i;
  return r;
}

Rational harmonic(long n) {
  if (n < 0) fail(ErrorCode::kUnsupportedArgument, "harmonic number of a negative index");
  Rational h(0);
  for (long i = 1; i <= n; ++i) h += make_rational(1, i);
  return h;
}

}  // namespace fracmom
