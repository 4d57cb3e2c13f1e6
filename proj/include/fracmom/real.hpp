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

// Multiprecision real numbers (MPFR-backed) and the precision policy used by
// every numerical routine in the library.

#include <mpfr.h>

#include <compare>
#include <string>

#include "fracmom/rational.hpp"

namespace fracmom {

/// Requested accuracy in decimal digits plus guard digits carried internally.
struct Precision {
  int digits = 30;
  int guard = 10;

  static constexpr int kMinDigits = 10;

  Precision() = default;
  explicit Precision(int d, int g = 10);

  int working_digits() const noexcept { return digits + guard; }
  mpfr_prec_t bits() const noexcept;
  Precision with_extra_guard(int extra) const { return Precision(digits, guard + extra); }
};

mpfr_prec_t digits_to_bits(int digits);

class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(long v, mpfr_prec_t bits);
  Real(int v, mpfr_prec_t bits) : Real(static_cast<long>(v), bits) {}
  Real(double v, mpfr_prec_t bits);
  Real(const Rational& q, mpfr_prec_t bits);
  Real(const Integer& z, mpfr_prec_t bits);
  Real(long v, const Precision& p) : Real(v, p.bits()) {}
  Real(const Rational& q, const Precision& p) : Real(q, p.bits()) {}

  static Real parse(const std::string& text, mpfr_prec_t bits);
  static Real pi(mpfr_prec_t bits);
  // 10^e
  static Real pow10(long e, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long o);
  Real& operator-=(long o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator/(long a, const Real& b);
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }

  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log10 |x| as a double; -inf style large negative for zero.
  double log10_abs() const;

  // Fixed-point rendering with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;
  // Scientific rendering with `sig` significant digits.
  std::string to_scientific(int sig) const;

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, long e);
Real pow(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
Real with_bits(const Real& x, mpfr_prec_t bits);

/// A numerical value together with a guaranteed bound on |value - truth|.
struct Estimate {
  Real value;
  Real bound;
};

}  // namespace fracmom
