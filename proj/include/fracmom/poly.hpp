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

#include <initializer_list>
#include <string>
#include <vector>

#include "fracmom/rational.hpp"

namespace fracmom {

/// Dense polynomial over Rational in the monomial basis; coeffs()[i] is the
/// coefficient of x^i. Trailing zeros are stripped, so the zero polynomial
/// has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(long degree, const Rational& c = Rational(1));

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Coefficient of x^i, zero beyond the degree.
  Rational coeff(long i) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly derivative(long order = 1) const;
  // Antiderivative vanishing at 0.
  Poly antiderivative() const;
  Rational evaluate(const Rational& x) const;
  // Exact integral over [0, 1].
  Rational integrate_unit() const;

  Poly pow(long e) const;

  // Human-readable form, e.g. "x^3 - 2*x^2 + x".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace fracmom
