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

#include <doctest.h>

#include "fracmom/bernoulli.hpp"
#include "fracmom/error.hpp"

using namespace fracmom;

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == make_rational(-1, 2));
  CHECK(bernoulli_number(2) == make_rational(1, 6));
  CHECK(bernoulli_number(4) == make_rational(-1, 30));
  CHECK(bernoulli_number(12) == make_rational(-691, 2730));
  CHECK(bernoulli_number(30) == make_rational(8615841276005LL, 14322));
  for (long n = 3; n <= 41; n += 2) CHECK(bernoulli_number(n) == 0);
  CHECK_THROWS_AS(bernoulli_number(-1), Error);
}

TEST_CASE("Bernoulli polynomials: values, Appell property, symmetry") {
  CHECK(bernoulli_poly(1) == Poly{make_rational(-1, 2), Rational(1)});
  CHECK(bernoulli_poly(2) == Poly{make_rational(1, 6), Rational(-1), Rational(1)});
  for (long n = 1; n <= 25; ++n) {
    const Poly b = bernoulli_poly(n);
    CHECK(b.derivative() == bernoulli_poly(n - 1) * Rational(n));
    CHECK(b.integrate_unit() == 0);
    // B_n(1 - x) = (-1)^n B_n(x), checked at x = 1/3.
    CHECK(b.evaluate(make_rational(2, 3)) == b.evaluate(make_rational(1, 3)) * neg1_pow(n));
    if (n >= 2) CHECK(b.evaluate(Rational(1)) == b.evaluate(Rational(0)));
  }
}

TEST_CASE("monomial and Bernoulli bases round-trip") {
  for (long n = 0; n <= 20; ++n) {
    CHECK(monomial_to_bernoulli(n).to_monomial() == Poly::monomial(n));
    CHECK(poly_to_bernoulli(bernoulli_poly(n)).to_monomial() == bernoulli_poly(n));
  }
  const Poly p{Rational(3), make_rational(-1, 7), Rational(0), Rational(5)};
  CHECK(poly_to_bernoulli(p).to_monomial() == p);
  CHECK(poly_to_bernoulli(p).derivative().to_monomial() == p.derivative());
  CHECK(poly_to_bernoulli(p).constant_term() == p.integrate_unit());
}

TEST_CASE("x^m (1-x)^m expansion") {
  // m = 1: x - x^2 = 1/6 - B_2(x)
  const BernoulliBasisPoly e1 = expand_sympower(1);
  CHECK(e1.coeff(0) == make_rational(1, 6));
  CHECK(e1.coeff(1) == 0);
  CHECK(e1.coeff(2) == -1);
  for (long m = 1; m <= 20; ++m) {
    const BernoulliBasisPoly e = expand_sympower(m);
    CHECK(e.to_monomial() == sympower_poly(m));
    CHECK(e.constant_term() == Rational(1) / (Rational(2 * m + 1) * binom(2 * m, m)));
    for (long j = 1; j <= e.degree(); j += 2) CHECK(e.coeff(j) == 0);
  }
}

TEST_CASE("derivatives of x^m (1-x)^m and boundary values") {
  for (long m = 1; m <= 12; ++m) {
    const Poly f = sympower_poly(m);
    CHECK(sympower_derivative(m, 0) == expand_sympower(m));
    CHECK(sympower_derivative(m, 2 * m + 1).is_zero());
    CHECK(sympower_derivative(m, 5 * m).is_zero());
    for (long k = 1; k <= 2 * m; ++k) {
      CHECK(sympower_derivative(m, k).to_monomial() == f.derivative(k));
      CHECK(sympower_derivative(m, k) == expand_sympower(m).derivative(k));
    }
    for (long j = 0; j <= 2 * m + 2; ++j) {
      const auto [a, b] = sympower_boundary(m, j);
      CHECK(a == f.derivative(j).evaluate(Rational(0)));
      CHECK(b == f.derivative(j).evaluate(Rational(1)));
    }
  }
  CHECK_THROWS_AS(sympower_derivative(2, -1), Error);
}

TEST_CASE("shifted Legendre polynomials") {
  CHECK(shifted_legendre(0) == Poly{Rational(1)});
  CHECK(shifted_legendre(1) == Poly{Rational(-1), Rational(2)});
  CHECK(shifted_legendre(2) == Poly{Rational(1), Rational(-6), Rational(6)});
  for (long m = 0; m <= 15; ++m) {
    CHECK(shifted_legendre_bernoulli(m).to_monomial() == shifted_legendre(m));
    if (m >= 1) CHECK(shifted_legendre_from_derivative(m).to_monomial() == shifted_legendre(m));
    CHECK(shifted_legendre(m).evaluate(Rational(1)) == 1);
    CHECK(shifted_legendre(m).evaluate(Rational(0)) == neg1_pow(m));
  }
  // Orthogonality on [0,1].
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b < a; ++b) CHECK((shifted_legendre(a) * shifted_legendre(b)).integrate_unit() == 0);
}
