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

// Bernoulli numbers and polynomials, conversions between the monomial and
// Bernoulli bases, and the Bernoulli-basis expansion of x^m (1-x)^m.

#include <utility>
#include <vector>

#include "fracmom/poly.hpp"
#include "fracmom/rational.hpp"

namespace fracmom {

/// c_0 B_0(x) + c_1 B_1(x) + ... ; since B_0 = 1, coeffs()[0] is the
/// constant term.
class BernoulliBasisPoly {
 public:
  BernoulliBasisPoly() = default;
  explicit BernoulliBasisPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(long j) const;
  Rational constant_term() const { return coeff(0); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  BernoulliBasisPoly& operator+=(const BernoulliBasisPoly& other);
  BernoulliBasisPoly& operator*=(const Rational& c);
  friend bool operator==(const BernoulliBasisPoly& a, const BernoulliBasisPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // B_n'(x) = n B_{n-1}(x) applied term by term.
  BernoulliBasisPoly derivative(long order = 1) const;

  Poly to_monomial() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Exact B_n from sum_{k=0}^{m} C(m+1,k) B_k = 0 (m >= 1); memoized.
Rational bernoulli_number(long n);

/// B_n(x) = sum_k C(n,k) B_{n-k} x^k.
Poly bernoulli_poly(long n);

/// x^n = (1/(n+1)) sum_{j=0}^{n} C(n+1,j) B_j(x).
BernoulliBasisPoly monomial_to_bernoulli(long n);

BernoulliBasisPoly poly_to_bernoulli(const Poly& p);

/// x^m (1-x)^m as 1/((2m+1) C(2m,m)) + sum over even j in [m+1, 2m].
BernoulliBasisPoly expand_sympower(long m);

/// k-th derivative of x^m (1-x)^m in the Bernoulli basis. k = 0 gives the
/// expansion itself and k > 2m the zero expansion.
BernoulliBasisPoly sympower_derivative(long m, long k);

/// (f^{(j)}(0), f^{(j)}(1)) for f = x^m (1-x)^m.
std::pair<Rational, Rational> sympower_boundary(long m, long j);

/// x^m (1-x)^m in the monomial basis.
Poly sympower_poly(long m);

/// Shifted Legendre P_m(2x-1) from Rodrigues' formula applied to x^m (1-x)^m.
Poly shifted_legendre(long m);

/// Same polynomial assembled from its Bernoulli-basis coefficients
/// sum_{j=1}^{m} (1+(-1)^{m+j}) (m+j-1)! / (j! (j-1)! (m-j+1)!) B_j(x).
BernoulliBasisPoly shifted_legendre_bernoulli(long m);

/// The other displayed route: (1/m!) times the m-th derivative expansion.
BernoulliBasisPoly shifted_legendre_from_derivative(long m);

}  // namespace fracmom
