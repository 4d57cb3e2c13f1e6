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

#include "fracmom/bernoulli.hpp"

#include <algorithm>
#include <mutex>

#include "fracmom/error.hpp"

namespace fracmom {

BernoulliBasisPoly::BernoulliBasisPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void BernoulliBasisPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational BernoulliBasisPoly::coeff(long j) const {
  if (j < 0 || j > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(j)];
}

BernoulliBasisPoly& BernoulliBasisPoly::operator+=(const BernoulliBasisPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

BernoulliBasisPoly& BernoulliBasisPoly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  normalize();
  return *this;
}

BernoulliBasisPoly BernoulliBasisPoly::derivative(long order) const {
  if (order < 0) fail(ErrorCode::kInvalidArgument, "negative derivative order");
  if (order > degree()) return BernoulliBasisPoly();
  std::vector<Rational> out(coeffs_.size() - static_cast<size_t>(order));
  for (size_t i = 0; i < out.size(); ++i) {
    const long n = static_cast<long>(i) + order;
    out[i] = coeffs_[static_cast<size_t>(n)] * falling(Rational(n), order);
  }
  return BernoulliBasisPoly(std::move(out));
}

Poly BernoulliBasisPoly::to_monomial() const {
  Poly acc;
  for (long j = 0; j <= degree(); ++j) {
    const Rational& c = coeffs_[static_cast<size_t>(j)];
    if (c != 0) acc += bernoulli_poly(j) * c;
  }
  return acc;
}

Rational bernoulli_number(long n) {
  if (n < 0) fail(ErrorCode::kUnsupportedArgument, "Bernoulli number of negative index");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(table.size()) <= n) {
    const long m = static_cast<long>(table.size());
    if (m > 1 && (m % 2 == 1)) {
      table.emplace_back(0);
      continue;
    }
    Rational acc(0);
    for (long k = 0; k < m; ++k) {
      if (table[static_cast<size_t>(k)] != 0) acc += binom(m + 1, k) * table[static_cast<size_t>(k)];
    }
    table.push_back(-acc / Rational(m + 1));
  }
  return table[static_cast<size_t>(n)];
}

Poly bernoulli_poly(long n) {
  if (n < 0) fail(ErrorCode::kUnsupportedArgument, "Bernoulli polynomial of negative index");
  std::vector<Rational> c(static_cast<size_t>(n + 1));
  for (long k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = binom(n, k) * bernoulli_number(n - k);
  return Poly(std::move(c));
}

BernoulliBasisPoly monomial_to_bernoulli(long n) {
  if (n < 0) fail(ErrorCode::kUnsupportedArgument, "monomial of negative degree");
  std::vector<Rational> c(static_cast<size_t>(n + 1));
  const Rational inv = make_rational(1, n + 1);
  for (long j = 0; j <= n; ++j) c[static_cast<size_t>(j)] = binom(n + 1, j) * inv;
  return BernoulliBasisPoly(std::move(c));
}

BernoulliBasisPoly poly_to_bernoulli(const Poly& p) {
  BernoulliBasisPoly acc;
  for (long i = 0; i <= p.degree(); ++i) {
    const Rational c = p.coeff(i);
    if (c == 0) continue;
    auto term = monomial_to_bernoulli(i);
    term *= c;
    acc += term;
  }
  return acc;
}

namespace {

void require_positive_m(long m) {
  if (m < 1) fail(ErrorCode::kUnsupportedArgument, "x^m (1-x)^m requires m >= 1");
}

}  // namespace

BernoulliBasisPoly expand_sympower(long m) {
  require_positive_m(m);
  std::vector<Rational> c(static_cast<size_t>(2 * m + 1));
  c[0] = Rational(1) / (Rational(2 * m + 1) * binom(2 * m, m));
  const int sg = neg1_pow(m);
  for (long j = m + 1; j <= 2 * m; ++j) {
    if (j % 2 != 0) continue;  // 1 + (-1)^j vanishes
    c[static_cast<size_t>(j)] = Rational(sg * 2) / Rational(j) * binom(m, j - m - 1);
  }
  return BernoulliBasisPoly(std::move(c));
}

BernoulliBasisPoly sympower_derivative(long m, long k) {
  require_positive_m(m);
  if (k < 0) fail(ErrorCode::kUnsupportedArgument, "negative derivative order");
  if (k == 0) return expand_sympower(m);
  if (k > 2 * m) return BernoulliBasisPoly();
  std::vector<Rational> c(static_cast<size_t>(2 * m - k + 1));
  const Rational kfact(factorial(k));
  const int sg = neg1_pow(m);
  for (long j = std::max(k, m + 1); j <= 2 * m; ++j) {
    if (j % 2 != 0) continue;
    c[static_cast<size_t>(j - k)] +=
        Rational(sg * 2) * kfact / Rational(j) * binom(m, j - m - 1) * binom(j, k);
  }
  return BernoulliBasisPoly(std::move(c));
}

std::pair<Rational, Rational> sympower_boundary(long m, long j) {
  require_positive_m(m);
  if (j < 0) fail(ErrorCode::kUnsupportedArgument, "negative derivative order");
  if (j < m || j > 2 * m) return {Rational(0), Rational(0)};
  const Rational at_one = Rational(neg1_pow(m)) * Rational(factorial(j)) * binom(m, j - m);
  return {Rational(neg1_pow(j)) * at_one, at_one};
}

Poly sympower_poly(long m) {
  if (m < 0) fail(ErrorCode::kUnsupportedArgument, "negative exponent");
  return Poly({Rational(0), Rational(1), Rational(-1)}).pow(m);
}

Poly shifted_legendre(long m) {
  if (m < 0) fail(ErrorCode::kUnsupportedArgument, "negative Legendre degree");
  return sympower_poly(m).derivative(m) * (Rational(neg1_pow(m)) / Rational(factorial(m)));
}

BernoulliBasisPoly shifted_legendre_bernoulli(long m) {
  if (m < 0) fail(ErrorCode::kUnsupportedArgument, "negative Legendre degree");
  if (m == 0) return BernoulliBasisPoly({Rational(1)});
  std::vector<Rational> c(static_cast<size_t>(m + 1));
  for (long j = 1; j <= m; ++j) {
    if ((m + j) % 2 != 0) continue;
    c[static_cast<size_t>(j)] = Rational(2) * Rational(factorial(m + j - 1)) /
                                Rational(factorial(j) * factorial(j - 1) * factorial(m - j + 1));
  }
  return BernoulliBasisPoly(std::move(c));
}

BernoulliBasisPoly shifted_legendre_from_derivative(long m) {
  if (m < 0) fail(ErrorCode::kUnsupportedArgument, "negative Legendre degree");
  if (m == 0) return BernoulliBasisPoly({Rational(1)});
  auto d = sympower_derivative(m, m);
  d *= Rational(neg1_pow(m)) / Rational(factorial(m));
  return d;
}

}  // namespace fracmom
