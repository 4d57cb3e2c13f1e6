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

#include "fracmom/poly.hpp"

#include <algorithm>

#include "fracmom/error.hpp"

namespace fracmom {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(long degree, const Rational& c) {
  if (degree < 0) fail(ErrorCode::kInvalidArgument, "negative monomial degree");
  std::vector<Rational> v(static_cast<size_t>(degree + 1));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(long i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  normalize();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

Poly Poly::derivative(long order) const {
  if (order < 0) fail(ErrorCode::kInvalidArgument, "negative derivative order");
  if (order > degree()) return Poly();
  std::vector<Rational> out(coeffs_.size() - static_cast<size_t>(order));
  for (size_t i = 0; i < out.size(); ++i) {
    const long src = static_cast<long>(i) + order;
    out[i] = coeffs_[static_cast<size_t>(src)] * falling(Rational(src), order);
  }
  return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
  if (is_zero()) return Poly();
  std::vector<Rational> out(coeffs_.size() + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i) + 1);
  }
  return Poly(std::move(out));
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational Poly::integrate_unit() const { return antiderivative().evaluate(Rational(1)); }

Poly Poly::pow(long e) const {
  if (e < 0) fail(ErrorCode::kInvalidArgument, "negative polynomial power");
  Poly result = Poly::constant(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (i == 0 || !unit) out += fracmom::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace fracmom
