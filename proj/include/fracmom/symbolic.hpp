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

// Exact closed-form values: rational linear combinations of products of
// named transcendental constants ("atoms"), kept in a unique normal form.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fracmom/rational.hpp"
#include "fracmom/real.hpp"

namespace fracmom {

enum class AtomKind {
  kEulerGamma,      // gamma
  kLog2Pi,          // log(2 pi)
  kPi,              // pi^param, param != 0
  kZeta,            // zeta(param), param >= 2
  kZetaPrimeRatio,  // zeta'(param) / zeta(param), param even >= 2
  kSiTwoPi,         // Si(2 pi)
  kCiTwoPi,         // Ci(2 pi)
};

struct Atom {
  AtomKind kind = AtomKind::kEulerGamma;
  long param = 0;

  static Atom euler_gamma() { return {AtomKind::kEulerGamma, 0}; }
  static Atom log_2pi() { return {AtomKind::kLog2Pi, 0}; }
  static Atom pi(long power);
  static Atom zeta(long s);
  static Atom zeta_prime_ratio(long s);
  static Atom si_2pi() { return {AtomKind::kSiTwoPi, 0}; }
  static Atom ci_2pi() { return {AtomKind::kCiTwoPi, 0}; }

  friend auto operator<=>(const Atom&, const Atom&) = default;

  std::string to_string() const;
};

/// Sorted product of atoms; powers of pi are merged into a single atom.
using Monomial = std::vector<Atom>;

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class SymValue {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  SymValue() = default;
  static SymValue constant(const Rational& c);
  static SymValue of(const Atom& a, const Rational& c = Rational(1));

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  Rational rational_part() const;

  SymValue& operator+=(const SymValue& o);
  SymValue& operator-=(const SymValue& o);
  SymValue& operator+=(const Rational& c);
  SymValue& operator-=(const Rational& c);
  SymValue& operator*=(const Rational& c);
  SymValue& operator*=(const Atom& a);
  SymValue& operator*=(const SymValue& o);

  friend SymValue operator+(SymValue a, const SymValue& b) { return a += b; }
  friend SymValue operator-(SymValue a, const SymValue& b) { return a -= b; }
  friend SymValue operator+(SymValue a, const Rational& c) { return a += c; }
  friend SymValue operator-(SymValue a, const Rational& c) { return a -= c; }
  friend SymValue operator*(SymValue a, const Rational& c) { return a *= c; }
  friend SymValue operator*(const Rational& c, SymValue a) { return a *= c; }
  friend SymValue operator*(SymValue a, const Atom& at) { return a *= at; }
  friend SymValue operator*(SymValue a, const SymValue& b) { return a *= b; }
  SymValue operator-() const;

  friend bool operator==(const SymValue& a, const SymValue& b) { return a.terms_ == b.terms_; }

  /// Canonical text, e.g. "1 - 1/2*zeta(2)" or "-2*pi*Ci2pi".
  std::string to_string() const;
  static SymValue parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Numerical value of one atom, accurate to 10^-p.digits.
Real eval_atom(const Atom& a, const Precision& p);

/// Numerical value of v; working precision is raised to absorb
/// cancellation between large terms, so the result is accurate to
/// 10^-p.digits.
Real eval_sym(const SymValue& v, const Precision& p);

/// (2 pi)^e as a symbolic value.
SymValue two_pi_pow(long e);

}  // namespace fracmom
