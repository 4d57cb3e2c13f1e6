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

#include "fracmom/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "fracmom/constants.hpp"
#include "fracmom/error.hpp"

namespace fracmom {

Atom Atom::pi(long power) {
  if (power == 0) fail(ErrorCode::kInvalidArgument, "pi^0 is not an atom");
  return {AtomKind::kPi, power};
}

Atom Atom::zeta(long s) {
  if (s < 2) fail(ErrorCode::kInvalidArgument, "zeta atom requires s >= 2");
  return {AtomKind::kZeta, s};
}

Atom Atom::zeta_prime_ratio(long s) {
  if (s < 2 || s % 2 != 0) {
    fail(ErrorCode::kInvalidArgument, "zeta'/zeta atom requires even s >= 2");
  }
  return {AtomKind::kZetaPrimeRatio, s};
}

std::string Atom::to_string() const {
  switch (kind) {
    case AtomKind::kEulerGamma:
      return "gamma";
    case AtomKind::kLog2Pi:
      return "log2pi";
    case AtomKind::kPi:
      return param == 1 ? std::string("pi") : "pi^" + std::to_string(param);
    case AtomKind::kZeta:
      return "zeta(" + std::to_string(param) + ")";
    case AtomKind::kZetaPrimeRatio:
      return "zetapr(" + std::to_string(param) + ")";
    case AtomKind::kSiTwoPi:
      return "Si2pi";
    case AtomKind::kCiTwoPi:
      return "Ci2pi";
  }
  return "?";
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  long pi_power = 0;
  for (const auto* src : {&a, &b}) {
    for (const auto& at : *src) {
      if (at.kind == AtomKind::kPi) {
        pi_power += at.param;
      } else {
        out.push_back(at);
      }
    }
  }
  if (pi_power != 0) out.push_back(Atom::pi(pi_power));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SymValue SymValue::constant(const Rational& c) {
  SymValue v;
  v.add_term({}, c);
  return v;
}

SymValue SymValue::of(const Atom& a, const Rational& c) {
  SymValue v;
  v.add_term({a}, c);
  return v;
}

void SymValue::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool SymValue::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SymValue::rational_part() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

SymValue& SymValue::operator+=(const SymValue& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymValue& SymValue::operator-=(const SymValue& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymValue& SymValue::operator+=(const Rational& c) {
  add_term({}, c);
  return *this;
}

SymValue& SymValue::operator-=(const Rational& c) {
  add_term({}, -c);
  return *this;
}

SymValue& SymValue::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

SymValue& SymValue::operator*=(const Atom& a) {
  SymValue tmp;
  for (const auto& [m, c] : terms_) tmp.add_term(multiply_monomials(m, {a}), c);
  terms_ = std::move(tmp.terms_);
  return *this;
}

SymValue& SymValue::operator*=(const SymValue& o) {
  SymValue tmp;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) tmp.add_term(multiply_monomials(ma, mb), ca * cb);
  }
  terms_ = std::move(tmp.terms_);
  return *this;
}

SymValue SymValue::operator-() const {
  SymValue v = *this;
  for (auto& [m, c] : v.terms_) c = -c;
  return v;
}

std::string SymValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    if (m.empty() || mag != 1) body = fracmom::to_string(mag);
    for (const auto& at : m) {
      if (!body.empty()) body += "*";
      body += at.to_string();
    }
    out += body;
  }
  return out;
}

namespace {

class SymParser {
 public:
  explicit SymParser(std::string_view text) : s_(text) {}

  SymValue parse() {
    SymValue total;
    skip_ws();
    if (at_end()) error("empty expression");
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = (peek() == '-');
      ++pos_;
    }
    for (;;) {
      SymValue t = parse_term();
      if (negate) t = -t;
      total += t;
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') error("expected '+' or '-'");
      negate = (op == '-');
      ++pos_;
    }
    return total;
  }

 private:
  SymValue parse_term() {
    SymValue term = SymValue::constant(Rational(1));
    for (;;) {
      skip_ws();
      if (at_end()) error("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        term *= parse_number();
      } else {
        term *= parse_atom();
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return term;
    }
  }

  Rational parse_number() {
    Integer num = parse_digits();
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) error("bad denominator");
      Integer den = parse_digits();
      if (den == 0) error("zero denominator");
      return make_rational(num, den);
    }
    return Rational(num);
  }

  Integer parse_digits() {
    const size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  long parse_signed_long() {
    bool neg = false;
    if (!at_end() && peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) error("expected integer");
    Integer v = parse_digits();
    if (!v.fits_slong_p()) error("integer out of range");
    return neg ? -v.get_si() : v.get_si();
  }

  long parse_paren_arg() {
    if (at_end() || peek() != '(') error("expected '('");
    ++pos_;
    const long v = parse_signed_long();
    if (at_end() || peek() != ')') error("expected ')'");
    ++pos_;
    return v;
  }

  Atom parse_atom() {
    const size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    if (name == "gamma") return Atom::euler_gamma();
    if (name == "log2pi") return Atom::log_2pi();
    if (name == "Si2pi") return Atom::si_2pi();
    if (name == "Ci2pi") return Atom::ci_2pi();
    if (name == "pi") {
      if (!at_end() && peek() == '^') {
        ++pos_;
        return Atom::pi(parse_signed_long());
      }
      return Atom::pi(1);
    }
    if (name == "zeta") return Atom::zeta(parse_paren_arg());
    if (name == "zetapr") return Atom::zeta_prime_ratio(parse_paren_arg());
    error("unknown atom '" + std::string(name) + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kInvalidArgument,
         "cannot parse symbolic value at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

SymValue SymValue::parse(std::string_view text) { return SymParser(text).parse(); }

Real eval_atom(const Atom& a, const Precision& p) {
  switch (a.kind) {
    case AtomKind::kEulerGamma:
      return euler_gamma(p);
    case AtomKind::kLog2Pi:
      return log_2pi(p);
    case AtomKind::kPi:
      return pow(pi(p), a.param);
    case AtomKind::kZeta:
      return zeta_int(a.param, p);
    case AtomKind::kZetaPrimeRatio:
      return zeta_prime_even(a.param, p) / zeta_int(a.param, p);
    case AtomKind::kSiTwoPi:
      return si_ci_at_2pi(p).first;
    case AtomKind::kCiTwoPi:
      return si_ci_at_2pi(p).second;
  }
  fail(ErrorCode::kInvalidArgument, "unknown atom kind");
}

namespace {

Real eval_terms(const SymValue& v, const Precision& p, double* max_log10) {
  const auto bits = p.bits();
  Real sum(0L, bits);
  double biggest = -1e9;
  for (const auto& [m, c] : v.terms()) {
    Real term(c, bits);
    for (const auto& at : m) term *= eval_atom(at, p);
    biggest = std::max(biggest, term.log10_abs());
    sum += term;
  }
  if (max_log10 != nullptr) *max_log10 = biggest;
  return sum;
}

}  // namespace

Real eval_sym(const SymValue& v, const Precision& p) {
  double biggest = 0;
  Real first = eval_terms(v, p, &biggest);
  if (biggest <= 0.0) return first;
  // Large terms cancel to a small result; redo with enough guard digits.
  const Precision wider = p.with_extra_guard(static_cast<int>(std::ceil(biggest)) + 2);
  return with_bits(eval_terms(v, wider, nullptr), p.bits());
}

SymValue two_pi_pow(long e) {
  if (e == 0) return SymValue::constant(Rational(1));
  Rational scale(1);
  if (e > 0) {
    scale = Rational(Integer(1) << static_cast<mp_bitcnt_t>(e));
  } else {
    scale = Rational(1) / Rational(Integer(1) << static_cast<mp_bitcnt_t>(-e));
  }
  return SymValue::of(Atom::pi(e), scale);
}

}  // namespace fracmom
