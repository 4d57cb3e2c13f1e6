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

#include "fracmom/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "fracmom/error.hpp"

namespace fracmom {

Precision::Precision(int d, int g) : digits(d), guard(g) {
  if (d < kMinDigits) {
    fail(ErrorCode::kInvalidArgument,
         "precision must be at least " + std::to_string(kMinDigits) + " digits");
  }
  if (g < 0) fail(ErrorCode::kInvalidArgument, "guard digits must be nonnegative");
}

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

mpfr_prec_t Precision::bits() const noexcept { return digits_to_bits(working_digits()); }

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& z, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(const std::string& text, mpfr_prec_t bits) {
  Real r(bits);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    fail(ErrorCode::kInvalidArgument, "malformed decimal '" + text + "'");
  }
  return r;
}

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow10(long e, mpfr_prec_t bits) {
  Real r(bits);
  Real ten(10L, bits);
  mpfr_pow_si(r.v_, ten.v_, e, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

namespace {

// Binary results carry the smaller of the two operand precisions.
void narrow_to(Real& target, const Real& other) {
  if (other.bits() < target.bits()) mpfr_prec_round(target.get(), other.bits(), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  narrow_to(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  narrow_to(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  narrow_to(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  narrow_to(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(std::min(a.bits(), b.bits()));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(std::min(a.bits(), b.bits()));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(std::min(a.bits(), b.bits()));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(std::min(a.bits(), b.bits()));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r(b.bits());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r(b.bits());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

double Real::log10_abs() const {
  if (is_zero()) return -1e9;
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, v_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

namespace {

std::string format_with(const char* fmt, int digits, mpfr_srcptr v) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, fmt, digits, v) < 0 || buf == nullptr) {
    fail(ErrorCode::kInvalidArgument, "failed to format real");
  }
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(buf, &mpfr_free_str);
  return std::string(buf);
}

}  // namespace

std::string Real::to_fixed(int decimals) const {
  std::string s = format_with("%.*RNf", decimals, v_);
  // Rounding a tiny negative value yields "-0.000..."; render it unsigned.
  if (!s.empty() && s.front() == '-' &&
      s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string Real::to_scientific(int sig) const {
  return format_with("%.*RNe", std::max(sig - 1, 0), v_);
}

Real abs(const Real& x) {
  Real r(x.bits());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real sqrt(const Real& x) {
  Real r(x.bits());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real log(const Real& x) {
  if (x.sign() <= 0) fail(ErrorCode::kDomainError, "log of a nonpositive number");
  Real r(x.bits());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real exp(const Real& x) {
  Real r(x.bits());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real sin(const Real& x) {
  Real r(x.bits());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real cos(const Real& x) {
  Real r(x.bits());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real cosh(const Real& x) {
  Real r(x.bits());
  mpfr_cosh(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, long e) {
  Real r(x.bits());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
Real pow(const Real& x, const Real& y) {
  Real r(std::min(x.bits(), y.bits()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

Real with_bits(const Real& x, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace fracmom
