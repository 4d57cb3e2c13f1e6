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

#include "fracmom/constants.hpp"

#include <atomic>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <tuple>

#include "fracmom/bernoulli.hpp"
#include "fracmom/error.hpp"

namespace fracmom {

namespace {

std::atomic<long> g_term_cap{200000};

void check_cap(long used, const char* what) {
  if (used > g_term_cap.load()) {
    fail(ErrorCode::kPrecisionUnachievable,
         std::string(what) + ": series term cap exceeded (" + std::to_string(used) + ")");
  }
}

Real tolerance(const Precision& p) { return Real::pow10(-p.working_digits(), p.bits()); }

// Shift point for the asymptotic expansions: the smallest Euler-Maclaurin
// or Stirling term decays like exp(-2 pi w), so w ~ 0.37 D suffices for D
// digits; 0.5 D leaves room for the rising factorials.
double asymptotic_shift(const Precision& p) { return 0.5 * p.working_digits() + 2.0; }

template <class Key>
class RealCache {
 public:
  template <class Fn>
  Real get(const Key& key, Fn&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    Real v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return values_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Real> values_;
};

using SimpleKey = std::tuple<int, long, mpfr_prec_t>;

RealCache<SimpleKey>& constant_cache() {
  static RealCache<SimpleKey> cache;
  return cache;
}

}  // namespace

void set_series_term_cap(long cap) { g_term_cap.store(cap > 0 ? cap : 1); }
long series_term_cap() { return g_term_cap.load(); }

Real bernoulli_even_real(long j, mpfr_prec_t bits) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, std::deque<Real>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto& row = table[bits];
  while (static_cast<long>(row.size()) <= j) {
    const long idx = static_cast<long>(row.size());
    row.emplace_back(bernoulli_number(2 * idx), bits);
  }
  return row[static_cast<size_t>(j)];
}

Real pi(const Precision& p) { return Real::pi(p.bits()); }

Real log_2pi(const Precision& p) {
  return constant_cache().get({0, 0, p.bits()}, [&] { return log(pi(p) * 2L); });
}

Estimate euler_gamma_estimate(const Precision& p) {
  // gamma = H_n - log n - 1/(2n) + sum_j B_{2j} / (2j n^{2j}), remainder
  // bounded by the first omitted term.
  const auto bits = p.bits();
  const Real tol = tolerance(p);
  const long n = static_cast<long>(std::ceil(asymptotic_shift(p)));
  Real h(0L, bits);
  for (long i = n; i >= 1; --i) h += Real(1L, bits) / Real(i, bits);
  const Real rn(n, bits);
  Real acc = h - log(rn) - Real(1L, bits) / (rn * 2L);
  const Real inv_n2 = Real(1L, bits) / (rn * rn);
  Real npow = inv_n2;
  for (long j = 1;; ++j) {
    check_cap(j, "Euler gamma");
    acc += bernoulli_even_real(j, bits) * npow / (2 * j);
    npow *= inv_n2;
    Real next = abs(bernoulli_even_real(j + 1, bits) * npow / (2 * (j + 1)));
    if (next < tol) return {acc, next};
  }
}

Real euler_gamma(const Precision& p) {
  return constant_cache().get({1, 0, p.bits()}, [&] { return euler_gamma_estimate(p).value; });
}

Real eval_named_constant(NamedConstant c, const Precision& p) {
  switch (c) {
    case NamedConstant::kEulerGamma:
      return euler_gamma(p);
    case NamedConstant::kPi:
      return pi(p);
    case NamedConstant::kLog2Pi:
      return log_2pi(p);
  }
  fail(ErrorCode::kInvalidArgument, "unknown constant");
}

Estimate hurwitz_zeta(long s, const Real& a, const Precision& p) {
  if (s < 2) fail(ErrorCode::kDomainError, "hurwitz_zeta requires integer s >= 2");
  if (a.sign() <= 0) fail(ErrorCode::kDomainError, "hurwitz_zeta requires a > 0");
  const auto bits = p.bits();
  const Real tol = tolerance(p);
  const Real av = with_bits(a, bits);
  const double shift = asymptotic_shift(p) - av.to_double();
  const long n = shift > 0 ? static_cast<long>(std::ceil(shift)) : 0;
  check_cap(n, "Hurwitz zeta shift");

  Real sum(0L, bits);
  for (long k = n - 1; k >= 0; --k) sum += pow(av + k, -s);
  const Real w = av + n;
  const Real w_inv2 = Real(1L, bits) / (w * w);
  const Real w_pow = pow(w, 1 - s);
  sum += w_pow / (s - 1);
  sum += w_pow / (w * 2L);

  // T_j = B_{2j}/(2j)! (s)_{2j-1} w^{1-s-2j}; after M terms the remainder is
  // at most 4 (s)_{2M-1} w^{1-s-2M} / (2 pi)^{2M}.
  const Real two_pi_sq = pow(Real::pi(bits) * 2L, 2);
  Real rising(s, bits);
  Real wfac = w_pow * w_inv2;
  Real fact(2L, bits);
  Real tp_pow = two_pi_sq;
  for (long j = 1;; ++j) {
    check_cap(j, "Hurwitz zeta");
    sum += bernoulli_even_real(j, bits) * rising * wfac / fact;
    Real bound = rising * wfac * 4L / tp_pow;
    if (bound < tol) return {sum, bound};
    rising *= (s + 2 * j - 1);
    rising *= (s + 2 * j);
    wfac *= w_inv2;
    fact *= (2 * j + 1);
    fact *= (2 * j + 2);
    tp_pow *= two_pi_sq;
  }
}

Estimate zeta_int_estimate(long s, const Precision& p) {
  if (s < 2) fail(ErrorCode::kDomainError, "zeta_int requires s >= 2");
  return hurwitz_zeta(s, Real(1L, p.bits()), p);
}

Real zeta_int(long s, const Precision& p) {
  if (s < 2) fail(ErrorCode::kDomainError, "zeta_int requires s >= 2");
  return constant_cache().get({2, s, p.bits()}, [&] { return zeta_int_estimate(s, p).value; });
}

Estimate zeta_prime_estimate(long s, const Precision& p) {
  if (s < 2) fail(ErrorCode::kDomainError, "zeta_prime requires s >= 2");
  // Term-wise s-derivative of the Euler-Maclaurin formula at a = 1. The
  // remainder is analytic in s, so Cauchy's estimate on |z - s| = 1/2 of the
  // complex remainder bound bounds its derivative.
  const auto bits = p.bits();
  const Real tol = tolerance(p);
  const long n = static_cast<long>(std::ceil(asymptotic_shift(p)));
  check_cap(n, "zeta' shift");

  Real sum(0L, bits);
  for (long k = n; k >= 2; --k) {
    const Real rk(k, bits);
    sum -= log(rk) * pow(rk, -s);
  }
  const Real w(n + 1, bits);
  const Real lw = log(w);
  const Real w_inv2 = Real(1L, bits) / (w * w);
  const Real w_pow = pow(w, 1 - s);
  const long sm1 = s - 1;
  sum -= w_pow * (lw / sm1 + Real(1L, bits) / (sm1 * sm1));
  sum -= w_pow / w * lw / 2L;

  const Real two_pi_sq = pow(Real::pi(bits) * 2L, 2);
  const Real half(make_rational(1, 2), bits);
  const Real sr(s, bits);
  Real rising(s, bits);        // (s)_{2j-1}
  Real log_deriv = 1L / sr;    // sum_{i=0}^{2j-2} 1/(s+i)
  Real rising_shifted = sr + half;  // (s+1/2)_{2j-1}
  Real wfac = w_pow * w_inv2;  // w^{1-s-2j}
  Real wfac_shifted = wfac * sqrt(w);  // w^{1-(s-1/2)-2j}
  Real fact(2L, bits);
  Real tp_pow = two_pi_sq;
  for (long j = 1;; ++j) {
    check_cap(j, "zeta'");
    const Real term = bernoulli_even_real(j, bits) * rising * wfac / fact;
    sum += term * (log_deriv - lw);
    Real bound = rising_shifted * wfac_shifted * 16L / tp_pow;
    if (bound < tol) return {sum, bound};
    rising *= (s + 2 * j - 1);
    rising *= (s + 2 * j);
    log_deriv += 1L / (sr + (2 * j - 1));
    log_deriv += 1L / (sr + (2 * j));
    rising_shifted *= sr + half + (2 * j - 1);
    rising_shifted *= sr + half + (2 * j);
    wfac *= w_inv2;
    wfac_shifted *= w_inv2;
    fact *= (2 * j + 1);
    fact *= (2 * j + 2);
    tp_pow *= two_pi_sq;
  }
}

Real zeta_prime_even(long s, const Precision& p) {
  if (s < 2 || s % 2 != 0) fail(ErrorCode::kDomainError, "zeta_prime_even requires even s >= 2");
  return constant_cache().get({3, s, p.bits()}, [&] { return zeta_prime_estimate(s, p).value; });
}

Estimate log_gamma_estimate(const Real& x, const Precision& p) {
  if (x.sign() <= 0) fail(ErrorCode::kDomainError, "log_gamma requires x > 0");
  const auto bits = p.bits();
  const Real tol = tolerance(p);
  const Real xv = with_bits(x, bits);
  const double shift = asymptotic_shift(p) - xv.to_double();
  const long n = shift > 0 ? static_cast<long>(std::ceil(shift)) : 0;
  check_cap(n, "log_gamma shift");

  Real prod(1L, bits);
  for (long i = 0; i < n; ++i) prod *= xv + i;
  const Real y = xv + n;
  Real acc = (y - Real(make_rational(1, 2), bits)) * log(y) - y + log_2pi(p) / 2L;
  if (n > 0) acc -= log(prod);
  const Real y_inv2 = Real(1L, bits) / (y * y);
  Real ypow = 1L / y;  // y^{1-2j}
  for (long j = 1;; ++j) {
    check_cap(j, "log_gamma");
    acc += bernoulli_even_real(j, bits) * ypow / ((2 * j) * (2 * j - 1));
    ypow *= y_inv2;
    Real next = abs(bernoulli_even_real(j + 1, bits) * ypow / ((2 * j + 2) * (2 * j + 1)));
    if (next < tol) return {acc, next};
  }
}

Real log_gamma(const Real& x, const Precision& p) { return log_gamma_estimate(x, p).value; }

Estimate polygamma_estimate(long m, const Real& x, const Precision& p) {
  if (m < 0) fail(ErrorCode::kDomainError, "polygamma order must be nonnegative");
  if (x.sign() <= 0) fail(ErrorCode::kDomainError, "polygamma requires x > 0");
  const auto bits = p.bits();
  if (m >= 1) {
    // psi^{(m)}(x) = (-1)^{m+1} m! zeta(m+1, x)
    Estimate hz = hurwitz_zeta(m + 1, x, p);
    const Real scale(Integer(factorial(m)), bits);
    Real value = hz.value * scale;
    if (m % 2 == 0) value = -value;
    return {value, hz.bound * scale};
  }
  const Real tol = tolerance(p);
  const Real xv = with_bits(x, bits);
  const double shift = asymptotic_shift(p) - xv.to_double();
  const long n = shift > 0 ? static_cast<long>(std::ceil(shift)) : 0;
  check_cap(n, "digamma shift");
  Real acc(0L, bits);
  for (long i = n - 1; i >= 0; --i) acc -= 1L / (xv + i);
  const Real y = xv + n;
  acc += log(y) - 1L / (y * 2L);
  const Real y_inv2 = Real(1L, bits) / (y * y);
  Real ypow = y_inv2;
  for (long j = 1;; ++j) {
    check_cap(j, "digamma");
    acc -= bernoulli_even_real(j, bits) * ypow / (2 * j);
    ypow *= y_inv2;
    Real next = abs(bernoulli_even_real(j + 1, bits) * ypow / (2 * j + 2));
    if (next < tol) return {acc, next};
  }
}

Real polygamma(long m, const Real& x, const Precision& p) { return polygamma_estimate(m, x, p).value; }

namespace {

// Alternating power series sum_k (-1)^k x^{e0+2k} / ((e0+2k)! (e0+2k)) with
// e0 = 1 (Si) or e0 = 2 starting at k = 0 (the Ci tail, index shifted).
// Terms grow until k ~ |x|/2, so |x| log2(e) extra bits absorb the
// cancellation; past the peak the first omitted term bounds the error.
Estimate alternating_integral_series(const Real& x, long e0, const Precision& p) {
  const double ax = std::fabs(x.to_double());
  const Precision wp = p.with_extra_guard(static_cast<int>(std::ceil(ax * 0.4343)) + 2);
  const auto bits = wp.bits();
  const Real tol = tolerance(p);
  const Real xv = with_bits(x, bits);
  const Real x2 = xv * xv;
  Real pw = pow(xv, e0);
  for (long i = 2; i <= e0; ++i) pw /= i;  // x^{e0} / e0!
  Real acc(0L, bits);
  for (long k = 0;; ++k) {
    check_cap(k, "Si/Ci series");
    const long e = e0 + 2 * k;
    Real term = pw / e;
    if (k % 2 == 0) acc += term; else acc -= term;
    pw *= x2;
    pw /= (e + 1);
    pw /= (e + 2);
    Real next = abs(pw / (e + 2));
    if (static_cast<double>(e) > ax && next < tol) {
      return {with_bits(acc, p.bits()), with_bits(next, p.bits())};
    }
  }
}

}  // namespace

Estimate sine_integral(const Real& x, const Precision& p) {
  if (x.is_zero()) return {Real(0L, p.bits()), Real(0L, p.bits())};
  return alternating_integral_series(x, 1, p);
}

Estimate cosine_integral(const Real& x, const Precision& p) {
  if (x.sign() <= 0) fail(ErrorCode::kDomainError, "Ci requires x > 0");
  // Ci(x) = gamma + log x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!)
  Estimate tail = alternating_integral_series(x, 2, p);
  Real value = euler_gamma(p) + log(with_bits(x, p.bits())) - tail.value;
  return {value, tail.bound};
}

std::pair<Real, Real> si_ci_at_2pi(const Precision& p) {
  Real si = constant_cache().get({4, 0, p.bits()}, [&] {
    return sine_integral(pi(p) * 2L, p).value;
  });
  Real ci = constant_cache().get({5, 0, p.bits()}, [&] {
    return cosine_integral(pi(p) * 2L, p).value;
  });
  return {si, ci};
}

}  // namespace fracmom
