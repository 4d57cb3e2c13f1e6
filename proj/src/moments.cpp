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

#include "fracmom/moments.hpp"

#include <cmath>
#include <functional>

#include "fracmom/bernoulli.hpp"
#include "fracmom/constants.hpp"
#include "fracmom/error.hpp"

namespace fracmom {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_k(long k) {
  if (k < 0) fail(ErrorCode::kUnsupportedArgument, "moment index k must be nonnegative");
}

void require_m(long m, const char* what) {
  if (m < 1) fail(ErrorCode::kUnsupportedArgument, std::string(what) + " requires m >= 1");
}

Rational inv(long n) { return make_rational(1, n); }
SymValue zeta(long s, const Rational& c = Rational(1)) { return SymValue::of(Atom::zeta(s), c); }
SymValue gamma(const Rational& c = Rational(1)) { return SymValue::of(Atom::euler_gamma(), c); }

}  // namespace

std::string family_name(const MomentFamily& f) {
  return std::visit(Overloaded{
                        [](const SineFamily&) { return std::string("sine"); },
                        [](const CosineFamily&) { return std::string("cosine"); },
                        [](const BernoulliFamily&) { return std::string("bernoulli"); },
                        [](const PowerFamily&) { return std::string("power"); },
                        [](const SymPowerFamily&) { return std::string("sympower"); },
                        [](const PolyFamily&) { return std::string("poly"); },
                    },
                    f);
}

std::optional<Poly> family_poly(const MomentFamily& f) {
  return std::visit(Overloaded{
                        [](const SineFamily&) -> std::optional<Poly> { return std::nullopt; },
                        [](const CosineFamily&) -> std::optional<Poly> { return std::nullopt; },
                        [](const BernoulliFamily& b) -> std::optional<Poly> { return bernoulli_poly(b.n); },
                        [](const PowerFamily& p) -> std::optional<Poly> { return Poly::monomial(p.m); },
                        [](const SymPowerFamily& s) -> std::optional<Poly> { return sympower_poly(s.m); },
                        [](const PolyFamily& p) -> std::optional<Poly> { return p.p; },
                    },
                    f);
}

void validate_family(const MomentFamily& f) {
  std::visit(Overloaded{
                 [](const SineFamily&) {},
                 [](const CosineFamily&) {},
                 [](const BernoulliFamily& b) {
                   if (b.n < 0) fail(ErrorCode::kUnsupportedArgument, "Bernoulli index n must be >= 0");
                 },
                 [](const PowerFamily& p) { require_m(p.m, "power family"); },
                 [](const SymPowerFamily& s) { require_m(s.m, "sympower family"); },
                 [](const PolyFamily&) {},
             },
             f);
}

const char* source_name(Source s) { return s == Source::kTheorem ? "theorem" : "engine"; }

SymValue moment_poly_generic(const Poly& p, long k) {
  require_k(k);
  SymValue acc;
  Poly d = p;
  for (long j = 0; j <= k; ++j) {
    const Rational at0 = d.evaluate(Rational(0));
    const Rational at1 = d.evaluate(Rational(1));
    if (at0 != 0 || at1 != 0) {
      const SymValue alpha = alpha_seq(k - j);
      SymValue term = alpha * at0 - (alpha - Rational(1)) * at1;
      acc += term * Rational(factorial(k - j));
    }
    d = d.derivative();
  }
  const BernoulliBasisPoly top = poly_to_bernoulli(d.derivative());
  for (long i = 0; i <= top.degree(); ++i) {
    const Rational c = top.coeff(i);
    if (c != 0) acc += loggamma_integral_bernoulli(i) * c;
  }
  acc *= Rational(1) / Rational(factorial(k + 1));
  return acc;
}

namespace {

// j-th derivative of sin(2 pi x) (kind = sine) or cos(2 pi x) at x = 0 and
// x = 1 (the two coincide).
SymValue trig_boundary(TrigKind kind, long j) {
  const bool odd = (j % 2 != 0);
  if (kind == TrigKind::kSine) {
    if (!odd) return SymValue();
    return two_pi_pow(j) * Rational(neg1_pow((j - 1) / 2));
  }
  if (odd) return SymValue();
  return two_pi_pow(j) * Rational(neg1_pow(j / 2));
}

}  // namespace

SymValue moment_trig_engine(TrigKind kind, long k) {
  require_k(k);
  SymValue acc;
  for (long j = 0; j <= k; ++j) {
    // f^{(j)}(0) alpha - f^{(j)}(1) (alpha - 1) = f^{(j)}(0) here.
    acc += trig_boundary(kind, j) * Rational(factorial(k - j));
  }
  const long top = k + 2;
  const long i = top / 2;
  SymValue scale = two_pi_pow(top);
  TrigKind integrand;
  if (top % 2 == 0) {
    scale *= Rational(neg1_pow(i));
    integrand = kind;
  } else if (kind == TrigKind::kSine) {
    scale *= Rational(neg1_pow(i));
    integrand = TrigKind::kCosine;
  } else {
    scale *= Rational(neg1_pow(i + 1));
    integrand = TrigKind::kSine;
  }
  acc += scale * loggamma_integral_trig(integrand);
  acc *= Rational(1) / Rational(factorial(k + 1));
  return acc;
}

std::string trig_regime(long k) { return (k % 2 == 0) ? "k=2n" : "k=2n+1"; }

std::string bernoulli_regime(long n, long k) {
  if (n == 0) return "n=0";
  if (k >= n) return "k>=n";
  if (k == n - 1) return "k=n-1";
  return "k<=n-2";
}

std::string power_regime(long m, long k) {
  if (k >= m) return "k>=m";
  if (k == m - 1) return "k=m-1";
  return "k<=m-2";
}

std::string sympower_regime(long m, long k) {
  if (k >= 2 * m) return "k>=2m";
  if (k == 2 * m - 1) return "k=2m-1";
  if (k >= m) return "m<=k<=2m-2";
  return "k<=m-1";
}

namespace printed {

namespace {

// sum_j (-1)^j (2j+1)! / (2 pi)^{2j+2} for j = 0..last.
SymValue odd_factorial_sum(long last) {
  SymValue s;
  for (long j = 0; j <= last; ++j) {
    s += two_pi_pow(-(2 * j + 2)) * Rational(neg1_pow(j) * factorial(2 * j + 1));
  }
  return s;
}

// sum_j (-1)^j (2j)! / (2 pi)^{2j+1} for j = 0..last.
SymValue even_factorial_sum(long last) {
  SymValue s;
  for (long j = 0; j <= last; ++j) {
    s += two_pi_pow(-(2 * j + 1)) * Rational(neg1_pow(j) * factorial(2 * j));
  }
  return s;
}

SymValue with_ci(SymValue s) { return s + SymValue::of(Atom::ci_2pi()); }

SymValue with_si(SymValue s) {
  s += SymValue::of(Atom::pi(1), make_rational(-1, 2));
  return s + SymValue::of(Atom::si_2pi());
}

}  // namespace

SymValue trig(TrigKind kind, long k) {
  require_k(k);
  const long n = k / 2;
  if (k % 2 == 0) {
    const Rational pre = Rational(1) / Rational(factorial(2 * n + 1));
    if (kind == TrigKind::kSine) {
      return two_pi_pow(2 * n + 1) * (pre * neg1_pow(n + 1)) * with_ci(odd_factorial_sum(n - 1));
    }
    return two_pi_pow(2 * n + 1) * (pre * neg1_pow(n)) * with_si(even_factorial_sum(n));
  }
  const Rational pre = Rational(neg1_pow(n)) / Rational(factorial(2 * n + 2));
  if (kind == TrigKind::kSine) {
    return two_pi_pow(2 * n + 2) * pre * with_si(even_factorial_sum(n));
  }
  return two_pi_pow(2 * n + 2) * pre * with_ci(odd_factorial_sum(n));
}

SymValue bernoulli(long n, long k) {
  require_k(k);
  if (n < 1) fail(ErrorCode::kUnsupportedArgument, "printed Bernoulli moments need n >= 1");
  if (k >= n) {
    Rational bsum(0);
    for (long j = 0; j <= n / 2; ++j) bsum += binom(k - n + 2 * j, 2 * j) * bernoulli_number(2 * j);
    SymValue inner = SymValue::constant(bsum + Rational(k - n + 1) / 2);
    inner -= zeta(k - n + 2, Rational(k - n + 1));
    return inner * (Rational(1) / (Rational(k + 1) * binom(k, n)));
  }
  if (k == n - 1) {
    Rational bsum(0);
    for (long j = 1; j <= n / 2; ++j) bsum += bernoulli_number(2 * j) / Rational(2 * j);
    return SymValue::constant(bsum + make_rational(1, 2)) - gamma();
  }
  Rational bsum(0);
  for (long j = (n - k + 1) / 2; j <= n / 2; ++j) {
    bsum += bernoulli_number(2 * j) / binom(2 * j, k - n + 2 * j);
  }
  SymValue inner = SymValue::constant(bsum) + b_seq(n - k - 2) * Rational((n - k) * (n - k - 1));
  return inner * (binom(n, k) / Rational(k + 1));
}

SymValue power(long m, long k) {
  require_k(k);
  require_m(m, "power moments");
  if (k >= m) {
    SymValue s;
    for (long j = k - m + 1; j <= k; ++j) s += zeta(j + 1, binom(j, k - m));
    s *= Rational(-1) / (Rational(k + 1) * binom(k, m));
    return s + inv(k + 1 - m);
  }
  if (k == m - 1) {
    SymValue s = SymValue::constant(harmonic(m)) - gamma();
    for (long j = 1; j <= m - 1; ++j) s -= zeta(j + 1, inv(j + 1));
    return s;
  }
  // The printed binomial C(m-k+p, p) is read with p as the summation index.
  SymValue inner = gamma();
  for (long j = 1; j <= k; ++j) inner += zeta(j + 1, Rational(1) / binom(m - k + j, j));
  SymValue s = SymValue::constant(inv(k + 1 - m)) - inner * (binom(m, k) / Rational(k + 1));
  SymValue asum;
  for (long j = 0; j <= m - k - 2; ++j) asum += a_seq(j) * binom(m - k - 1, j);
  return s + asum * binom(m, k + 1);
}

namespace {

// sum_{j=[m/2]+1}^{m} C(m,2j-m-1) C(2j,k+2) b_{2j-k-2} / j, times (-1)^m (k+2).
SymValue sympower_log_gamma_part(long m, long k) {
  SymValue s;
  for (long j = m / 2 + 1; j <= m; ++j) {
    const Rational c = binom(m, 2 * j - m - 1) * binom(2 * j, k + 2) / Rational(j);
    if (c == 0) continue;  // also keeps b_n away from negative n
    s += b_seq(2 * j - k - 2) * c;
  }
  return s * Rational(neg1_pow(m) * (k + 2));
}

}  // namespace

SymValue sympower(long m, long k) {
  require_k(k);
  require_m(m, "sympower moments");
  const Rational sg(neg1_pow(m));
  if (k >= 2 * m) {
    SymValue s;
    for (long j = m / 2; j <= m - 1; ++j) {
      s += zeta(k - 2 * j, binom(m, 2 * j + 1 - m) / binom(k, 2 * j + 1));
    }
    s *= make_rational(-2, k + 1);
    s += Rational(1) / (Rational(k + 1 - m) * binom(k - m, m));
    return s * sg;
  }
  if (k == 2 * m - 1) {
    SymValue s = SymValue::constant(harmonic(2 * m) - harmonic(m)) - gamma();
    SymValue z;
    for (long j = m / 2; j <= m - 2; ++j) {
      z += zeta(2 * m - 1 - 2 * j, binom(m, 2 * j + 1 - m) / binom(2 * m - 1, 2 * j + 1));
    }
    s -= z * inv(m);
    return s * sg;
  }
  SymValue tail = sympower_log_gamma_part(m, k);
  if (k <= m - 1) return tail;
  SymValue inner = SymValue::constant(p_sum(m, k));
  for (long j = m / 2; j <= k / 2 - 1; ++j) {
    inner -= zeta(k - 2 * j, Rational(2) * binom(m, 2 * j + 1 - m) / binom(k, 2 * j + 1));
  }
  const bool delta = ((k + 1) % 2 == 0);  // (k+1)/2 is an integer
  if (delta) inner -= gamma(Rational(2) * binom(m, 2 * m - k));
  return inner * (sg / Rational(k + 1)) + tail;
}

}  // namespace printed

MomentResult reconcile(const MomentFamily& f, long k, std::string regime, SymValue printed_value,
                       const SymValue& engine_value) {
  MomentResult r{f, k, std::move(printed_value), std::move(regime), Source::kTheorem, std::nullopt};
  if (r.value == engine_value) return r;
  const Precision p(30);
  const Real a = eval_sym(r.value, p);
  const Real b = eval_sym(engine_value, p);
  if (abs(a - b) < Real::pow10(-20, p.bits())) return r;
  r.discrepancy = Discrepancy{r.regime, r.value, engine_value, a.to_scientific(25), b.to_scientific(25)};
  r.value = engine_value;
  r.source = Source::kEngine;
  return r;
}

MomentResult moment_trig(TrigKind kind, long k) {
  const MomentFamily f = (kind == TrigKind::kSine) ? MomentFamily{SineFamily{}} : MomentFamily{CosineFamily{}};
  return reconcile(f, k, trig_regime(k), printed::trig(kind, k), moment_trig_engine(kind, k));
}

MomentResult moment_bernoulli(long n, long k) {
  require_k(k);
  const MomentFamily f = BernoulliFamily{n};
  validate_family(f);
  const SymValue engine = moment_poly_generic(bernoulli_poly(n), k);
  if (n == 0) return MomentResult{f, k, engine, bernoulli_regime(n, k), Source::kEngine, std::nullopt};
  return reconcile(f, k, bernoulli_regime(n, k), printed::bernoulli(n, k), engine);
}

MomentResult moment_power(long m, long k) {
  require_k(k);
  const MomentFamily f = PowerFamily{m};
  validate_family(f);
  return reconcile(f, k, power_regime(m, k), printed::power(m, k),
                   moment_poly_generic(Poly::monomial(m), k));
}

MomentResult moment_sympower(long m, long k) {
  require_k(k);
  const MomentFamily f = SymPowerFamily{m};
  validate_family(f);
  return reconcile(f, k, sympower_regime(m, k), printed::sympower(m, k),
                   moment_poly_generic(sympower_poly(m), k));
}

MomentResult compute_moment(const MomentFamily& f, long k) {
  require_k(k);
  validate_family(f);
  return std::visit(Overloaded{
                        [&](const SineFamily&) { return moment_trig(TrigKind::kSine, k); },
                        [&](const CosineFamily&) { return moment_trig(TrigKind::kCosine, k); },
                        [&](const BernoulliFamily& b) { return moment_bernoulli(b.n, k); },
                        [&](const PowerFamily& p) { return moment_power(p.m, k); },
                        [&](const SymPowerFamily& s) { return moment_sympower(s.m, k); },
                        [&](const PolyFamily& p) {
                          return MomentResult{f, k, moment_poly_generic(p.p, k), "engine",
                                              Source::kEngine, std::nullopt};
                        },
                    },
                    f);
}

SymValue engine_moment(const MomentFamily& f, long k) {
  require_k(k);
  validate_family(f);
  if (std::holds_alternative<SineFamily>(f)) return moment_trig_engine(TrigKind::kSine, k);
  if (std::holds_alternative<CosineFamily>(f)) return moment_trig_engine(TrigKind::kCosine, k);
  return moment_poly_generic(*family_poly(f), k);
}

namespace {

// sum_{j>=1} w_j (zeta(s0 + j) - 1) with w_j > 0. zeta(s) - 1 < 2^-s (s+1)/(s-1),
// and past index J the bounding terms shrink at least by ratio_bound(J) < 1,
// which gives a geometric tail estimate.
Estimate zeta_minus_one_series(long s0, const std::function<Rational(long)>& weight,
                               const std::function<double(long)>& ratio_bound, const Precision& p) {
  const auto bits = p.bits();
  const Real tol = Real::pow10(-(p.digits + 2), bits);
  const Real two(2L, bits);
  Real sum(0L, bits);
  Real err(0L, bits);
  for (long j = 1;; ++j) {
    if (j > series_term_cap()) fail(ErrorCode::kPrecisionUnachievable, "zeta series: term cap exceeded");
    const long s = s0 + j;
    const Real w(weight(j), bits);
    const Estimate zm1 = hurwitz_zeta(s, two, p);
    sum += w * zm1.value;
    err += w * zm1.bound;
    const double q = ratio_bound(j + 1);
    if (q < 1.0) {
      const long sn = s + 1;
      Real next = Real(weight(j + 1), bits) * pow(two, -sn) * (sn + 1) / (sn - 1);
      Real tail = next / Real(1.0 - q, bits);
      if (tail < tol) return {sum, err + tail};
    }
  }
}

}  // namespace

Estimate furdui_series(long m, long k, const Precision& p) {
  require_m(m, "furdui_series");
  require_k(k);
  auto weight = [=](long j) -> Rational { return Rational(factorial(k + j)) / Rational(factorial(m + j)); };
  auto ratio = [=](long j) {
    const double growth = static_cast<double>(k + j + 1) / static_cast<double>(m + j + 1);
    return 0.5 * std::max(1.0, growth);
  };
  Estimate e = zeta_minus_one_series(k + 1, weight, ratio, p);
  const Rational scale = Rational(factorial(m)) / Rational(factorial(k + 1));
  const Real sc(scale, p.bits());
  return {e.value * sc, e.bound * sc};
}

SymValue zeta_sum_closed(long m, ZetaSumCase c, long k) {
  switch (c) {
    case ZetaSumCase::kKEqMMinus2: {
      if (m < 2) fail(ErrorCode::kUnsupportedArgument, "k = m-2 case requires m >= 2");
      SymValue v = SymValue::constant(-inv(m));
      v += SymValue::of(Atom::log_2pi(), make_rational(1, 2));
      v -= gamma(make_rational(1, 2));
      for (long n = 2; n <= m - 1; ++n) v -= zeta(n, inv(n * (n + 1)));
      return v;
    }
    case ZetaSumCase::kKEqMMinus3: {
      if (m < 3) fail(ErrorCode::kUnsupportedArgument, "k = m-3 case requires m >= 3");
      // zeta'(2)/(2 pi^2) = (1/12) zeta'(2)/zeta(2) since zeta(2) = pi^2/6.
      SymValue v = SymValue::constant(-inv(2 * m * (m - 1)));
      v += SymValue::of(Atom::zeta_prime_ratio(2), make_rational(1, 12));
      v += SymValue::of(Atom::log_2pi(), make_rational(1, 6));
      v -= gamma(make_rational(1, 4));
      for (long n = 2; n <= m - 2; ++n) v -= zeta(n, inv(n * (n + 1) * (n + 2)));
      return v;
    }
    case ZetaSumCase::kGeneral:
      return moment_power(m, k).value;
  }
  fail(ErrorCode::kInvalidArgument, "unknown zeta sum case");
}

Estimate zeta_sum_series(long m, ZetaSumCase c, long k, const Precision& p) {
  switch (c) {
    case ZetaSumCase::kKEqMMinus2: {
      if (m < 2) fail(ErrorCode::kUnsupportedArgument, "k = m-2 case requires m >= 2");
      auto w = [=](long j) -> Rational { return Rational(1) / Rational((m + j) * (m + j - 1)); };
      return zeta_minus_one_series(m - 1, w, [](long) { return 0.5; }, p);
    }
    case ZetaSumCase::kKEqMMinus3: {
      if (m < 3) fail(ErrorCode::kUnsupportedArgument, "k = m-3 case requires m >= 3");
      auto w = [=](long j) -> Rational { return Rational(1) / Rational((m + j) * (m + j - 1) * (m + j - 2)); };
      return zeta_minus_one_series(m - 2, w, [](long) { return 0.5; }, p);
    }
    case ZetaSumCase::kGeneral:
      return furdui_series(m, k, p);
  }
  fail(ErrorCode::kInvalidArgument, "unknown zeta sum case");
}

SymValue hermite_moment(long n, long k) {
  if (n < 1) fail(ErrorCode::kUnsupportedArgument, "Hermite moment requires n >= 1");
  require_k(k);
  if (k == 0) return (SymValue::constant(make_rational(n + 1, 2)) - gamma()) * Rational(n);
  SymValue v = SymValue::constant(inv(k) + make_rational(n - 1, 2 * (k + 1)));
  v -= zeta(k + 1, inv(k + 1));
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k + 1));
  return v * Rational(scale);
}

SymValue double_moment(long m, long k) {
  if (m < 1 || k < 1) fail(ErrorCode::kUnsupportedArgument, "double moment requires m, k >= 1");
  return (moment_power(m, k).value + moment_power(k, m).value) * make_rational(1, 2);
}

Rational p_sum(long m, long k) {
  require_m(m, "p_sum");
  if (k < m) fail(ErrorCode::kUnsupportedArgument, "p_sum requires k >= m");
  Rational s(0);
  for (long j = m; j <= k; ++j) s += binom(m, j - m) / binom(k, j);
  return s;
}

}  // namespace fracmom
