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

#include "fracmom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "fracmom/constants.hpp"
#include "fracmom/error.hpp"
#include "fracmom/quadrature.hpp"

namespace fracmom {

namespace {

struct FamilyEvaluator {
  bool trig = false;
  bool sine = false;
  std::vector<Rational> coeffs;  // monomial coefficients for polynomial families

  explicit FamilyEvaluator(const MomentFamily& f) {
    validate_family(f);
    if (std::holds_alternative<SineFamily>(f) || std::holds_alternative<CosineFamily>(f)) {
      trig = true;
      sine = std::holds_alternative<SineFamily>(f);
    } else {
      coeffs = family_poly(f)->coeffs();
    }
  }

  Real operator()(const Real& s) const {
    const auto bits = s.bits();
    if (trig) {
      const Real arg = Real::pi(bits) * 2L * s;
      return sine ? sin(arg) : cos(arg);
    }
    Real acc(0L, bits);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc *= s;
      acc += Real(*it, bits);
    }
    return acc;
  }

  // log10 of an upper bound for |f| on the ellipse around [0,1].
  double log10_ellipse(double rho) const {
    const EllipseAxes ax = ellipse_axes(rho);
    if (trig) return (2.0 * M_PI * ax.minor) / std::log(10.0) + 0.0;  // cosh y < e^y
    const double r = 0.5 + ax.major;
    double s = 0;
    double rp = 1;
    for (const auto& c : coeffs) {
      s += std::fabs(c.get_d()) * rp;
      rp *= r;
    }
    return s > 0 ? std::log10(s) + 1e-9 : -300.0;
  }

  double sup_norm() const {
    if (trig) return 1.0;
    double s = 0;
    for (const auto& c : coeffs) s += std::fabs(c.get_d());
    return s * (1 + 1e-12);
  }

  // mu_t = int_0^1 f(s) s^t ds, exact for polynomials.
  Rational poly_moment(long t) const {
    Rational s(0);
    for (size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] / Rational(static_cast<long>(i) + t + 1);
    return s;
  }
};

Real pow10_upper(double log10_value, mpfr_prec_t bits) {
  if (!std::isfinite(log10_value)) fail(ErrorCode::kPrecisionUnachievable, "non-finite error bound");
  return Real::pow10(static_cast<long>(std::ceil(log10_value + 1e-9)), bits);
}

// Values of f at the nodes of each rule, reused across intervals.
class NodeValues {
 public:
  NodeValues(const FamilyEvaluator& f, mpfr_prec_t bits) : f_(f), bits_(bits) {}

  const std::vector<Real>& at(int n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    const GaussLegendreRule& rule = gauss_legendre(n, bits_);
    std::vector<Real> v;
    v.reserve(rule.nodes.size());
    for (const auto& x : rule.nodes) v.push_back(f_(x));
    return cache_.emplace(n, std::move(v)).first->second;
  }

 private:
  const FamilyEvaluator& f_;
  mpfr_prec_t bits_;
  std::map<int, std::vector<Real>> cache_;
};

double roundoff_log10(mpfr_prec_t bits, double evaluations) {
  return -static_cast<double>(bits - 12) * std::log10(2.0) + std::log10(std::max(evaluations, 1.0));
}

}  // namespace

const char* oracle_method_name(OracleMethod m) {
  return m == OracleMethod::kIntervalSeries ? "interval-series" : "polygamma-kernel";
}

Real eval_family(const MomentFamily& f, const Real& s) { return FamilyEvaluator(f)(s); }

double family_sup_norm(const MomentFamily& f) { return FamilyEvaluator(f).sup_norm(); }

OracleResult oracle_interval_series(const MomentFamily& f, long k, const Precision& p, long intervals) {
  if (k < 0) fail(ErrorCode::kUnsupportedArgument, "moment index k must be nonnegative");
  if (intervals < 1) fail(ErrorCode::kInvalidArgument, "interval count must be positive");
  const FamilyEvaluator fe(f);
  const auto bits = p.bits();
  const double log10_target = -static_cast<double>(p.working_digits());
  const double log10_cell = log10_target - std::log10(static_cast<double>(intervals)) - 1.0;
  const long kp2 = k + 2;

  NodeValues fvals(fe, bits);
  Real sum(0L, bits);
  Real err(0L, bits);
  double evaluations = 0;
  int max_order = 0;
  for (long j = 1; j <= intervals; ++j) {
    auto bound = [&](double rho) {
      const double d = static_cast<double>(j) + 0.5 - ellipse_axes(rho).major;
      if (d <= 0) return std::numeric_limits<double>::infinity();
      return fe.log10_ellipse(rho) - static_cast<double>(kp2) * std::log10(d);
    };
    const QuadraturePlan plan = plan_gauss_legendre(bound, log10_cell);
    const GaussLegendreRule& rule = gauss_legendre(plan.nodes, bits);
    const std::vector<Real>& fv = fvals.at(plan.nodes);
    Real cell(0L, bits);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      cell += rule.weights[i] * fv[i] * pow(rule.nodes[i] + j, -kp2);
    }
    sum += cell;
    err += pow10_upper(plan.log10_error, bits);
    evaluations += plan.nodes;
    max_order = std::max(max_order, plan.nodes);
  }

  // Tail over j > J.
  const Real a(intervals + 1, bits);
  const Real norm(fe.sup_norm(), bits);
  const Real tail_tol = Real::pow10(static_cast<long>(std::floor(log10_target)) - 1, bits);
  long t = 0;
  for (;; ++t) {
    if (t > 4000) fail(ErrorCode::kPrecisionUnachievable, "interval-series tail needs too many terms");
    // Remainder after terms 0..t-1.
    const double q = static_cast<double>(k + 2 + t) / (static_cast<double>(t + 1) * static_cast<double>(intervals + 1));
    if (q < 0.5) {
      const Estimate zr = hurwitz_zeta(kp2 + t, a, p);
      Real rem = norm * Real(binom(k + 1 + t, t), bits) * (zr.value + zr.bound) * 2L;
      if (rem < tail_tol) {
        err += rem;
        break;
      }
    }
    Real mu(bits);
    Real mu_err(0L, bits);
    if (fe.trig) {
      const double lt = static_cast<double>(t);
      auto mb = [&](double rho) { return fe.log10_ellipse(rho) + lt * std::log10(0.5 + ellipse_axes(rho).major); };
      const QuadraturePlan plan = plan_gauss_legendre(mb, log10_target - 2.0);
      const GaussLegendreRule& rule = gauss_legendre(plan.nodes, bits);
      const std::vector<Real>& fv = fvals.at(plan.nodes);
      mu = Real(0L, bits);
      for (size_t i = 0; i < rule.nodes.size(); ++i) mu += rule.weights[i] * fv[i] * pow(rule.nodes[i], t);
      mu_err = pow10_upper(plan.log10_error, bits);
      evaluations += plan.nodes;
    } else {
      mu = Real(fe.poly_moment(t), bits);
    }
    const Estimate z = hurwitz_zeta(kp2 + t, a, p);
    const Real c(binom(k + 1 + t, t) * neg1_pow(t), bits);
    sum += c * mu * z.value;
    err += abs(c) * (abs(mu) * z.bound + mu_err * (z.value + z.bound));
  }
  err += pow10_upper(roundoff_log10(bits, evaluations + static_cast<double>(t)), bits);
  return OracleResult{sum, err, OracleMethod::kIntervalSeries,
                      OracleParams{intervals, max_order, t, p.digits}};
}

OracleResult oracle_polygamma(const MomentFamily& f, long k, const Precision& p) {
  if (k < 0) fail(ErrorCode::kUnsupportedArgument, "moment index k must be nonnegative");
  const FamilyEvaluator fe(f);
  const auto bits = p.bits();
  const double log10_target = -static_cast<double>(p.working_digits()) - 1.0;
  const long kp2 = k + 2;
  // |zeta(k+2, z+1)| <= d^{-(k+2)} + d^{-(k+1)}/(k+1) for Re z + 1 >= d > 0.
  auto bound = [&](double rho) {
    const double d = 1.5 - ellipse_axes(rho).major;
    if (d <= 0) return std::numeric_limits<double>::infinity();
    const double kernel = std::pow(d, -static_cast<double>(kp2)) + std::pow(d, -static_cast<double>(k + 1)) / static_cast<double>(k + 1);
    return fe.log10_ellipse(rho) + std::log10(kernel);
  };
  const QuadraturePlan plan = plan_gauss_legendre(bound, log10_target);
  const GaussLegendreRule& rule = gauss_legendre(plan.nodes, bits);
  Real sum(0L, bits);
  Real err = pow10_upper(plan.log10_error, bits);
  const Real fact(factorial(k + 1), bits);
  const int sg = neg1_pow(k);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const Real s1 = rule.nodes[i] + 1L;
    const Estimate psi = polygamma_estimate(k + 1, s1, p);
    // (-1)^k/(k+1)! psi^{(k+1)}(s+1) = zeta(k+2, s+1)
    const Real kernel = psi.value * sg / fact;
    const Real fv = fe(rule.nodes[i]);
    sum += rule.weights[i] * fv * kernel;
    err += rule.weights[i] * abs(fv) * psi.bound / fact;
  }
  err += pow10_upper(roundoff_log10(bits, plan.nodes), bits);
  return OracleResult{sum, err, OracleMethod::kPolygamma, OracleParams{0, plan.nodes, 0, p.digits}};
}

OracleResult run_oracle(OracleMethod m, const MomentFamily& f, long k, const Precision& p) {
  return m == OracleMethod::kIntervalSeries ? oracle_interval_series(f, k, p) : oracle_polygamma(f, k, p);
}

void VerificationReport::append(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

long VerificationReport::failures() const {
  return static_cast<long>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

long VerificationReport::unregistered_failures() const {
  return static_cast<long>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass && !r.known; }));
}

namespace {

std::string family_params(const MomentFamily& f, long k) {
  std::string s = family_name(f);
  if (auto* b = std::get_if<BernoulliFamily>(&f)) s += " n=" + std::to_string(b->n);
  if (auto* pw = std::get_if<PowerFamily>(&f)) s += " m=" + std::to_string(pw->m);
  if (auto* sp = std::get_if<SymPowerFamily>(&f)) s += " m=" + std::to_string(sp->m);
  if (auto* pf = std::get_if<PolyFamily>(&f)) s += " p=" + pf->p.to_string();
  return s + " k=" + std::to_string(k);
}

}  // namespace

VerificationReport cross_check(const MomentFamily& f, long k, const Precision& p, const Real& tol) {
  VerificationReport rep;
  const std::string params = family_params(f, k);
  const MomentResult mr = compute_moment(f, k);
  if (mr.discrepancy) {
    rep.add(CheckRecord{"moments", "printed:" + family_name(f) + ":" + mr.regime, params, false, false,
                        "printed " + mr.discrepancy->printed_value + " vs engine " + mr.discrepancy->engine_value});
  }
  std::vector<std::pair<std::string, Real>> values;
  values.emplace_back("theorem", eval_sym(mr.value, p));
  values.emplace_back("engine", eval_sym(engine_moment(f, k), p));
  const OracleResult o1 = oracle_interval_series(f, k, p);
  const OracleResult o2 = oracle_polygamma(f, k, p);
  values.emplace_back("interval-series", o1.value);
  values.emplace_back("polygamma-kernel", o2.value);

  const Real bound_sum = o1.error_bound + o2.error_bound;
  CheckRecord rec{"moments", "cross:" + family_name(f) + ":" + mr.regime, params, true, false, ""};
  if (bound_sum > tol) {
    rec.pass = false;
    rec.detail = "tolerance below combined oracle bound " + bound_sum.to_scientific(3);
  }
  Real worst(0L, p.bits());
  std::string worst_pair;
  for (size_t i = 0; i < values.size(); ++i) {
    for (size_t j = i + 1; j < values.size(); ++j) {
      const Real d = abs(values[i].second - values[j].second);
      if (d > worst) {
        worst = d;
        worst_pair = values[i].first + "/" + values[j].first;
      }
    }
  }
  if (worst > tol) {
    rec.pass = false;
    rec.detail = "max difference " + worst.to_scientific(3) + " (" + worst_pair + ")";
  }
  if (rec.pass) {
    rec.detail = "value " + values[0].second.to_scientific(18) + ", max difference " + worst.to_scientific(3) +
                 ", oracle bounds " + o1.error_bound.to_scientific(2) + " / " + o2.error_bound.to_scientific(2);
  }
  rep.add(std::move(rec));
  return rep;
}

double double_moment_quadrature(long m, long k) {
  if (m < 1 || k < 1) fail(ErrorCode::kUnsupportedArgument, "double moment requires m, k >= 1");
  // 16-point Gauss-Legendre on [0,1] in double precision.
  const GaussLegendreRule& rule = gauss_legendre(16, 64);
  std::vector<double> xs, ws;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    xs.push_back(rule.nodes[i].to_double());
    ws.push_back(rule.weights[i].to_double());
  }
  auto frac = [](double v) { return v - std::floor(v); };
  auto gl = [&](double a, double b, auto&& g) {
    double s = 0;
    for (size_t i = 0; i < xs.size(); ++i) s += ws[i] * g(a + (b - a) * xs[i]);
    return s * (b - a);
  };
  const long pieces = 4000;
  // Inner integral over x in (0, y] split at x = y/n where {y/x} jumps; the
  // part below y/pieces is dropped (it is O(pieces^{-m-1})).
  auto inner_below = [&](double y, long a, long b) {
    double s = 0;
    for (long n = 1; n < pieces; ++n) {
      const double lo = y / static_cast<double>(n + 1);
      const double hi = y / static_cast<double>(n);
      s += gl(lo, hi, [&](double x) { return std::pow(x / y, a) * std::pow(frac(y / x), b); });
    }
    return s;
  };
  // Region x < y contributes with {x/y} = x/y; region x > y mirrors it with
  // the exponents exchanged.
  auto outer = [&](long a, long b) {
    return gl(0.0, 1.0, [&](double y) { return inner_below(y, a, b); });
  };
  return outer(m, k) + outer(k, m);
}

OracleResult hermite_moment_oracle(long n, long k, const Precision& p) {
  if (n < 1) fail(ErrorCode::kUnsupportedArgument, "Hermite moment requires n >= 1");
  const OracleResult base = oracle_interval_series(PowerFamily{1}, k, p);
  const auto bits = p.bits();
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k + 1));
  const Real sc(scale, bits);
  const Real shift(make_rational(n - 1, 2 * (k + 1)), bits);
  return OracleResult{sc * (base.value + shift), sc * base.error_bound, base.method, base.params};
}

Rational hermite_identity_defect(long n, const std::vector<Rational>& xs) {
  if (n < 1) fail(ErrorCode::kUnsupportedArgument, "Hermite identity requires n >= 1");
  auto frac = [](const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(q - Rational(fl));
  };
  Rational worst(0);
  for (const auto& x : xs) {
    Rational lhs(0);
    for (long i = 0; i < n; ++i) lhs += frac(x + make_rational(i, n));
    Rational d = lhs - frac(Rational(n) * x) - make_rational(n - 1, 2);
    if (d < 0) d = -d;
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace fracmom
