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

#include "fracmom/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

#include "fracmom/error.hpp"

namespace fracmom {

namespace {

// Newton iteration for the roots of P_n on [-1,1]; only the positive half is
// computed, the rest follows by symmetry.
std::unique_ptr<GaussLegendreRule> build_rule(int n, mpfr_prec_t bits) {
  const mpfr_prec_t wb = bits + 32;
  const Real pi = Real::pi(wb);
  const Real eps = Real::pow10(-static_cast<long>(static_cast<double>(wb) * 0.30103) + 2, wb);
  std::vector<Real> x(static_cast<size_t>(n), Real(wb));
  std::vector<Real> w(static_cast<size_t>(n), Real(wb));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real z = cos(pi * Real(4L * i + 3, wb) / Real(4L * n + 2, wb));
    Real dp(wb);
    for (int iter = 0; iter < 100; ++iter) {
      Real p0(1L, wb);
      Real p1 = z;
      for (int j = 2; j <= n; ++j) {
        Real p2 = (z * p1 * (2L * j - 1) - p0 * (j - 1)) / j;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      // P_n'(z) = n (z P_n - P_{n-1}) / (z^2 - 1)
      dp = (z * p1 - p0) * n / (z * z - 1L);
      Real step = p1 / dp;
      z -= step;
      if (abs(step) < eps) {
        if (iter > 0) break;
      }
    }
    // Recompute the derivative at the converged root.
    Real p0(1L, wb);
    Real p1 = z;
    for (int j = 2; j <= n; ++j) {
      Real p2 = (z * p1 * (2L * j - 1) - p0 * (j - 1)) / j;
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    dp = (z * p1 - p0) * n / (z * z - 1L);
    const Real weight = Real(2L, wb) / ((1L - z * z) * dp * dp);
    x[static_cast<size_t>(i)] = -z;
    x[static_cast<size_t>(n - 1 - i)] = z;
    w[static_cast<size_t>(i)] = weight;
    w[static_cast<size_t>(n - 1 - i)] = weight;
  }
  if (n % 2 == 1) x[static_cast<size_t>(n / 2)] = Real(0L, wb);
  auto rule = std::make_unique<GaussLegendreRule>();
  rule->nodes.reserve(static_cast<size_t>(n));
  rule->weights.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    rule->nodes.push_back(with_bits((x[static_cast<size_t>(i)] + 1L) / 2L, bits));
    rule->weights.push_back(with_bits(w[static_cast<size_t>(i)] / 2L, bits));
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n, mpfr_prec_t bits) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "Gauss-Legendre rule needs n >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, mpfr_prec_t>, std::unique_ptr<GaussLegendreRule>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, bits});
    if (it != cache.end()) return *it->second;
  }
  auto rule = build_rule(n, bits);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, bits}];
  if (!slot) slot = std::move(rule);
  return *slot;
}

const std::vector<int>& gauss_legendre_sizes() {
  static const std::vector<int> sizes = {4, 6, 8, 12, 16, 20, 24, 32, 40, 48, 64, 80, 96, 128, 160, 192, 256, 320, 400};
  return sizes;
}

EllipseAxes ellipse_axes(double rho) { return {(rho + 1.0 / rho) / 4.0, (rho - 1.0 / rho) / 4.0}; }

QuadraturePlan plan_gauss_legendre(const EllipseLog10Bound& bound, double log10_tol) {
  static const double kRhos[] = {1.5, 2.0, 3.0, 4.0, 5.0, 8.0, 12.0};
  QuadraturePlan best;
  best.nodes = std::numeric_limits<int>::max();
  for (double rho : kRhos) {
    const double lm = bound(rho);
    if (!std::isfinite(lm)) continue;
    const double base = std::log10(64.0 / 15.0) + lm - std::log10(rho * rho - 1.0) - std::log10(2.0);
    const double per_node = 2.0 * std::log10(rho);
    for (int n : gauss_legendre_sizes()) {
      const double err = base - per_node * n;
      if (err <= log10_tol) {
        if (n < best.nodes) best = QuadraturePlan{n, rho, err};
        break;
      }
    }
  }
  if (best.nodes == std::numeric_limits<int>::max()) {
    fail(ErrorCode::kPrecisionUnachievable, "no Gauss-Legendre rule reaches the requested tolerance");
  }
  return best;
}

Real integrate(const GaussLegendreRule& rule, const std::function<Real(const Real&)>& g,
               mpfr_prec_t bits) {
  Real sum(0L, bits);
  for (size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * g(rule.nodes[i]);
  return sum;
}

TanhSinhResult tanh_sinh(const std::function<Real(const Real& x, const Real& one_minus_x)>& g,
                         mpfr_prec_t bits, int max_levels) {
  // x = 1/(1 + e^{-u}), u = pi sinh t; dx/dt = pi cosh t * x (1 - x).
  const mpfr_prec_t wb = bits + 16;
  const Real pi = Real::pi(wb);
  const double digits = static_cast<double>(bits) * 0.30103;
  // Stop where the weight drops below 10^-digits: pi sinh t ~ digits ln 10.
  const double t_max = std::asinh(digits * std::log(10.0) / M_PI) + 0.5;
  const Real tiny = Real::pow10(-static_cast<long>(digits) - 5, wb);

  auto term = [&](const Real& t) -> Real {
    const Real u = pi * (exp(t) - exp(-t)) / 2L;
    const Real e = exp(-u);
    const Real x = Real(1L, wb) / (1L + e);
    const Real xc = e / (1L + e);
    const Real dx = pi * (exp(t) + exp(-t)) / 2L * x * xc;
    if (abs(dx) < tiny) return Real(0L, wb);
    return dx * g(with_bits(x, bits), with_bits(xc, bits));
  };

  Real h(1L, wb);
  Real sum = term(Real(0L, wb));
  for (long i = 1; i * 1.0 <= t_max; ++i) {
    const Real t(i, wb);
    sum += term(t) + term(-t);
  }
  Real prev = sum * h;
  TanhSinhResult out{prev, Real(0L, bits), 0};
  const Real tol = Real::pow10(-static_cast<long>(digits), wb);
  for (int level = 1; level <= max_levels; ++level) {
    h /= 2L;
    // Add the new odd-indexed abscissae at spacing h.
    const long count = static_cast<long>(std::ceil(t_max / h.to_double()));
    for (long i = 1; i <= count; i += 2) {
      const Real t = h * i;
      sum += term(t) + term(-t);
    }
    Real cur = sum * h;
    Real diff = abs(cur - prev);
    out = TanhSinhResult{with_bits(cur, bits), with_bits(diff, bits), level};
    if (level >= 3 && diff < tol * max(abs(cur), Real(1L, wb))) break;
    prev = std::move(cur);
  }
  return out;
}

}  // namespace fracmom
