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

// Gauss-Legendre rules with a priori error bounds, and tanh-sinh on [0,1].

#include <functional>
#include <vector>

#include "fracmom/real.hpp"

namespace fracmom {

struct GaussLegendreRule {
  // Nodes and weights on [0, 1], ascending nodes.
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// n-point rule at the given precision; cached and thread-safe.
const GaussLegendreRule& gauss_legendre(int n, mpfr_prec_t bits);

/// Rule sizes the planner may choose from, ascending.
const std::vector<int>& gauss_legendre_sizes();

/// Upper bound for log10 max |g| on the image of the Bernstein ellipse E_rho
/// under t -> (t+1)/2, i.e. on an ellipse around [0,1] with foci 0 and 1 and
/// semi-axes (rho + 1/rho)/4 and (rho - 1/rho)/4. Return +infinity when g is
/// not analytic there.
using EllipseLog10Bound = std::function<double(double rho)>;

struct QuadraturePlan {
  int nodes = 0;
  double rho = 0;
  double log10_error = 0;  // bound on |quadrature error|
};

/// Smallest rule (over a few ellipse parameters) whose remainder bound
/// (64/15) M rho^{-2n} / (rho^2 - 1) / 2 is at most 10^log10_tol.
/// Throws precision-unachievable when no listed size is enough.
QuadraturePlan plan_gauss_legendre(const EllipseLog10Bound& bound, double log10_tol);

/// Semi-axes of the ellipse used in plan_gauss_legendre, on the [0,1] scale.
struct EllipseAxes {
  double major;
  double minor;
};
EllipseAxes ellipse_axes(double rho);

/// Sum of w_i g(x_i) over the rule.
Real integrate(const GaussLegendreRule& rule, const std::function<Real(const Real&)>& g,
               mpfr_prec_t bits);

struct TanhSinhResult {
  Real value;
  Real error_estimate;  // difference of the last two levels; not a rigorous bound
  int levels = 0;
};

/// Double-exponential quadrature over [0,1]. g receives x and 1 - x, both
/// computed without cancellation near the endpoints.
TanhSinhResult tanh_sinh(const std::function<Real(const Real& x, const Real& one_minus_x)>& g,
                         mpfr_prec_t bits, int max_levels = 12);

}  // namespace fracmom
