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

#include <doctest.h>

#include "fracmom/bernoulli.hpp"
#include "fracmom/error.hpp"
#include "fracmom/moments.hpp"
#include "test_util.hpp"

using namespace fracmom;
using fracmom::testing::eval30;
using fracmom::testing::near;

namespace {

SymValue c(const Rational& q) { return SymValue::constant(q); }
SymValue g(const Rational& q = Rational(1)) { return SymValue::of(Atom::euler_gamma(), q); }
SymValue z(long s, const Rational& q = Rational(1)) { return SymValue::of(Atom::zeta(s), q); }
SymValue l2p(const Rational& q = Rational(1)) { return SymValue::of(Atom::log_2pi(), q); }

}  // namespace

TEST_CASE("generic engine on simple polynomials") {
  CHECK(moment_poly_generic(Poly{Rational(1)}, 0) == c(Rational(1)));
  CHECK(moment_poly_generic(Poly{Rational(1)}, 3) == c(make_rational(1, 4)));
  CHECK(moment_poly_generic(Poly::monomial(1), 0) == c(Rational(1)) - g());
  CHECK(moment_poly_generic(Poly{Rational(0), Rational(1), Rational(-1)}, 0) == c(Rational(2)) - l2p());
}

TEST_CASE("power family closed forms") {
  const MomentResult r = moment_power(1, 0);
  CHECK(r.value == c(Rational(1)) - g());
  CHECK(r.regime == "k=m-1");
  CHECK(r.source == Source::kTheorem);
  CHECK(!r.discrepancy);
  CHECK(moment_power(1, 1).value == c(Rational(1)) - z(2, make_rational(1, 2)));
  CHECK(moment_power(2, 0).value == l2p() - c(Rational(1)) - g());
  CHECK(moment_power(2, 0).regime == "k<=m-2");
  CHECK(moment_power(3, 5).regime == "k>=m");
  CHECK(near(eval30(moment_power(1, 1).value), "0.177532966575886781763792416676987405", 30));
  CHECK(near(eval30(moment_power(3, 7).value), "0.00230477879436021435920165626962717744", 30));
  CHECK(near(eval30(moment_power(6, 2).value), "0.0153781064942398282816186042529468222", 30));
  CHECK_THROWS_AS(moment_power(0, 1), Error);
  CHECK_THROWS_AS(moment_power(1, -1), Error);
}

TEST_CASE("Bernoulli family closed forms") {
  CHECK(moment_bernoulli(1, 0).value == c(make_rational(1, 2)) - g());
  CHECK(moment_bernoulli(1, 2).value == c(make_rational(1, 3)) - z(3, make_rational(1, 3)));
  // 1/6 + 2 (log sqrt(2 pi) - 1)
  CHECK(moment_bernoulli(2, 0).value == c(make_rational(1, 6) - 2) + l2p());
  CHECK(moment_bernoulli(0, 4).value == c(make_rational(1, 5)));
  CHECK(moment_bernoulli(0, 4).source == Source::kEngine);
  CHECK(near(eval30(moment_bernoulli(2, 0).value), "0.00454373307601215022732613947790194639", 30));
  CHECK(near(eval30(moment_bernoulli(5, 3).value), "-0.00252955619885851332057354019413402292", 30));
}

TEST_CASE("x^m (1-x)^m family closed forms") {
  CHECK(moment_sympower(1, 0).value == c(Rational(2)) - l2p());
  CHECK(moment_sympower(1, 0).regime == "k<=m-1");
  CHECK(moment_sympower(1, 1).value == g() - c(make_rational(1, 2)));
  CHECK(moment_sympower(1, 1).regime == "k=2m-1");
  CHECK(moment_sympower(1, 2).regime == "k>=2m");
  CHECK(moment_sympower(3, 4).regime == "m<=k<=2m-2");
  CHECK(near(eval30(moment_sympower(1, 2).value), "0.0483113556160754788241383888820083964", 30));
  CHECK(near(eval30(moment_sympower(3, 4).value), "0.000862207456786192965263098230896679754", 30));
  CHECK(near(eval30(moment_sympower(4, 9).value), "0.0000372894209400004747273076079548626303", 30));
}

TEST_CASE("trigonometric family closed forms") {
  CHECK(moment_trig(TrigKind::kSine, 0).value.to_string() == "-2*pi*Ci2pi");
  SymValue cos0 = c(Rational(1)) - SymValue::of(Atom::pi(2)) + SymValue::of(Atom::pi(1), Rational(2)) * Atom::si_2pi();
  CHECK(moment_trig(TrigKind::kCosine, 0).value == cos0);
  CHECK(near(eval30(moment_trig(TrigKind::kSine, 0).value), "0.141752818404890162915240344749664978", 30));
  CHECK(near(eval30(moment_trig(TrigKind::kCosine, 0).value), "0.0409047454207451883436767930050082782", 30));
  CHECK(near(eval30(moment_trig(TrigKind::kSine, 1).value), "0.128506047710773819755787538730913098", 30));
  CHECK(near(eval30(moment_trig(TrigKind::kCosine, 5).value), "0.0743639737997541645769919271362302888", 30));
}

TEST_CASE("printed formulas agree with the engine on the full grid") {
  const Precision p(30);
  for (long m = 1; m <= 8; ++m) {
    for (long k = 0; k <= 16; ++k) {
      for (const MomentResult& r : {moment_power(m, k), moment_bernoulli(m, k), moment_sympower(m, k)}) {
        CHECK(!r.discrepancy);
        CHECK(r.source == Source::kTheorem);
        CHECK(abs(eval_sym(r.value, p) - eval_sym(engine_moment(r.family, k), p)) < Real::pow10(-20, p.bits()));
      }
    }
  }
  for (long k = 0; k <= 16; ++k) {
    CHECK(!moment_trig(TrigKind::kSine, k).discrepancy);
    CHECK(!moment_trig(TrigKind::kCosine, k).discrepancy);
  }
}

TEST_CASE("reconcile falls back to the engine and records the regime") {
  const MomentFamily f = PowerFamily{2};
  const SymValue engine = moment_poly_generic(Poly::monomial(2), 0);
  const MomentResult r = reconcile(f, 0, "k<=m-2", engine + c(make_rational(1, 1000)), engine);
  CHECK(r.source == Source::kEngine);
  CHECK(r.value == engine);
  REQUIRE(r.discrepancy);
  CHECK(r.discrepancy->regime == "k<=m-2");
  CHECK(r.discrepancy->printed == engine + c(make_rational(1, 1000)));
  // Numerically equal but structurally different values are accepted.
  const SymValue zeta2 = z(2);
  const SymValue pi2 = SymValue::of(Atom::pi(2), make_rational(1, 6));
  const MomentResult ok = reconcile(f, 0, "x", zeta2, pi2);
  CHECK(ok.source == Source::kTheorem);
  CHECK(!ok.discrepancy);
}

TEST_CASE("regime boundary: C_m^m equals the displayed diagonal formula") {
  for (long m = 1; m <= 10; ++m) {
    SymValue d = c(Rational(1));
    for (long j = 1; j <= m; ++j) d -= z(j + 1, make_rational(1, m + 1));
    CHECK(moment_power(m, m).value == d);
  }
}

TEST_CASE("sympower decomposition into power moments") {
  for (long m = 1; m <= 5; ++m) {
    for (long k = 0; k <= 12; ++k) {
      SymValue rhs;
      for (long i = 0; i <= m; ++i) rhs += moment_power(m + i, k).value * (binom(m, i) * neg1_pow(i));
      CHECK(abs(eval30(moment_sympower(m, k).value) - eval30(rhs)) < Real::pow10(-20, Precision(30).bits()));
    }
  }
}

TEST_CASE("zeta series: Furdui form and the two particular cases") {
  const Precision p(30);
  CHECK(near(furdui_series(1, 1, p).value, "0.177532966575886781763792416676987405", 30));
  // H_2 - gamma - zeta(2)/2
  CHECK(moment_power(2, 1).value == c(make_rational(3, 2)) - g() - z(2, make_rational(1, 2)));
  for (long m = 1; m <= 6; ++m)
    for (long k = 1; k <= 6; ++k)
      CHECK(abs(furdui_series(m, k, p).value - eval_sym(moment_power(m, k).value, p)) < Real::pow10(-28, p.bits()));
  CHECK(zeta_sum_closed(2, ZetaSumCase::kKEqMMinus2) == c(make_rational(-1, 2)) + l2p(make_rational(1, 2)) - g(make_rational(1, 2)));
  CHECK(near(zeta_sum_series(2, ZetaSumCase::kKEqMMinus2, 0, p).value, "0.130330700753906311477073691364416424", 30));
  for (long m = 2; m <= 8; ++m)
    CHECK(abs(zeta_sum_series(m, ZetaSumCase::kKEqMMinus2, 0, p).value -
              eval_sym(zeta_sum_closed(m, ZetaSumCase::kKEqMMinus2), p)) < Real::pow10(-28, p.bits()));
  for (long m = 3; m <= 8; ++m)
    CHECK(abs(zeta_sum_series(m, ZetaSumCase::kKEqMMinus3, 0, p).value -
              eval_sym(zeta_sum_closed(m, ZetaSumCase::kKEqMMinus3), p)) < Real::pow10(-28, p.bits()));
  CHECK(zeta_sum_closed(4, ZetaSumCase::kGeneral, 1) == moment_power(4, 1).value);
  CHECK_THROWS_AS(zeta_sum_closed(1, ZetaSumCase::kKEqMMinus2), Error);
  CHECK_THROWS_AS(zeta_sum_closed(2, ZetaSumCase::kKEqMMinus3), Error);
}

TEST_CASE("Hermite and double-integral remarks") {
  CHECK(hermite_moment(1, 2) == c(make_rational(1, 2)) - z(3, make_rational(1, 3)));
  CHECK(hermite_moment(2, 0) == c(Rational(3)) - g(Rational(2)));
  // 5 - pi^2/3 with zeta(2) kept as an atom
  CHECK(hermite_moment(2, 1) == c(Rational(5)) - z(2, Rational(2)));
  for (long k = 0; k <= 6; ++k) CHECK(hermite_moment(1, k) == moment_power(1, k).value);
  CHECK(double_moment(1, 1) == moment_power(1, 1).value);
  CHECK(near(eval30(double_moment(1, 2)), "0.099815833643911246345350469712050822", 30));
  CHECK(near(eval30(double_moment(3, 3)), "0.0176714490702602716529607438253392293", 30));
  CHECK(double_moment(2, 3) == double_moment(3, 2));
}

TEST_CASE("p_{m,k}") {
  CHECK(p_sum(1, 1) == 1);
  CHECK(p_sum(1, 2) == make_rational(3, 2));
  CHECK(p_sum(2, 3) == make_rational(7, 3));
  CHECK_THROWS_AS(p_sum(3, 2), Error);
  for (long m = 1; m <= 12; ++m) {
    CHECK(p_sum(m, 2 * m - 1) == Rational(2 * m) * (harmonic(2 * m) - harmonic(m)));
    for (long k = 2 * m; k <= 2 * m + 12; ++k)
      CHECK(p_sum(m, k) == Rational(factorial(m) * factorial(k - 2 * m) * (k + 1)) / Rational(factorial(k + 1 - m)));
  }
}

TEST_CASE("family helpers") {
  CHECK(family_name(SineFamily{}) == "sine");
  CHECK(family_name(PolyFamily{Poly{Rational(1)}}) == "poly");
  CHECK(!family_poly(CosineFamily{}));
  CHECK(*family_poly(SymPowerFamily{2}) == sympower_poly(2));
  CHECK_THROWS_AS(validate_family(BernoulliFamily{-1}), Error);
  CHECK_THROWS_AS(validate_family(SymPowerFamily{0}), Error);
  CHECK(compute_moment(PolyFamily{Poly{Rational(0), Rational(1)}}, 0).value == c(Rational(1)) - g());
  CHECK(compute_moment(PolyFamily{Poly{Rational(0), Rational(1)}}, 0).source == Source::kEngine);
}
