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

#include "fracmom/sequences.hpp"
#include "fracmom/verify.hpp"
#include "test_util.hpp"

using namespace fracmom;
using fracmom::testing::eval30;
using fracmom::testing::near;

TEST_CASE("alpha sequence") {
  CHECK(alpha_seq(0) == SymValue::of(Atom::euler_gamma()));
  CHECK(alpha_seq(3) == SymValue::of(Atom::zeta(4)));
}

TEST_CASE("a_n closed forms") {
  CHECK(a_seq(0) == SymValue::of(Atom::log_2pi(), make_rational(1, 2)));
  CHECK(near(eval30(a_seq(1)), "-0.248754477033784262547252993576113976", 30));
  CHECK(near(eval30(a_seq(2)), "0.0304484570583932707802515304711547766", 30));
  // a_2 = zeta(3) / (4 pi^2)
  CHECK(a_seq(2) == SymValue::of(Atom::zeta(3), make_rational(1, 4)) * Atom::pi(-2));
}

TEST_CASE("b_n and the log Gamma(x+1) integrals") {
  CHECK(near(eval30(b_seq(0)), "-0.0810614667953272582196702635943823601", 30));
  CHECK(b_seq(0) == loggamma_integral_bernoulli(0));
  // int_0^1 x log Gamma(x+1) dx
  CHECK(near(eval30(loggamma_integral_monomial(1)), "-0.0392852104314478916570881253733051562", 30));
  CHECK(near(eval30(loggamma_integral_trig(TrigKind::kSine)), "-0.00359064083635520844043024203704872134", 30));
  CHECK(near(eval30(loggamma_integral_trig(TrigKind::kCosine)), "0.0242941666049298433010749055232676508", 30));
}

TEST_CASE("a_n and b_n against tanh-sinh quadrature with MPFR lngamma") {
  const Precision p(30);
  for (long n = 0; n <= 8; ++n) {
    const TanhSinhResult qa = loggamma_quadrature_bernoulli(n, 0, p);
    const TanhSinhResult qb = loggamma_quadrature_bernoulli(n, 1, p);
    CHECK(abs(eval_sym(a_seq(n), p) - qa.value) < Real::pow10(-20, p.bits()));
    CHECK(abs(eval_sym(b_seq(n), p) - qb.value) < Real::pow10(-20, p.bits()));
  }
}

TEST_CASE("trig log Gamma integrals against quadrature") {
  const Precision p(30);
  for (TrigKind kind : {TrigKind::kSine, TrigKind::kCosine}) {
    const TanhSinhResult q = loggamma_quadrature_trig(kind, p);
    CHECK(abs(eval_sym(loggamma_integral_trig(kind), p) - q.value) < Real::pow10(-20, p.bits()));
  }
}
