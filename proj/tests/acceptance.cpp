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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fracmom/bernoulli.hpp"
#include "fracmom/constants.hpp"
#include "fracmom/identities.hpp"
#include "fracmom/moments.hpp"
#include "fracmom/oracle.hpp"
#include "fracmom/verify.hpp"

using namespace fracmom;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    if (!ok) pass = false;
  }
};

Real tol_of(double t, const Precision& p) { return Real(t, p.bits()); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<KnownDiscrepancy>& registry() {
  static const std::vector<KnownDiscrepancy> r = parse_registry(builtin_registry_json());
  return r;
}

// Grid of cross checks. Printed-formula mismatches are allowed only when
// registered; they are listed in the note either way.
void grid(Outcome& o, const std::vector<MomentFamily>& fams, long k_max, double tol) {
  const Precision p(30);
  VerificationReport rep;
  for (const auto& f : fams)
    for (long k = 0; k <= k_max; ++k) rep.append(cross_check(f, k, p, tol_of(tol, p)));
  apply_registry(rep, registry());
  long cells = 0, mismatches = 0;
  for (const auto& r : rep.records) {
    if (r.name.rfind("cross:", 0) == 0) ++cells;
    if (r.name.rfind("printed:", 0) == 0) {
      ++mismatches;
      o.note << "printed-formula mismatch " << r.name << " " << r.params << " (" << r.detail << "); ";
    }
    o.require(r.pass || r.known, r.name + " " + r.params + " " + r.detail);
  }
  o.note << cells << " cells, " << mismatches << " printed-formula mismatches; ";
}

void criterion1(Outcome& o) {
  const auto t0 = Clock::now();
  const Precision p(30);
  const MomentResult r = moment_power(1, 0);
  o.require(r.value.to_string() == "1 - gamma", "closed form is " + r.value.to_string());
  const Real target = Real::parse("0.4227843350984671", p.bits());
  for (OracleMethod m : {OracleMethod::kIntervalSeries, OracleMethod::kPolygamma}) {
    const OracleResult res = run_oracle(m, PowerFamily{1}, 0, p);
    const Real d = abs(res.value - target);
    o.require(d < tol_of(1e-12, p), std::string(oracle_method_name(m)) + " off by " + d.to_scientific(3));
    o.note << oracle_method_name(m) << " " << res.value.to_fixed(16) << " (bound " << res.error_bound.to_scientific(2)
           << "); ";
  }
  const double s = seconds_since(t0);
  o.require(s <= 60, "runtime");
  o.note << s << " s";
}

void criterion2(Outcome& o) {
  const auto t0 = Clock::now();
  std::vector<MomentFamily> fams;
  for (long m = 1; m <= 6; ++m) fams.push_back(PowerFamily{m});
  grid(o, fams, 12, 1e-10);
  const double s = seconds_since(t0);
  o.require(s <= 600, "runtime");
  o.note << s << " s";
}

void criterion3(Outcome& o) {
  std::vector<MomentFamily> fams;
  for (long n = 1; n <= 6; ++n) fams.push_back(BernoulliFamily{n});
  grid(o, fams, 12, 1e-10);
  // The mismatch detector itself: a perturbed printed value must be caught
  // with its regime and an engine-backed replacement.
  const SymValue engine = engine_moment(BernoulliFamily{3}, 1);
  const MomentResult r = reconcile(BernoulliFamily{3}, 1, bernoulli_regime(3, 1),
                                   engine + SymValue::constant(make_rational(1, 10000)), engine);
  o.require(r.discrepancy && r.discrepancy->regime == bernoulli_regime(3, 1) && r.value == engine &&
                r.source == Source::kEngine,
            "injected mismatch not attributed");
}

void criterion4(Outcome& o) {
  std::vector<MomentFamily> fams;
  for (long m = 1; m <= 5; ++m) fams.push_back(SymPowerFamily{m});
  grid(o, fams, 10, 1e-10);
  const Precision p(30);
  for (long m = 1; m <= 5; ++m) {
    for (long k = 0; k <= 10; ++k) {
      SymValue rhs;
      for (long i = 0; i <= m; ++i) rhs += moment_power(m + i, k).value * (binom(m, i) * neg1_pow(i));
      const Real d = abs(eval_sym(moment_sympower(m, k).value, p) - eval_sym(rhs, p));
      o.require(d < tol_of(1e-20, p), "decomposition m=" + std::to_string(m) + " k=" + std::to_string(k));
    }
  }
  o.note << "decomposition checked on 55 cells at 1e-20";
}

void criterion5(Outcome& o) {
  grid(o, {SineFamily{}, CosineFamily{}}, 7, 1e-8);
  const Precision p(30);
  for (TrigKind kind : {TrigKind::kSine, TrigKind::kCosine}) {
    const TanhSinhResult q = loggamma_quadrature_trig(kind, p);
    const Real d = abs(eval_sym(loggamma_integral_trig(kind), p) - q.value);
    o.require(d < tol_of(1e-10, p), "log Gamma trig integral off by " + d.to_scientific(3));
    o.note << (kind == TrigKind::kSine ? "sin" : "cos") << "*logGamma(x+1) diff " << d.to_scientific(2) << "; ";
  }
}

void criterion6(Outcome& o) {
  const Precision p(30);
  const Real tol = tol_of(1e-10, p);
  for (long m = 1; m <= 6; ++m)
    for (long k = 1; k <= 6; ++k) {
      const Real d = abs(furdui_series(m, k, p).value - eval_sym(moment_power(m, k).value, p));
      o.require(d < tol, "zeta series m=" + std::to_string(m) + " k=" + std::to_string(k));
    }
  for (long m = 2; m <= 8; ++m) {
    const Real d = abs(zeta_sum_series(m, ZetaSumCase::kKEqMMinus2, 0, p).value -
                       eval_sym(zeta_sum_closed(m, ZetaSumCase::kKEqMMinus2), p));
    o.require(d < tol, "k=m-2 case m=" + std::to_string(m));
  }
  for (long m = 3; m <= 8; ++m) {
    const Real d = abs(zeta_sum_series(m, ZetaSumCase::kKEqMMinus3, 0, p).value -
                       eval_sym(zeta_sum_closed(m, ZetaSumCase::kKEqMMinus3), p));
    o.require(d < tol, "k=m-3 case m=" + std::to_string(m));
  }
  o.note << "36 series cells, 7 + 6 particular cases";
}

void criterion7(Outcome& o) {
  const auto t0 = Clock::now();
  long checks = 0;
  for (const auto& id : identity_suite_ids()) {
    const long m = id == "lemma-6.2" ? 20 : id == "legendre" ? 15 : 40;
    const IdentityReport r = identity_suite(id, m);
    checks += r.checks;
    o.require(r.ok(), id + (r.failure ? " at " + r.failure->params : std::string()));
  }
  const double s = seconds_since(t0);
  o.require(s <= 120, "runtime");
  o.note << checks << " exact checks in " << s << " s";
}

void criterion8(Outcome& o) {
  const Precision p(30);
  for (long n = 0; n <= 8; ++n) {
    const Real da = abs(eval_sym(a_seq(n), p) - loggamma_quadrature_bernoulli(n, 0, p).value);
    const Real db = abs(eval_sym(b_seq(n), p) - loggamma_quadrature_bernoulli(n, 1, p).value);
    o.require(da < tol_of(1e-10, p), "a_" + std::to_string(n) + " off by " + da.to_scientific(3));
    o.require(db < tol_of(1e-10, p), "b_" + std::to_string(n) + " off by " + db.to_scientific(3));
  }
  o.note << "n = 0..8";
}

void criterion9(Outcome& o) {
  const Precision p(30);
  for (long n = 1; n <= 4; ++n)
    for (long k = 0; k <= 6; ++k) {
      const OracleResult r = hermite_moment_oracle(n, k, p);
      const Real d = abs(eval_sym(hermite_moment(n, k), p) - r.value);
      o.require(d < tol_of(1e-8, p), "Hermite n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  for (long m = 1; m <= 3; ++m)
    for (long k = 1; k <= 3; ++k) {
      const double closed = eval_sym(double_moment(m, k), p).to_double();
      const double quad = double_moment_quadrature(m, k);
      o.require(std::abs(closed - quad) < 1e-3, "double integral m=" + std::to_string(m) + " k=" + std::to_string(k));
      if (m == 1 && k == 2) o.note << "double(1,2) closed " << closed << " quadrature " << quad << "; ";
    }
  o.note << "28 Hermite cells, 9 double-integral cells";
}

void criterion10(Outcome& o) {
  std::mt19937 rng(1014);
  // Binomial conventions.
  std::uniform_int_distribution<long> nd(0, 60), kd(-5, 65);
  for (int i = 0; i < 300; ++i) {
    const long n = nd(rng) + 1, k = kd(rng);
    o.require(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k), "Pascal rule");
    o.require(binom(n, k) == ((k < 0 || k > n) ? Rational(0) : binom(n, n - k)), "symmetry/zero convention");
  }
  // Polygamma recurrence psi^(m)(x+1) = psi^(m)(x) + (-1)^m m! / x^(m+1).
  const Precision p(30);
  std::uniform_int_distribution<long> num(1, 500), md(0, 5);
  for (int i = 0; i < 40; ++i) {
    const long m = md(rng);
    const Real x(make_rational(num(rng), 37), p.bits());
    Real rhs = Real(Rational(factorial(m)), p.bits());
    for (long j = 0; j <= m; ++j) rhs /= x;
    if (m % 2) rhs = -rhs;
    rhs += polygamma(m, x, p);
    o.require(abs(polygamma(m, x + 1, p) - rhs) < tol_of(1e-28, p) * (1 + abs(rhs)), "polygamma recurrence");
  }
  // Normal-form algebra.
  std::uniform_int_distribution<int> c(-9, 9), s(2, 7), which(0, 3);
  auto value = [&] {
    SymValue v = SymValue::constant(make_rational(c(rng), 1 + std::abs(c(rng))));
    for (int t = 0; t < 3; ++t) {
      const int pick = which(rng);
      const Atom a = pick == 0 ? Atom::euler_gamma() : pick == 1 ? Atom::zeta(s(rng)) : pick == 2 ? Atom::pi(s(rng) % 2 ? 1 : -2) : Atom::log_2pi();
      v += SymValue::of(a, make_rational(c(rng), 3));
    }
    return v;
  };
  for (int i = 0; i < 100; ++i) {
    const SymValue a = value(), b = value(), d = value();
    o.require(a * (b + d) == a * b + a * d, "distributivity");
    o.require((a * b) * d == a * (b * d), "associativity");
    o.require(SymValue::parse(a.to_string()) == a, "parse round trip");
    o.require(abs(eval_sym(a * b, p) - eval_sym(a, p) * eval_sym(b, p)) < tol_of(1e-26, p), "evaluation homomorphism");
  }
  // Oracle bound honesty against the exact value at higher precision.
  const Precision hi(60);
  std::uniform_int_distribution<long> fam(0, 4), idx(1, 5), kk(0, 9);
  for (int i = 0; i < 10; ++i) {
    MomentFamily f;
    switch (fam(rng)) {
      case 0: f = SineFamily{}; break;
      case 1: f = CosineFamily{}; break;
      case 2: f = BernoulliFamily{idx(rng)}; break;
      case 3: f = PowerFamily{idx(rng)}; break;
      default: f = SymPowerFamily{idx(rng)}; break;
    }
    const long k = kk(rng);
    const Real exact = eval_sym(compute_moment(f, k).value, hi);
    for (OracleMethod m : {OracleMethod::kIntervalSeries, OracleMethod::kPolygamma}) {
      const OracleResult r = run_oracle(m, f, k, p);
      o.require(abs(with_bits(r.value, hi.bits()) - exact) <= with_bits(r.error_bound, hi.bits()),
                std::string(oracle_method_name(m)) + " bound violated for " + family_name(f) + " k=" + std::to_string(k));
    }
  }
  o.note << "seeds fixed; binomial, polygamma, algebra, oracle-bound properties";
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}};
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", id, o.note.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
