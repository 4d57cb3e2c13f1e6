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

#include "fracmom/identities.hpp"

#include <functional>
#include <map>

#include "fracmom/bernoulli.hpp"
#include "fracmom/error.hpp"
#include "fracmom/rational.hpp"

namespace fracmom {

namespace {

// Records the first failing comparison; later checks are still counted.
class Checker {
 public:
  explicit Checker(IdentityReport& r) : r_(r) {}

  void equal(const Rational& lhs, const Rational& rhs, const std::function<std::string()>& params) {
    ++r_.checks;
    if (!r_.failure && lhs != rhs) r_.failure = IdentityFailure{params(), to_string(lhs), to_string(rhs)};
  }

  void equal(const Poly& lhs, const Poly& rhs, const std::function<std::string()>& params) {
    ++r_.checks;
    if (!r_.failure && !(lhs == rhs)) r_.failure = IdentityFailure{params(), lhs.to_string(), rhs.to_string()};
  }

 private:
  IdentityReport& r_;
};

std::string mk(long m, long k) { return "m=" + std::to_string(m) + " k=" + std::to_string(k); }

Rational fact_ratio(long a, long b) { return Rational(factorial(a)) / Rational(factorial(b)); }

void lemma_5_2(long m_max, IdentityReport& r) {
  r.range = "m=0.." + std::to_string(m_max) + ", k=m..2m+" + std::to_string(m_max) + " and k=0..m-2";
  Checker c(r);
  for (long m = 0; m <= m_max; ++m) {
    for (long k = m; k <= 2 * m + m_max; ++k) {
      Rational lhs(0);
      for (long j = 0; j <= m; ++j) lhs += fact_ratio(k - j, m - j);
      const Rational rhs = Rational(factorial(k + 1)) / (Rational(factorial(m)) * Rational(k + 1 - m));
      c.equal(lhs, rhs, [&] { return "first display " + mk(m, k); });
      // Equivalent binomial form.
      Rational blhs(0);
      for (long j = 0; j <= m; ++j) blhs += binom(k - m + j, j);
      c.equal(blhs, binom(k + 1, m), [&] { return "binomial form " + mk(m, k); });
    }
    for (long k = 0; k <= m - 2; ++k) {
      Rational lhs(0);
      for (long j = 0; j <= k; ++j) lhs += fact_ratio(k - j, m - j);
      const Rational rhs = Rational(factorial(k + 1)) / (Rational(factorial(m)) * Rational(k + 1 - m)) *
                           (Rational(1) - binom(m, k + 1));
      c.equal(lhs, rhs, [&] { return "second display " + mk(m, k); });
    }
  }
}

// sum_{k=lo}^{m} (-1)^k/(m+k+1) C(m,k) C(m+k+1,j)
Rational fm_sum(long m, long j, long lo) {
  Rational s(0);
  for (long k = lo; k <= m; ++k) {
    s += Rational(neg1_pow(k)) / Rational(m + k + 1) * binom(m, k) * binom(m + k + 1, j);
  }
  return s;
}

void lemma_6_1(long m_max, IdentityReport& r) {
  r.range = "m=1.." + std::to_string(m_max) + ", j=0..2m";
  Checker c(r);
  for (long m = 1; m <= m_max; ++m) {
    c.equal(fm_sum(m, 0, 0), Rational(1) / (Rational(2 * m + 1) * binom(2 * m, m)),
            [&] { return "j=0 m=" + std::to_string(m); });
    for (long j = 1; j <= m; ++j) {
      c.equal(fm_sum(m, j, 0), Rational(0), [&] { return "j=1..m " + mk(m, j); });
    }
    for (long j = m + 1; j <= 2 * m; ++j) {
      const Rational rhs = Rational(neg1_pow(m) * (1 + neg1_pow(j))) / Rational(j) * binom(m, j - m - 1);
      c.equal(fm_sum(m, j, j - m), rhs, [&] { return "j=m+1..2m m=" + std::to_string(m) + " j=" + std::to_string(j); });
    }
  }
}

Rational im_sum(long m, long k, long hi) {
  Rational s(0);
  for (long j = m; j <= hi; ++j) s += binom(m, j - m) / binom(k, j);
  return s;
}

Rational im_sum_2_rhs(long m) { return Rational(2 * m) * (harmonic(2 * m) - harmonic(m)); }

void lemma_6_3(long m_max, IdentityReport& r) {
  r.range = "m=1.." + std::to_string(m_max) + ", k=2m..2m+" + std::to_string(m_max);
  Checker c(r);
  for (long m = 1; m <= m_max; ++m) {
    for (long k = 2 * m; k <= 2 * m + m_max; ++k) {
      const Rational rhs = Rational(factorial(m)) * Rational(factorial(k - 2 * m)) * Rational(k + 1) /
                           Rational(factorial(k + 1 - m));
      c.equal(im_sum(m, k, 2 * m), rhs, [&] { return "first identity " + mk(m, k); });
      Rational eq(0);
      for (long n = 0; n <= m; ++n) eq += binom(m + n, m) * binom(k - m - n, k - 2 * m);
      c.equal(eq, binom(k + 1, m), [&] { return "first identity, binomial form " + mk(m, k); });
    }
    const Rational lhs = im_sum(m, 2 * m - 1, 2 * m - 1);
    c.equal(lhs, im_sum_2_rhs(m), [&] { return "second identity m=" + std::to_string(m); });
    if (m < m_max) {
      // Both sides obey m a_{m+1} = (m+1) a_m + m/(2m+1).
      const Rational tail = Rational(m) / Rational(2 * m + 1);
      const Rational next_lhs = im_sum(m + 1, 2 * m + 1, 2 * m + 1);
      c.equal(Rational(m) * next_lhs, Rational(m + 1) * lhs + tail,
              [&] { return "recurrence, sum side m=" + std::to_string(m); });
      c.equal(Rational(m) * im_sum_2_rhs(m + 1), Rational(m + 1) * im_sum_2_rhs(m) + tail,
              [&] { return "recurrence, harmonic side m=" + std::to_string(m); });
    }
  }
}

void lemma_6_2(long m_max, IdentityReport& r) {
  r.range = "m=1.." + std::to_string(m_max);
  Checker c(r);
  for (long m = 1; m <= m_max; ++m) {
    c.equal(expand_sympower(m).to_monomial(), sympower_poly(m), [&] { return "m=" + std::to_string(m); });
    const BernoulliBasisPoly e = expand_sympower(m);
    for (long j = 1; j <= e.degree(); j += 2) {
      c.equal(e.coeff(j), Rational(0), [&] { return "odd coefficient " + mk(m, j); });
    }
  }
}

void legendre(long m_max, IdentityReport& r) {
  r.range = "m=0.." + std::to_string(m_max);
  Checker c(r);
  for (long m = 0; m <= m_max; ++m) {
    const Poly rodrigues = shifted_legendre(m);
    c.equal(shifted_legendre_bernoulli(m).to_monomial(), rodrigues,
            [&] { return "Bernoulli-coefficient form m=" + std::to_string(m); });
    if (m >= 1) {
      c.equal(shifted_legendre_from_derivative(m).to_monomial(), rodrigues,
              [&] { return "derivative form m=" + std::to_string(m); });
    }
    c.equal(rodrigues.evaluate(Rational(1)), Rational(1), [&] { return "P_m(1) m=" + std::to_string(m); });
  }
}

// sum_{k=0}^{m} C(m+1,k) B_k = [m = 0]
void binomial_sum(long m_max, IdentityReport& r) {
  r.range = "m=0.." + std::to_string(m_max);
  Checker c(r);
  for (long m = 0; m <= m_max; ++m) {
    Rational s(0);
    for (long k = 0; k <= m; ++k) s += binom(m + 1, k) * bernoulli_number(k);
    c.equal(s, Rational(m == 0 ? 1 : 0), [&] { return "m=" + std::to_string(m); });
  }
}

// x^n = (1/(n+1)) sum_{j=0}^{n} C(n+1,j) B_j(x)
void power_to_bernoulli(long m_max, IdentityReport& r) {
  r.range = "n=0.." + std::to_string(m_max);
  Checker c(r);
  for (long n = 0; n <= m_max; ++n) {
    Poly s;
    for (long j = 0; j <= n; ++j) s += bernoulli_poly(j) * binom(n + 1, j);
    s *= Rational(1) / Rational(n + 1);
    c.equal(s, Poly::monomial(n), [&] { return "n=" + std::to_string(n); });
  }
}

// Bernoulli-basis derivative expansions against direct differentiation,
// plus the boundary values at 0 and 1.
void derivatives(long m_max, IdentityReport& r) {
  r.range = "m=1.." + std::to_string(m_max) + ", k=0..2m+1";
  Checker c(r);
  for (long m = 1; m <= m_max; ++m) {
    const Poly f = sympower_poly(m);
    for (long k = 0; k <= 2 * m + 1; ++k) {
      const Poly d = f.derivative(k);
      c.equal(sympower_derivative(m, k).to_monomial(), d, [&] { return "expansion " + mk(m, k); });
      const auto [at0, at1] = sympower_boundary(m, k);
      c.equal(at0, d.evaluate(Rational(0)), [&] { return "value at 0 " + mk(m, k); });
      c.equal(at1, d.evaluate(Rational(1)), [&] { return "value at 1 " + mk(m, k); });
    }
  }
}

using Suite = void (*)(long, IdentityReport&);

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table = {
      {"lemma-5.2", lemma_5_2},
      {"lemma-6.1", lemma_6_1},
      {"lemma-6.3", lemma_6_3},
      {"lemma-6.2", lemma_6_2},
      {"legendre", legendre},
      {"binomial-sum", binomial_sum},
      {"power-to-bernoulli", power_to_bernoulli},
      {"derivatives", derivatives},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& identity_suite_ids() {
  static const std::vector<std::string> ids = {"lemma-5.2", "lemma-6.1",    "lemma-6.3",          "lemma-6.2",
                                               "legendre",  "binomial-sum", "power-to-bernoulli", "derivatives"};
  return ids;
}

IdentityReport identity_suite(const std::string& which, long m_max) {
  if (m_max < 1) fail(ErrorCode::kInvalidArgument, "identity suite needs m_max >= 1");
  const auto it = suites().find(which);
  if (it == suites().end()) fail(ErrorCode::kInvalidArgument, "unknown identity suite: " + which);
  IdentityReport r;
  r.id = which;
  it->second(m_max, r);
  return r;
}

}  // namespace fracmom
