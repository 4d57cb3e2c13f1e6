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


// Exercises the shared library through its C header only.

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "fracmom/fracmom.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: EXPECT(%s) failed\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static void test_power_theorem(void) {
  fracmom_moment* m = NULL;
  EXPECT(fracmom_moment_compute(FRACMOM_FAMILY_POWER, 1, NULL, 0, 12, FRACMOM_METHOD_THEOREM, &m) == FRACMOM_OK);
  if (!m) return;
  EXPECT(strcmp(fracmom_moment_symbolic(m), "1 - gamma") == 0);
  EXPECT(strcmp(fracmom_moment_value(m), "0.422784335098") == 0);
  EXPECT(strcmp(fracmom_moment_method(m), "theorem") == 0);
  EXPECT(strcmp(fracmom_moment_regime(m), "k=m-1") == 0);
  EXPECT(strcmp(fracmom_moment_error_bound(m), "") == 0);
  EXPECT(fracmom_moment_precision(m) == 12);
  EXPECT(fracmom_moment_has_discrepancy(m) == 0);
  fracmom_moment_free(m);
}

static void test_poly_and_trig(void) {
  fracmom_moment* m = NULL;
  EXPECT(fracmom_moment_compute(FRACMOM_FAMILY_POLY, 0, "0,1,-1", 0, 10, FRACMOM_METHOD_ENGINE, &m) == FRACMOM_OK);
  if (m) {
    EXPECT(strcmp(fracmom_moment_symbolic(m), "2 - log2pi") == 0);
    EXPECT(strcmp(fracmom_moment_value(m), "0.1621229336") == 0);
    fracmom_moment_free(m);
  }
  m = NULL;
  EXPECT(fracmom_moment_compute(FRACMOM_FAMILY_SINE, 0, NULL, 0, 10, FRACMOM_METHOD_THEOREM, &m) == FRACMOM_OK);
  if (m) {
    EXPECT(strcmp(fracmom_moment_symbolic(m), "-2*pi*Ci2pi") == 0);
    EXPECT(strcmp(fracmom_moment_value(m), "0.1417528184") == 0);
    fracmom_moment_free(m);
  }
}

static void test_oracle_method(void) {
  fracmom_moment* m = NULL;
  EXPECT(fracmom_moment_compute(FRACMOM_FAMILY_POWER, 1, NULL, 0, 20, FRACMOM_METHOD_ORACLE, &m) == FRACMOM_OK);
  if (!m) return;
  EXPECT(strcmp(fracmom_moment_method(m), "oracle") == 0);
  EXPECT(strncmp(fracmom_moment_value(m), "0.4227843350984671", 18) == 0);
  EXPECT(strlen(fracmom_moment_error_bound(m)) > 0);
  EXPECT(atof(fracmom_moment_error_bound(m)) < 1e-18);
  fracmom_moment_free(m);
}

static void test_errors(void) {
  fracmom_moment* m = NULL;
  EXPECT(fracmom_moment_compute(FRACMOM_FAMILY_POWER, 0, NULL, 0, 12, FRACMOM_METHOD_THEOREM, &m) ==
         FRACMOM_ERR_UNSUPPORTED_ARGUMENT);
  EXPECT(m == NULL);
  EXPECT(strlen(fracmom_last_error()) > 0);
  EXPECT(fracmom_moment_compute(FRACMOM_FAMILY_POWER, 1, NULL, 0, 5, FRACMOM_METHOD_THEOREM, &m) != FRACMOM_OK);
  EXPECT(fracmom_moment_compute(FRACMOM_FAMILY_POWER, 1, NULL, 0, 200000, FRACMOM_METHOD_THEOREM, &m) ==
         FRACMOM_ERR_PRECISION_UNACHIEVABLE);
  EXPECT(fracmom_moment_compute(FRACMOM_FAMILY_POLY, 0, "1,x", 0, 12, FRACMOM_METHOD_THEOREM, &m) ==
         FRACMOM_ERR_INVALID_ARGUMENT);
  EXPECT(fracmom_moment_compute(FRACMOM_FAMILY_POWER, 1, NULL, 0, 12, FRACMOM_METHOD_THEOREM, NULL) ==
         FRACMOM_ERR_INVALID_ARGUMENT);
  fracmom_family f;
  EXPECT(fracmom_family_from_name("sympower", &f) == FRACMOM_OK && f == FRACMOM_FAMILY_SYMPOWER);
  EXPECT(fracmom_family_from_name("nonsense", &f) == FRACMOM_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(fracmom_family_name(FRACMOM_FAMILY_BERNOULLI), "bernoulli") == 0);
}

static void test_verify_and_eval(void) {
  fracmom_report* r = NULL;
  EXPECT(fracmom_verify("sequences", 6, 12, 1e-10, 30, NULL, &r) == FRACMOM_OK);
  if (r) {
    EXPECT(fracmom_report_count(r) > 0);
    EXPECT(fracmom_report_unregistered_failures(r) == 0);
    EXPECT(fracmom_report_text(r, fracmom_report_count(r), FRACMOM_REPORT_NAME) == NULL);
    EXPECT(strcmp(fracmom_report_text(r, 0, FRACMOM_REPORT_SUITE), "sequences") == 0);
    fracmom_report_free(r);
  }
  r = NULL;
  EXPECT(fracmom_verify("sequences", 6, 12, 1e-10, 30, "{\"version\":1,\"entries\":[]}", &r) == FRACMOM_OK);
  if (r) {
    EXPECT(fracmom_report_unregistered_failures(r) == fracmom_report_failures(r));
    EXPECT(fracmom_report_failures(r) > 0);
    fracmom_report_free(r);
  }
  EXPECT(fracmom_verify("nope", 6, 12, 1e-10, 30, NULL, &r) == FRACMOM_ERR_INVALID_ARGUMENT);
  EXPECT(strstr(fracmom_builtin_registry(), "entries") != NULL);

  char* s = NULL;
  EXPECT(fracmom_symbolic_eval("1 - gamma", 15, &s) == FRACMOM_OK);
  if (s) {
    EXPECT(strcmp(s, "0.422784335098467") == 0);
    fracmom_string_free(s);
  }
  EXPECT(fracmom_symbolic_eval("1 +", 15, &s) == FRACMOM_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(fracmom_version()) > 0);
}

// The printed value must agree with a fresh evaluation of the symbolic text.
static void test_round_trip(void) {
  const fracmom_family fams[] = {FRACMOM_FAMILY_SINE, FRACMOM_FAMILY_COSINE, FRACMOM_FAMILY_BERNOULLI,
                                 FRACMOM_FAMILY_POWER, FRACMOM_FAMILY_SYMPOWER};
  for (size_t f = 0; f < sizeof fams / sizeof fams[0]; ++f) {
    for (long index = 1; index <= 3; ++index) {
      for (long k = 0; k <= 6; ++k) {
        fracmom_moment* m = NULL;
        if (fracmom_moment_compute(fams[f], index, NULL, k, 25, FRACMOM_METHOD_THEOREM, &m) != FRACMOM_OK) {
          EXPECT(0);
          continue;
        }
        char* s = NULL;
        EXPECT(fracmom_symbolic_eval(fracmom_moment_symbolic(m), 25, &s) == FRACMOM_OK);
        if (s) {
          EXPECT(strcmp(s, fracmom_moment_value(m)) == 0);
          fracmom_string_free(s);
        }
        fracmom_moment_free(m);
      }
    }
  }
}

int main(void) {
  test_round_trip();
  test_power_theorem();
  test_poly_and_trig();
  test_oracle_method();
  test_errors();
  test_verify_and_eval();
  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return 1;
  }
  printf("capi: all expectations met\n");
  return 0;
}
