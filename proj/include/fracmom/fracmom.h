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

/* C interface to the fracmom library. All strings returned by accessors are
 * owned by the handle they came from and stay valid until it is freed. */
#ifndef FRACMOM_FRACMOM_H_
#define FRACMOM_FRACMOM_H_

#include <stddef.h>

#if defined(FRACMOM_BUILDING_LIBRARY)
#define FRACMOM_API __attribute__((visibility("default")))
#else
#define FRACMOM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fracmom_status {
  FRACMOM_OK = 0,
  FRACMOM_ERR_INVALID_ARGUMENT = 1,
  FRACMOM_ERR_UNSUPPORTED_ARGUMENT = 2,
  FRACMOM_ERR_PRECISION_UNACHIEVABLE = 3,
  FRACMOM_ERR_DOMAIN = 4,
  FRACMOM_ERR_IO = 5,
  FRACMOM_ERR_INTERNAL = 6
} fracmom_status;

typedef enum fracmom_family {
  FRACMOM_FAMILY_SINE = 0,
  FRACMOM_FAMILY_COSINE = 1,
  FRACMOM_FAMILY_BERNOULLI = 2, /* index = n >= 0 */
  FRACMOM_FAMILY_POWER = 3,     /* index = m >= 1 */
  FRACMOM_FAMILY_SYMPOWER = 4,  /* index = m >= 1 */
  FRACMOM_FAMILY_POLY = 5       /* coefficients in coeffs_csv, constant term first */
} fracmom_family;

typedef enum fracmom_method {
  FRACMOM_METHOD_THEOREM = 0, /* closed form for the family, engine fallback on mismatch */
  FRACMOM_METHOD_ENGINE = 1,  /* generic polynomial/trig engine */
  FRACMOM_METHOD_ORACLE = 2   /* interval-series numerical oracle */
} fracmom_method;

typedef struct fracmom_moment fracmom_moment;
typedef struct fracmom_report fracmom_report;

/* Message for the last failing call on this thread ("" if none). */
FRACMOM_API const char* fracmom_last_error(void);

FRACMOM_API const char* fracmom_version(void);

/* Family names as accepted by fracmom_family_from_name. */
FRACMOM_API const char* fracmom_family_name(fracmom_family family);
FRACMOM_API fracmom_status fracmom_family_from_name(const char* name, fracmom_family* out);

/* Computes I_k f. precision is the number of decimal digits (>= 10). */
FRACMOM_API fracmom_status fracmom_moment_compute(fracmom_family family, long index, const char* coeffs_csv,
                                                  long k, int precision, fracmom_method method,
                                                  fracmom_moment** out);
FRACMOM_API void fracmom_moment_free(fracmom_moment* m);

FRACMOM_API const char* fracmom_moment_symbolic(const fracmom_moment* m);
/* Decimal expansion with `precision` digits after the point. */
FRACMOM_API const char* fracmom_moment_value(const fracmom_moment* m);
FRACMOM_API const char* fracmom_moment_regime(const fracmom_moment* m);
/* "theorem", "engine" or "oracle". */
FRACMOM_API const char* fracmom_moment_method(const fracmom_moment* m);
/* Oracle error bound in scientific notation; "" for exact methods. */
FRACMOM_API const char* fracmom_moment_error_bound(const fracmom_moment* m);
FRACMOM_API int fracmom_moment_precision(const fracmom_moment* m);
FRACMOM_API int fracmom_moment_has_discrepancy(const fracmom_moment* m);
/* Discrepancy fields: symbolic text of the printed and engine values, and
 * their numeric values. Return "" when there is no discrepancy. */
FRACMOM_API const char* fracmom_moment_discrepancy_printed(const fracmom_moment* m);
FRACMOM_API const char* fracmom_moment_discrepancy_engine(const fracmom_moment* m);
FRACMOM_API const char* fracmom_moment_discrepancy_printed_value(const fracmom_moment* m);
FRACMOM_API const char* fracmom_moment_discrepancy_engine_value(const fracmom_moment* m);

/* suite: "all", "identities", "moments" or "sequences". registry_json may be
 * NULL for the built-in known-discrepancy registry. */
FRACMOM_API fracmom_status fracmom_verify(const char* suite, long max_m, long max_k, double tol, int precision,
                                          const char* registry_json, fracmom_report** out);
FRACMOM_API void fracmom_report_free(fracmom_report* r);
FRACMOM_API size_t fracmom_report_count(const fracmom_report* r);
FRACMOM_API long fracmom_report_failures(const fracmom_report* r);
FRACMOM_API long fracmom_report_unregistered_failures(const fracmom_report* r);

typedef enum fracmom_report_field {
  FRACMOM_REPORT_SUITE = 0,
  FRACMOM_REPORT_NAME = 1,
  FRACMOM_REPORT_PARAMS = 2,
  FRACMOM_REPORT_DETAIL = 3
} fracmom_report_field;

/* NULL when i is out of range. */
FRACMOM_API const char* fracmom_report_text(const fracmom_report* r, size_t i, fracmom_report_field field);
FRACMOM_API int fracmom_report_pass(const fracmom_report* r, size_t i);
FRACMOM_API int fracmom_report_known(const fracmom_report* r, size_t i);

FRACMOM_API const char* fracmom_builtin_registry(void);

/* Parses a symbolic expression (e.g. "1 - gamma") and writes its decimal
 * value with `precision` digits after the point to *out. */
FRACMOM_API fracmom_status fracmom_symbolic_eval(const char* expr, int precision, char** out);
FRACMOM_API void fracmom_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FRACMOM_FRACMOM_H_ */
