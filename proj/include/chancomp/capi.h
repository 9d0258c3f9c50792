/* Copyright 2026 The chancomp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the channel-compatibility library. All entry points run a
 * full computation and hand back an opaque report holding CSV or JSON text;
 * callers own the report until chancomp_report_free. Functions return
 * CHANCOMP_OK on success; on failure chancomp_last_error() carries a
 * thread-local message. */

#ifndef CHANCOMP_CAPI_H
#define CHANCOMP_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chancomp_status {
  CHANCOMP_OK = 0,
  CHANCOMP_ERR_INVALID_ARGUMENT = 1,
  CHANCOMP_ERR_INTERNAL = 2
} chancomp_status;

typedef struct chancomp_report chancomp_report; /* opaque */

typedef struct chancomp_region_config {
  int grid_n;      /* >= 2; default 101 */
  double tol;      /* boundary tolerance band; default 1e-9 */
  uint64_t seed;   /* recorded in JSON metadata */
  int json;        /* 0 = CSV, 1 = JSON */
} chancomp_region_config;

typedef struct chancomp_certify_config {
  int cert_grid;      /* Fibonacci lattice size; default 200 */
  int cert_samples;   /* extra random product pairs; default 10000 */
  uint64_t seed;      /* default 12345 */
  double tol;         /* default 1e-9 */
  double gamma;       /* cross coefficient override; NaN = default eta1*eta2 */
} chancomp_certify_config;

typedef struct chancomp_lemmas_config {
  uint64_t seed;            /* default 12345 */
  long clifford_samples;    /* default 10000 */
  long simplex_samples;     /* default 1000000 */
  long jm_samples;          /* default 100000 */
  const double* dist8;      /* optional 8-entry distribution to check, or NULL */
} chancomp_lemmas_config;

void chancomp_region_config_init(chancomp_region_config* cfg);
void chancomp_certify_config_init(chancomp_certify_config* cfg);
void chancomp_lemmas_config_init(chancomp_lemmas_config* cfg);

/* Region sweep over an inclusive grid_n x grid_n grid of (eta1, eta2):
 * per-point quantum / almost-quantum / min-tensor classification. */
chancomp_status chancomp_region_run(const chancomp_region_config* cfg, chancomp_report** out);

/* Point certification: predicates, min-tensor joint certificate, quantum
 * joint construction when compatible, and the doubled-coefficient
 * regression. JSON. */
chancomp_status chancomp_certify_run(double eta1, double eta2,
                                     const chancomp_certify_config* cfg, chancomp_report** out);

/* Lemma property sweeps (anticommuting-set bound, tripartite correlation
 * inequality, joint-measurability criterion equivalence). JSON. */
chancomp_status chancomp_lemmas_run(const chancomp_lemmas_config* cfg, chancomp_report** out);

const char* chancomp_report_text(const chancomp_report* rep);
size_t chancomp_report_size(const chancomp_report* rep);
/* Violations found where theory predicts none (regression alarms). */
int chancomp_report_alarms(const chancomp_report* rep);
void chancomp_report_free(chancomp_report* rep);

const char* chancomp_last_error(void);
const char* chancomp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CHANCOMP_CAPI_H */
