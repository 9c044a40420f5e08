/* Copyright 2026 The hyperconc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libhyperconc.
 *
 * Objects are opaque handles created by *_create / *_from_* functions and
 * released with the matching *_free. Every fallible call returns an
 * hc_status; on failure a message for the calling thread is available from
 * hc_last_error() until the next call on that thread. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * hc_string_free.
 */

#ifndef HYPERCONC_H_
#define HYPERCONC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HC_API __declspec(dllexport)
#else
#define HC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
    HC_OK = 0,
    HC_ERR_NORMALIZATION = 10,
    HC_ERR_MODE_COLLISION = 11,
    HC_ERR_UNKNOWN_MODE = 12,
    HC_ERR_INVALID_SLOT = 13,
    HC_ERR_BASIS_MISMATCH = 14,
    HC_ERR_OCCUPANCY = 15,
    HC_ERR_DEGENERATE_STATE = 20,
    HC_ERR_PROTOCOL_INVARIANT = 21,
    HC_ERR_VARIANT_MISMATCH = 22,
    HC_ERR_EMPTY_RECORDS = 23,
    HC_ERR_VARIANT_MIX = 24,
    HC_ERR_DOMAIN = 25,
    HC_ERR_PARSE = 30,
    HC_ERR_IO = 31,
    HC_ERR_INVALID_ARGUMENT = 32,
    HC_ERR_INTERNAL = 99
} hc_status;

typedef enum hc_variant { HC_VARIANT_PARTIAL = 0, HC_VARIANT_ARBITRARY = 1 } hc_variant;
typedef enum hc_mode { HC_MODE_ENUMERATE = 0, HC_MODE_MONTE_CARLO = 1 } hc_mode;
typedef enum hc_readout { HC_READOUT_HOMODYNE = 0, HC_READOUT_XQUAD = 1 } hc_readout;

typedef struct hc_spec hc_spec;
typedef struct hc_report hc_report;
typedef struct hc_sweep hc_sweep;

typedef struct hc_campaign_config {
    hc_variant variant;
    hc_mode mode;
    hc_readout readout;
    uint64_t trials;
    uint64_t seed;
    uint64_t batch_size;
    uint32_t jobs;
} hc_campaign_config;

typedef struct hc_oracle_values {
    double c_pol;
    double c_mom;
    double c_hyper;
} hc_oracle_values;

/* Library version string, e.g. "1.0.0". */
HC_API const char* hc_version(void);
HC_API const char* hc_status_name(hc_status status);
HC_API const char* hc_last_error(void);
HC_API void hc_string_free(char* s);

/* Defaults: arbitrary variant, Monte Carlo, homodyne, 100000 trials, seed 0,
 * batch size 10000, one worker. */
HC_API void hc_campaign_config_init(hc_campaign_config* cfg);

/* Pair specifications. Coefficients are interleaved (re, im) in the order
 * alpha, beta, gamma, delta: 8 doubles per block. */
HC_API hc_status hc_spec_from_file(const char* path, hc_spec** out);
HC_API hc_status hc_spec_from_json(const char* json, hc_spec** out);
HC_API hc_status hc_spec_from_coefficients(const double pol[8], const double mom[8], hc_spec** out);
HC_API hc_status hc_spec_get_coefficients(const hc_spec* spec, double pol[8], double mom[8]);
/* Sets one coefficient ("pol.alpha" ... "mom.delta") to a real value and
 * rescales the rest of its block to keep it normalized. */
HC_API hc_status hc_spec_with_coefficient(const hc_spec* spec, const char* parameter, double value,
                                          hc_spec** out);
HC_API hc_status hc_spec_to_json(const hc_spec* spec, char** out);
HC_API void hc_spec_free(hc_spec* spec);

HC_API hc_status hc_oracle(const hc_spec* spec, hc_oracle_values* out);
HC_API hc_status hc_oracle_report_json(const hc_spec* spec, char** out);

/* Runs a campaign. The config echo of the resulting report reproduces it. */
HC_API hc_status hc_run(const hc_spec* spec, const hc_campaign_config* cfg, hc_report** out);
/* Re-runs the campaign described by a report's config block. */
HC_API hc_status hc_replay(const char* report_json, uint32_t jobs, hc_report** out);
/* command: "enumerate" or "simulate"; recorded in the report. */
HC_API hc_status hc_report_json(const hc_report* report, const char* command, char** out);
HC_API hc_status hc_report_csv(const hc_report* report, char** out);
/* Point estimates by name: P_m, P_m_union, P_p, C_m, C_p, C_hyper,
 * C_p_literal, oracle_C_pol, oracle_C_mom, oracle_C_hyper; and interval
 * ends as "<name>.lower" / "<name>.upper". */
HC_API hc_status hc_report_get(const hc_report* report, const char* name, double* out);
HC_API void hc_report_free(hc_report* report);

/* Linear sweep of one coefficient over steps points from..to (inclusive). */
HC_API hc_status hc_sweep_run(const hc_spec* spec, const hc_campaign_config* cfg, const char* parameter,
                              double from, double to, uint32_t steps, hc_sweep** out);
HC_API hc_status hc_sweep_json(const hc_sweep* sweep, char** out);
HC_API hc_status hc_sweep_csv(const hc_sweep* sweep, char** out);
HC_API size_t hc_sweep_size(const hc_sweep* sweep);
HC_API void hc_sweep_free(hc_sweep* sweep);

#ifdef __cplusplus
}
#endif

#endif /* HYPERCONC_H_ */
