// Copyright 2026 The cryobudget Authors
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


/* C interface to the cryobudget heat-load and noise library.
 *
 * Every fallible function returns a cb_status. On failure a description is
 * available from cb_last_error() until the next call on the same thread.
 * Handles are opaque and must be released with the matching *_free call.
 * All strings are UTF-8 and owned by the library unless stated otherwise. */

#ifndef CRYOBUDGET_H
#define CRYOBUDGET_H

#include <stddef.h>

#if defined(CRYOBUDGET_BUILDING_LIBRARY)
#define CB_API __attribute__((visibility("default")))
#else
#define CB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cb_status {
  CB_OK = 0,
  CB_ERR_INVALID_ARGUMENT = 1,
  CB_ERR_RANGE = 2,
  CB_ERR_LOOKUP = 3,
  CB_ERR_TOPOLOGY = 4,
  CB_ERR_CONFIG = 5,
  CB_ERR_PARSE = 6,
  CB_ERR_DOMAIN = 7,
  CB_ERR_IO = 8,
  CB_ERR_FIT = 9,
  CB_ERR_INTERNAL = 10
} cb_status;

typedef struct cb_catalog cb_catalog;
typedef struct cb_project cb_project;
typedef struct cb_result cb_result;

CB_API const char* cb_version(void);
CB_API const char* cb_last_error(void);
CB_API const char* cb_status_name(cb_status status);

/* Materials and cables. A NULL path loads the bundled catalog. */
CB_API cb_status cb_catalog_load(const char* path, cb_catalog** out);
CB_API void cb_catalog_free(cb_catalog* catalog);
CB_API cb_status cb_conductivity_integral(const cb_catalog* catalog, const char* material,
                                          double t_low_K, double t_high_K, double* out_W_per_m);
CB_API cb_status cb_cable_attenuation_db(const cb_catalog* catalog, const char* cable,
                                         double frequency_Hz, double length_m, int cryogenic,
                                         double* out_dB);

/* Noise. */
CB_API cb_status cb_bose_einstein(double temperature_K, double frequency_Hz, double* out);
/* Cascade of `count` thermalized attenuators. A negative n_input selects the
 * room-temperature occupation. */
CB_API cb_status cb_cascade_photon_number(size_t count, const double* attenuation_dB,
                                          const double* temperature_K, double frequency_Hz,
                                          double n_input, double* out);

/* Signals. */
CB_API cb_status cb_pi_pulse_powers(double sigma_s, double duration_s, double qubit_omega,
                                    double* peak_W, double* average_W);
CB_API cb_status cb_flux_average_load(double r_eff_ohm, double i_max_A, double* out_W);

/* Projects: a configuration plus its resolved catalog. */
CB_API cb_status cb_project_open(const char* path, cb_project** out);
CB_API cb_status cb_project_open_preset(const char* name, cb_project** out);
CB_API cb_status cb_project_open_default(cb_project** out);
CB_API void cb_project_free(cb_project* project);
/* JSON array of preset names. Release with cb_string_free. */
CB_API char* cb_preset_names(void);
CB_API void cb_string_free(char* text);

/* Commands. Options are JSON objects; NULL or "" selects the defaults. */
CB_API cb_status cb_run_passive(const cb_project* project, const char* options_json,
                                cb_result** out);
CB_API cb_status cb_run_noise(const cb_project* project, const char* options_json,
                              cb_result** out);
CB_API cb_status cb_run_budget(const cb_project* project, cb_result** out);
CB_API cb_status cb_run_optimize(const cb_project* project, const char* options_json,
                                 cb_result** out);
CB_API cb_status cb_run_sweep(const cb_project* project, const char* options_json,
                              cb_result** out);
CB_API cb_status cb_run_fit(const cb_project* project, size_t count, const char* const* origins,
                            const char* const* texts, const char* options_json,
                            cb_result** out);

CB_API size_t cb_result_artifact_count(const cb_result* result);
CB_API const char* cb_result_artifact_name(const cb_result* result, size_t index);
CB_API const char* cb_result_artifact_content(const cb_result* result, size_t index);
CB_API const char* cb_result_summary(const cb_result* result);
CB_API size_t cb_result_notice_count(const cb_result* result);
CB_API const char* cb_result_notice(const cb_result* result, size_t index);
CB_API void cb_result_free(cb_result* result);

#ifdef __cplusplus
}
#endif

#endif /* CRYOBUDGET_H */
