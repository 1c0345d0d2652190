/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * uavirs: trajectory, phase-shift and scheduling design for UAV-assisted
 * IRS symbiotic radio
 * Copyright (C) 2026 The uavirs authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 */

#ifndef UAVIRS_H
#define UAVIRS_H

#include <stddef.h>
#include <stdint.h>

#if defined(UAVIRS_BUILDING_LIBRARY)
#define UAVIRS_API __attribute__((visibility("default")))
#else
#define UAVIRS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uavirs_status
{
    UAVIRS_OK = 0,
    UAVIRS_ERR_PARSE = 1,
    UAVIRS_ERR_VALIDATION = 2,
    UAVIRS_ERR_IO = 3,
    UAVIRS_ERR_INFEASIBLE = 4,
    UAVIRS_ERR_SOLVER = 5,
    UAVIRS_ERR_INVALID_ARGUMENT = 6,
    UAVIRS_ERR_INTERNAL = 7
} uavirs_status;

/* Termination status of a solve. */
typedef enum uavirs_solve_status
{
    UAVIRS_SOLVE_CONVERGED = 0,
    UAVIRS_SOLVE_MAX_ITER = 1,
    UAVIRS_SOLVE_INFEASIBLE = 2,
    UAVIRS_SOLVE_NON_CONVERGED = 3
} uavirs_solve_status;

typedef enum uavirs_sweep
{
    UAVIRS_SWEEP_NONE = 0,
    UAVIRS_SWEEP_PERIOD = 1,
    UAVIRS_SWEEP_ELEMENTS = 2
} uavirs_sweep;

typedef struct uavirs_scenario uavirs_scenario;
typedef struct uavirs_solution uavirs_solution;
typedef struct uavirs_report uavirs_report;

typedef struct uavirs_summary
{
    uavirs_solve_status status;
    int iterations;
    int outer_iterations;
    int non_binary;
    double objective;
    double upper_bound;
    double rate_margin;
    double binariness;
    double xi;
} uavirs_summary;

UAVIRS_API const char *uavirs_version(void);
UAVIRS_API const char *uavirs_status_name(uavirs_status status);

/* Message of the last failed call on this thread; empty if none. */
UAVIRS_API const char *uavirs_last_error(void);

UAVIRS_API uavirs_status uavirs_scenario_default(uavirs_scenario **out);
UAVIRS_API uavirs_status uavirs_scenario_load(const char *path, uavirs_scenario **out);
UAVIRS_API uavirs_status uavirs_scenario_parse(const char *json, uavirs_scenario **out);
UAVIRS_API uavirs_status uavirs_scenario_save(const uavirs_scenario *scn, const char *path);
/* Switches to 1 s slots, keeping the period. */
UAVIRS_API uavirs_status uavirs_scenario_coarsen(uavirs_scenario *scn);
UAVIRS_API uavirs_status uavirs_scenario_set_seed(uavirs_scenario *scn, uint64_t seed);
UAVIRS_API uavirs_status uavirs_scenario_dims(const uavirs_scenario *scn, int *K, int *M, int *N);
/* Writes at most capacity bytes including the terminator; *needed receives
   the full size including the terminator. buffer may be NULL. */
UAVIRS_API uavirs_status uavirs_scenario_to_json(const uavirs_scenario *scn, char *buffer, size_t capacity,
                                                 size_t *needed);
UAVIRS_API void uavirs_scenario_free(uavirs_scenario *scn);

UAVIRS_API uavirs_status uavirs_optimize_weighted_sum(const uavirs_scenario *scn, uavirs_solution **out);
UAVIRS_API uavirs_status uavirs_optimize_fairness(const uavirs_scenario *scn, uavirs_solution **out);

UAVIRS_API uavirs_status uavirs_solution_summary(const uavirs_solution *sol, uavirs_summary *out);
/* N+1 points as interleaved x, y pairs; capacity counts doubles. */
UAVIRS_API uavirs_status uavirs_solution_trajectory(const uavirs_solution *sol, double *xy, size_t capacity,
                                                    size_t *count);
/* K x N schedule, slot-major: a[n * K + k]. */
UAVIRS_API uavirs_status uavirs_solution_schedule(const uavirs_solution *sol, double *a, size_t capacity,
                                                  size_t *count);
/* Objective and violation traces, one entry per AO iteration. */
UAVIRS_API uavirs_status uavirs_solution_trace(const uavirs_solution *sol, double *objective, double *xi,
                                               size_t capacity, size_t *count);
/* Writes the CSV tables and summary.json under dir. */
UAVIRS_API uavirs_status uavirs_solution_save(const uavirs_solution *sol, const char *dir);
UAVIRS_API void uavirs_solution_free(uavirs_solution *sol);

/* Runs the scheme comparison and writes it as CSV to csv_path. schemes is a
   comma-separated list or NULL for all; objectives is "wsb", "fair" or NULL
   for both. */
UAVIRS_API uavirs_status uavirs_run_benchmarks(const uavirs_scenario *scn, uavirs_sweep sweep, const char *schemes,
                                               const char *objectives, const char *csv_path, size_t *rows);

/* Monte-Carlo oracle suites. */
UAVIRS_API uavirs_status uavirs_verify(const uavirs_scenario *scn, uint64_t seed, uavirs_report **out);
UAVIRS_API const char *uavirs_report_text(const uavirs_report *report);
UAVIRS_API int uavirs_report_passed(const uavirs_report *report);
UAVIRS_API void uavirs_report_free(uavirs_report *report);

#ifdef __cplusplus
}
#endif

#endif
