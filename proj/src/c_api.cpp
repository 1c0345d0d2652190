// SPDX-License-Identifier: Apache-2.0
//
// uavirs: trajectory, phase-shift and scheduling design for UAV-assisted
// IRS symbiotic radio
// Copyright (C) 2026 The uavirs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "uavirs/uavirs.h"

#include "uavirs/benchmarks.hpp"
#include "uavirs/errors.hpp"
#include "uavirs/fairness.hpp"
#include "uavirs/results_io.hpp"
#include "uavirs/scenario.hpp"
#include "uavirs/verify.hpp"
#include "uavirs/weighted_sum.hpp"

#include "log.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

struct uavirs_scenario
{
    uavirs::Scenario s;
};

struct uavirs_solution
{
    uavirs::Scenario s;
    uavirs::Solution sol;
};

struct uavirs_report
{
    std::string text;
    bool passed = false;
};

namespace
{

thread_local std::string last_error;

uavirs_status fail(uavirs_status code, const std::string &msg)
{
    last_error = msg;
    return code;
}

// Runs f and maps library exceptions onto status codes.
template <class F> uavirs_status guarded(F &&f)
{
    try
    {
        last_error.clear();
        f();
        return UAVIRS_OK;
    }
    catch (const uavirs::ParseError &e)
    {
        return fail(UAVIRS_ERR_PARSE, e.what());
    }
    catch (const uavirs::ValidationError &e)
    {
        return fail(UAVIRS_ERR_VALIDATION, e.what());
    }
    catch (const uavirs::IoError &e)
    {
        return fail(UAVIRS_ERR_IO, e.what());
    }
    catch (const uavirs::InfeasibleError &e)
    {
        return fail(UAVIRS_ERR_INFEASIBLE, e.what());
    }
    catch (const uavirs::SolverError &e)
    {
        return fail(UAVIRS_ERR_SOLVER, e.what());
    }
    catch (const uavirs::DimensionMismatch &e)
    {
        return fail(UAVIRS_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const uavirs::InvalidInput &e)
    {
        return fail(UAVIRS_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const uavirs::DegenerateChannel &e)
    {
        return fail(UAVIRS_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const std::bad_alloc &)
    {
        return fail(UAVIRS_ERR_INTERNAL, "out of memory");
    }
    catch (const std::exception &e)
    {
        return fail(UAVIRS_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(UAVIRS_ERR_INTERNAL, "unknown exception");
    }
}

uavirs_status null_argument(const char *name) { return fail(UAVIRS_ERR_INVALID_ARGUMENT, std::string(name) + " is null"); }

void log_warnings(const uavirs::Scenario &s)
{
    for (const std::string &w : uavirs::scenario_warnings(s))
        uavirs::logger()->warn("scenario: {}", w);
}

std::vector<std::string> split_list(const char *text)
{
    std::vector<std::string> out;
    if (text == nullptr)
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

template <class Run> uavirs_status optimize(const uavirs_scenario *scn, uavirs_solution **out, Run run, const char *name)
{
    if (scn == nullptr)
        return null_argument("scenario");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        uavirs::validate(scn->s);
        const auto t0 = std::chrono::steady_clock::now();
        auto res = std::make_unique<uavirs_solution>();
        res->s = scn->s;
        res->sol = run(scn->s);
        res->sol.report.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        uavirs::logger()->info("{}: {} after {} iterations in {:.3f} s", name, uavirs::to_string(res->sol.report.status),
                               res->sol.report.iterations, res->sol.report.wall_time_s);
        *out = res.release();
    });
}

} // namespace

extern "C" {

const char *uavirs_version(void) { return "1.0.0"; }

const char *uavirs_status_name(uavirs_status status)
{
    switch (status)
    {
    case UAVIRS_OK:
        return "ok";
    case UAVIRS_ERR_PARSE:
        return "parse error";
    case UAVIRS_ERR_VALIDATION:
        return "validation error";
    case UAVIRS_ERR_IO:
        return "i/o error";
    case UAVIRS_ERR_INFEASIBLE:
        return "infeasible";
    case UAVIRS_ERR_SOLVER:
        return "solver failure";
    case UAVIRS_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case UAVIRS_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown";
}

const char *uavirs_last_error(void) { return last_error.c_str(); }

uavirs_status uavirs_scenario_default(uavirs_scenario **out)
{
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new uavirs_scenario{uavirs::default_scenario()}; });
}

uavirs_status uavirs_scenario_load(const char *path, uavirs_scenario **out)
{
    if (path == nullptr)
        return null_argument("path");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        uavirs::Scenario s = uavirs::load_scenario(path);
        log_warnings(s);
        *out = new uavirs_scenario{std::move(s)};
    });
}

uavirs_status uavirs_scenario_parse(const char *json, uavirs_scenario **out)
{
    if (json == nullptr)
        return null_argument("json");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        uavirs::Scenario s = uavirs::parse_scenario(json);
        log_warnings(s);
        *out = new uavirs_scenario{std::move(s)};
    });
}

uavirs_status uavirs_scenario_save(const uavirs_scenario *scn, const char *path)
{
    if (scn == nullptr)
        return null_argument("scenario");
    if (path == nullptr)
        return null_argument("path");
    return guarded([&] { uavirs::save_scenario(scn->s, path); });
}

uavirs_status uavirs_scenario_coarsen(uavirs_scenario *scn)
{
    if (scn == nullptr)
        return null_argument("scenario");
    return guarded([&] { scn->s = uavirs::coarsen(scn->s); });
}

uavirs_status uavirs_scenario_set_seed(uavirs_scenario *scn, uint64_t seed)
{
    if (scn == nullptr)
        return null_argument("scenario");
    scn->s.rng_seed = seed;
    last_error.clear();
    return UAVIRS_OK;
}

uavirs_status uavirs_scenario_dims(const uavirs_scenario *scn, int *K, int *M, int *N)
{
    if (scn == nullptr)
        return null_argument("scenario");
    if (K)
        *K = scn->s.K();
    if (M)
        *M = scn->s.M;
    if (N)
        *N = scn->s.N;
    last_error.clear();
    return UAVIRS_OK;
}

uavirs_status uavirs_scenario_to_json(const uavirs_scenario *scn, char *buffer, size_t capacity, size_t *needed)
{
    if (scn == nullptr)
        return null_argument("scenario");
    return guarded([&] {
        const std::string text = uavirs::scenario_to_json(scn->s);
        if (needed)
            *needed = text.size() + 1;
        if (buffer != nullptr && capacity > 0)
        {
            const size_t n = std::min(capacity - 1, text.size());
            std::memcpy(buffer, text.data(), n);
            buffer[n] = '\0';
        }
    });
}

void uavirs_scenario_free(uavirs_scenario *scn) { delete scn; }

uavirs_status uavirs_optimize_weighted_sum(const uavirs_scenario *scn, uavirs_solution **out)
{
    return optimize(scn, out, [](const uavirs::Scenario &s) { return uavirs::run_weighted_sum(s); }, "weighted-sum");
}

uavirs_status uavirs_optimize_fairness(const uavirs_scenario *scn, uavirs_solution **out)
{
    return optimize(scn, out, [](const uavirs::Scenario &s) { return uavirs::run_fairness(s); }, "fairness");
}

uavirs_status uavirs_solution_summary(const uavirs_solution *sol, uavirs_summary *out)
{
    if (sol == nullptr)
        return null_argument("solution");
    if (out == nullptr)
        return null_argument("out");
    const uavirs::SolveReport &r = sol->sol.report;
    out->status = static_cast<uavirs_solve_status>(r.status);
    out->iterations = r.iterations;
    out->outer_iterations = r.outer_iterations;
    out->non_binary = r.non_binary ? 1 : 0;
    out->objective = r.objective;
    out->upper_bound = r.upper_bound;
    out->rate_margin = r.rate_margin;
    out->binariness = r.binariness;
    out->xi = r.xi;
    last_error.clear();
    return UAVIRS_OK;
}

uavirs_status uavirs_solution_trajectory(const uavirs_solution *sol, double *xy, size_t capacity, size_t *count)
{
    if (sol == nullptr)
        return null_argument("solution");
    const auto &q = sol->sol.trajectory.q;
    if (count)
        *count = 2 * q.size();
    if (xy != nullptr)
    {
        if (capacity < 2 * q.size())
            return fail(UAVIRS_ERR_INVALID_ARGUMENT, "trajectory buffer too small");
        for (size_t i = 0; i < q.size(); ++i)
        {
            xy[2 * i] = q[i].x;
            xy[2 * i + 1] = q[i].y;
        }
    }
    last_error.clear();
    return UAVIRS_OK;
}

uavirs_status uavirs_solution_schedule(const uavirs_solution *sol, double *a, size_t capacity, size_t *count)
{
    if (sol == nullptr)
        return null_argument("solution");
    const uavirs::Schedule &s = sol->sol.schedule;
    const size_t total = static_cast<size_t>(s.size());
    if (count)
        *count = total;
    if (a != nullptr)
    {
        if (capacity < total)
            return fail(UAVIRS_ERR_INVALID_ARGUMENT, "schedule buffer too small");
        for (Eigen::Index n = 0; n < s.cols(); ++n)
            for (Eigen::Index k = 0; k < s.rows(); ++k)
                a[n * s.rows() + k] = s(k, n);
    }
    last_error.clear();
    return UAVIRS_OK;
}

uavirs_status uavirs_solution_trace(const uavirs_solution *sol, double *objective, double *xi, size_t capacity,
                                    size_t *count)
{
    if (sol == nullptr)
        return null_argument("solution");
    const uavirs::SolveReport &r = sol->sol.report;
    const size_t n = r.objective_trace.size();
    if (count)
        *count = n;
    if ((objective != nullptr || xi != nullptr) && capacity < n)
        return fail(UAVIRS_ERR_INVALID_ARGUMENT, "trace buffer too small");
    for (size_t i = 0; i < n; ++i)
    {
        if (objective)
            objective[i] = r.objective_trace[i];
        if (xi)
            xi[i] = i < r.xi_trace.size() ? r.xi_trace[i] : 0.0;
    }
    last_error.clear();
    return UAVIRS_OK;
}

uavirs_status uavirs_solution_save(const uavirs_solution *sol, const char *dir)
{
    if (sol == nullptr)
        return null_argument("solution");
    if (dir == nullptr)
        return null_argument("dir");
    return guarded(
        [&] { uavirs::save_results(sol->s, sol->sol.report, sol->sol.trajectory, sol->sol.schedule, dir); });
}

void uavirs_solution_free(uavirs_solution *sol) { delete sol; }

uavirs_status uavirs_run_benchmarks(const uavirs_scenario *scn, uavirs_sweep sweep, const char *schemes,
                                    const char *objectives, const char *csv_path, size_t *rows)
{
    if (scn == nullptr)
        return null_argument("scenario");
    if (csv_path == nullptr)
        return null_argument("csv_path");
    return guarded([&] {
        uavirs::validate(scn->s);
        uavirs::CompareOptions opt;
        opt.schemes = split_list(schemes);
        if (objectives != nullptr)
        {
            const std::string o(objectives);
            if (o != "wsb" && o != "fair")
                throw uavirs::InvalidInput("objective must be wsb or fair");
            opt.weighted_sum = o == "wsb";
            opt.fairness = o == "fair";
        }
        uavirs::Sweep sw = uavirs::Sweep::None;
        if (sweep == UAVIRS_SWEEP_PERIOD)
            sw = uavirs::Sweep::Period;
        else if (sweep == UAVIRS_SWEEP_ELEMENTS)
            sw = uavirs::Sweep::Elements;
        else if (sweep != UAVIRS_SWEEP_NONE)
            throw uavirs::InvalidInput("unknown sweep");
        const auto table = uavirs::compare_schemes(scn->s, sw, opt);
        uavirs::write_comparison_csv(table, csv_path);
        if (rows)
            *rows = table.size();
    });
}

uavirs_status uavirs_verify(const uavirs_scenario *scn, uint64_t seed, uavirs_report **out)
{
    if (scn == nullptr)
        return null_argument("scenario");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        uavirs::validate(scn->s);
        uavirs::VerifyOptions opt;
        opt.seed = seed;
        const uavirs::VerifyReport r = uavirs::run_verification(scn->s, opt);
        *out = new uavirs_report{r.text(), r.all_passed()};
    });
}

const char *uavirs_report_text(const uavirs_report *report) { return report ? report->text.c_str() : ""; }

int uavirs_report_passed(const uavirs_report *report) { return report && report->passed ? 1 : 0; }

void uavirs_report_free(uavirs_report *report) { delete report; }

} // extern "C"
