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

#include <catch2/catch_amalgamated.hpp>

#include "uavirs/uavirs.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

namespace
{

struct ScenarioHandle
{
    uavirs_scenario *p = nullptr;
    ~ScenarioHandle() { uavirs_scenario_free(p); }
};

struct SolutionHandle
{
    uavirs_solution *p = nullptr;
    ~SolutionHandle() { uavirs_solution_free(p); }
};

} // namespace

TEST_CASE("version and status names", "[capi]")
{
    CHECK(std::string(uavirs_version()).size() > 0);
    CHECK(std::string(uavirs_status_name(UAVIRS_OK)) == "ok");
    CHECK(std::string(uavirs_status_name(UAVIRS_ERR_VALIDATION)).size() > 0);
    CHECK(std::string(uavirs_status_name(static_cast<uavirs_status>(99))).size() > 0);
}

TEST_CASE("scenario handles", "[capi]")
{
    ScenarioHandle h;
    REQUIRE(uavirs_scenario_default(&h.p) == UAVIRS_OK);
    int K = 0, M = 0, N = 0;
    REQUIRE(uavirs_scenario_dims(h.p, &K, &M, &N) == UAVIRS_OK);
    CHECK(K == 5);
    CHECK(M == 50);
    CHECK(N == 400);
    REQUIRE(uavirs_scenario_coarsen(h.p) == UAVIRS_OK);
    REQUIRE(uavirs_scenario_dims(h.p, &K, &M, &N) == UAVIRS_OK);
    CHECK(N == 40);
    CHECK(uavirs_scenario_set_seed(h.p, 77) == UAVIRS_OK);

    size_t needed = 0;
    REQUIRE(uavirs_scenario_to_json(h.p, nullptr, 0, &needed) == UAVIRS_OK);
    REQUIRE(needed > 2);
    std::vector<char> full(needed);
    REQUIRE(uavirs_scenario_to_json(h.p, full.data(), full.size(), &needed) == UAVIRS_OK);
    CHECK(std::string(full.data()).size() + 1 == needed);
    CHECK(std::string(full.data()).find("\"rng_seed\": 77") != std::string::npos);

    char small[8];
    size_t again = 0;
    REQUIRE(uavirs_scenario_to_json(h.p, small, sizeof small, &again) == UAVIRS_OK);
    CHECK(again == needed);
    CHECK(std::string(small) == std::string(full.data()).substr(0, 7));

    ScenarioHandle back;
    REQUIRE(uavirs_scenario_parse(full.data(), &back.p) == UAVIRS_OK);
    std::vector<char> second(needed);
    REQUIRE(uavirs_scenario_to_json(back.p, second.data(), second.size(), nullptr) == UAVIRS_OK);
    CHECK(std::string(second.data()) == std::string(full.data()));
}

TEST_CASE("error codes and last error", "[capi]")
{
    ScenarioHandle h;
    CHECK(uavirs_scenario_parse("{ not json", &h.p) == UAVIRS_ERR_PARSE);
    CHECK(h.p == nullptr);
    CHECK(std::string(uavirs_last_error()).size() > 0);

    CHECK(uavirs_scenario_parse("{\"rho\": 1.5}", &h.p) == UAVIRS_ERR_VALIDATION);
    CHECK(std::string(uavirs_last_error()).find("rho") != std::string::npos);

    CHECK(uavirs_scenario_load("/nonexistent/dir/x.json", &h.p) == UAVIRS_ERR_IO);
    CHECK(uavirs_scenario_default(nullptr) == UAVIRS_ERR_INVALID_ARGUMENT);
    CHECK(uavirs_scenario_dims(nullptr, nullptr, nullptr, nullptr) == UAVIRS_ERR_INVALID_ARGUMENT);

    REQUIRE(uavirs_scenario_default(&h.p) == UAVIRS_OK);
    CHECK(std::string(uavirs_last_error()).empty());

    ScenarioHandle hard;
    REQUIRE(uavirs_scenario_parse("{\"period_s\": 40, \"slot_s\": 1, \"R_th\": 60}", &hard.p) == UAVIRS_OK);
    SolutionHandle sol;
    CHECK(uavirs_optimize_weighted_sum(hard.p, &sol.p) == UAVIRS_ERR_INFEASIBLE);
    CHECK(sol.p == nullptr);

    uavirs_scenario_free(nullptr);
    uavirs_solution_free(nullptr);
    uavirs_report_free(nullptr);
}

TEST_CASE("weighted-sum solution through the C API", "[capi]")
{
    ScenarioHandle h;
    REQUIRE(uavirs_scenario_default(&h.p) == UAVIRS_OK);
    REQUIRE(uavirs_scenario_coarsen(h.p) == UAVIRS_OK);
    SolutionHandle sol;
    REQUIRE(uavirs_optimize_weighted_sum(h.p, &sol.p) == UAVIRS_OK);

    uavirs_summary sum{};
    REQUIRE(uavirs_solution_summary(sol.p, &sum) == UAVIRS_OK);
    CHECK(sum.objective > 0.0);
    CHECK(sum.objective <= sum.upper_bound);
    CHECK(sum.rate_margin >= 0.0);
    CHECK(sum.iterations >= 1);

    size_t count = 0;
    REQUIRE(uavirs_solution_trajectory(sol.p, nullptr, 0, &count) == UAVIRS_OK);
    CHECK(count == 2 * 41);
    std::vector<double> xy(count);
    CHECK(uavirs_solution_trajectory(sol.p, xy.data(), count - 1, &count) == UAVIRS_ERR_INVALID_ARGUMENT);
    REQUIRE(uavirs_solution_trajectory(sol.p, xy.data(), xy.size(), &count) == UAVIRS_OK);
    CHECK(xy[0] == 15.0);
    CHECK(xy[1] == 0.0);

    REQUIRE(uavirs_solution_schedule(sol.p, nullptr, 0, &count) == UAVIRS_OK);
    CHECK(count == 5 * 40);
    std::vector<double> a(count);
    REQUIRE(uavirs_solution_schedule(sol.p, a.data(), a.size(), &count) == UAVIRS_OK);
    for (int n = 0; n < 40; ++n)
    {
        double col = 0.0;
        for (int k = 0; k < 5; ++k)
        {
            const double v = a[static_cast<size_t>(n * 5 + k)];
            CHECK((v == 0.0 || v == 1.0));
            col += v;
        }
        CHECK(col <= 1.0);
    }

    REQUIRE(uavirs_solution_trace(sol.p, nullptr, nullptr, 0, &count) == UAVIRS_OK);
    CHECK(static_cast<int>(count) == sum.iterations + 1);
    std::vector<double> obj(count), xi(count);
    REQUIRE(uavirs_solution_trace(sol.p, obj.data(), xi.data(), count, &count) == UAVIRS_OK);
    CHECK(obj.back() == Catch::Approx(sum.objective).epsilon(1e-9));

    const auto dir = std::filesystem::temp_directory_path() / "uavirs_capi_save";
    std::filesystem::remove_all(dir);
    REQUIRE(uavirs_solution_save(sol.p, dir.string().c_str()) == UAVIRS_OK);
    CHECK(std::filesystem::exists(dir / "summary.json"));
    CHECK(std::filesystem::exists(dir / "trajectory.csv"));

    const auto csv = dir / "bench.csv";
    size_t rows = 0;
    REQUIRE(uavirs_run_benchmarks(h.p, UAVIRS_SWEEP_NONE, "fixed-pi,upper-bound", "wsb", csv.string().c_str(),
                                  &rows) == UAVIRS_OK);
    CHECK(rows == 2);
    CHECK(uavirs_run_benchmarks(h.p, UAVIRS_SWEEP_NONE, "nope", "wsb", csv.string().c_str(), &rows) ==
          UAVIRS_ERR_INVALID_ARGUMENT);
}
