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

#include "test_support.hpp"
#include "uavirs/errors.hpp"
#include "uavirs/scenario.hpp"

#include <random>

using namespace uavirs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("default scenario carries the simulation constants", "[scenario]")
{
    const Scenario s = default_scenario();
    REQUIRE(s.K() == 5);
    CHECK(s.irs[0] == Vec2{30.0, 30.0});
    CHECK(s.irs[1] == Vec2{-30.0, 30.0});
    CHECK(s.irs[2] == Vec2{-40.0, 0.0});
    CHECK(s.irs[3] == Vec2{-30.0, -30.0});
    CHECK(s.irs[4] == Vec2{30.0, -30.0});
    CHECK(s.w == std::vector<double>(5, 1.0));
    CHECK_THAT(s.sigma2, WithinRel(1e-9, 1e-14));
    CHECK_THAT(s.beta0, WithinRel(1e-3, 1e-14));
    CHECK_THAT(s.P, WithinRel(0.1, 1e-14));
    CHECK_THAT(s.K1, WithinRel(10.0, 1e-14));
    CHECK_THAT(s.K3, WithinRel(10.0, 1e-14));
    CHECK(s.H_u == 30.0);
    CHECK(s.H_s == 10.0);
    CHECK(s.H_b == 10.0);
    CHECK(s.v_max == 10.0);
    CHECK(s.q_init == Vec2{15.0, 0.0});
    CHECK(s.q_final == Vec2{15.0, 0.0});
    CHECK(s.alpha1 == 2.4);
    CHECK(s.rho == 0.5);
    CHECK(s.algo.eta0 == 500.0);
    CHECK(s.algo.c_scale == 0.7);
    CHECK(s.algo.eps1 == 1e-3);
    CHECK(s.algo.eps2 == 1e-10);
    CHECK(s.algo.r_max == 300);
    // 299792458 / 755e6 to 20 digits
    CHECK_THAT(s.lambda, WithinRel(0.39707610331125827815, 1e-15));
    CHECK_THAT(s.element_spacing(), WithinRel(0.5 * 0.39707610331125827815, 1e-15));
}

TEST_CASE("slot count follows period over slot length", "[scenario]")
{
    const Scenario s = default_scenario();
    CHECK(s.N == 400);
    CHECK_THAT(s.period(), WithinRel(40.0, 1e-15));

    const Scenario c = coarsen(s);
    CHECK(c.N == 40);
    CHECK(c.delta == 1.0);

    CHECK(with_period(c, 10.0).N == 10);
    CHECK_THROWS_AS(with_period(c, 10.5), ValidationError);
    CHECK_THROWS_AS(with_period(c, -1.0), ValidationError);
}

TEST_CASE("dB conversions round trip", "[scenario]")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> expo(-15.0, 3.0);
    for (int i = 0; i < 1000; ++i)
    {
        const double x = std::pow(10.0, expo(rng));
        CHECK_THAT(db_to_linear(linear_to_db(x)), WithinRel(x, 1e-12));
        CHECK_THAT(dbm_to_watt(watt_to_dbm(x)), WithinRel(x, 1e-12));
    }
    CHECK_THAT(dbm_to_watt(-60.0), WithinRel(1e-9, 1e-14));
    CHECK_THAT(dbm_to_watt(20.0), WithinRel(0.1, 1e-14));
    CHECK_THAT(db_to_linear(-30.0), WithinRel(1e-3, 1e-14));
}

TEST_CASE("scenario files in dB units load as linear values", "[scenario]")
{
    const auto dir = test_support::fresh_dir("scenario_load");
    const auto path = dir / "s.json";
    test_support::write_file(path, R"({
        "period_s": 40, "slot_s": 0.1,
        "P_dBm": 20, "sigma2_dBm": -60, "beta0_dB": -30,
        "rician_dB": [10, 10, 10], "carrier_hz": 755e6,
        "algo": {"c_scale": 0.7}
    })");
    const Scenario s = load_scenario(path.string());
    CHECK_THAT(s.sigma2, WithinRel(1e-9, 1e-14));
    CHECK_THAT(s.beta0, WithinRel(1e-3, 1e-14));
    CHECK_THAT(s.P, WithinRel(0.1, 1e-14));
    CHECK_THAT(s.K2, WithinRel(10.0, 1e-14));
    CHECK(s.N == 400);
    CHECK(s.algo.eta0 == 500.0);
    CHECK(s.algo.r_max == 300);
    CHECK(s.rho == 0.5);
}

TEST_CASE("invalid and malformed scenario files are rejected", "[scenario]")
{
    try
    {
        parse_scenario(R"({"rho": 1.5})");
        FAIL("rho = 1.5 accepted");
    }
    catch (const ValidationError &e)
    {
        CHECK(e.field() == "rho");
    }
    CHECK_THROWS_AS(parse_scenario("{\"M\": "), ParseError);
    CHECK_THROWS_AS(parse_scenario("[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"no_such_key": 1})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"P_W": 0.1, "P_dBm": 20})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"M": 2.5})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"algo": {"c_scale": 1.2}})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"irs": [[1, 2]], "w": [1, 1]})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"N": 4, "period_s": 40})"), ValidationError);
    CHECK_THROWS_AS(load_scenario("/nonexistent/dir/scenario.json"), IoError);

    try
    {
        parse_scenario(R"({"period_s": 2, "slot_s": 1, "q_final": [100, 0]})");
        FAIL("unreachable end point accepted");
    }
    catch (const ValidationError &e)
    {
        CHECK(e.field() == "q_final");
    }
}

TEST_CASE("large per-slot displacement raises a warning", "[scenario]")
{
    CHECK(scenario_warnings(default_scenario()).empty());
    // 10 m/s over 1 s slots exceeds 0.2 * 30 m.
    CHECK(scenario_warnings(test_support::coarse_default()).size() == 1);
}

TEST_CASE("saved scenarios reload unchanged", "[scenario]")
{
    const auto dir = test_support::fresh_dir("scenario_roundtrip");
    Scenario s = test_support::coarse_default();
    s.M = 17;
    s.rho = 0.25;
    s.w = {1.0, 0.5, 2.0, 0.0, 1.5};
    s.K2 = 3.3;
    s.algo.barrier.mu_factor = 7.0;
    s.rng_seed = 18446744073709551615ULL;
    const auto path = (dir / "s.json").string();
    save_scenario(s, path);
    const Scenario back = load_scenario(path);
    CHECK(back == s);
    CHECK(scenario_to_json(back) == scenario_to_json(s));
    CHECK_THROWS_AS(save_scenario(s, (dir / "missing" / "s.json").string()), IoError);
}
