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
#include "uavirs/channel.hpp"
#include "uavirs/closed_forms.hpp"
#include "uavirs/fairness.hpp"
#include "uavirs/physical_layer.hpp"
#include "uavirs/sca_trajectory.hpp"
#include "uavirs/weighted_sum.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace uavirs;

namespace
{

Scenario random_scenario(std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> pos(-60.0, 60.0), unit(0.0, 1.0);
    Scenario s = test_support::coarse_default();
    const int K = 1 + static_cast<int>(rng() % 5);
    s.irs.clear();
    s.w.clear();
    for (int k = 0; k < K; ++k)
    {
        s.irs.push_back({pos(rng), pos(rng)});
        s.w.push_back(0.1 + 2.0 * unit(rng));
    }
    s.M = 1 + static_cast<int>(rng() % 80);
    s.K1 = 20.0 * unit(rng);
    s.K2 = 20.0 * unit(rng);
    s.K3 = 20.0 * unit(rng);
    s.rho = 0.05 + 0.9 * unit(rng);
    s.H_u = s.H_s + 5.0 + 40.0 * unit(rng);
    return s;
}

} // namespace

TEST_CASE("optimal phases dominate random phases", "[property]")
{
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> pos(-60.0, 60.0), ang(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 100; ++trial)
    {
        const Scenario s = random_scenario(rng);
        const LinkState ls = link_state_at(s, {pos(rng), pos(rng)});
        const int k = static_cast<int>(rng() % s.K());
        const double best = x0_sq_opt(s, ls, k, 0);
        CHECK(std::norm(x0_from_phases(s, ls, k, 0, optimal_phases_slot(s, ls, k, 0))) ==
              Catch::Approx(best).epsilon(1e-10));
        for (int j = 0; j < 10; ++j)
        {
            const Eigen::VectorXd ph = Eigen::VectorXd::NullaryExpr(s.M, [&] { return ang(rng); });
            CHECK(std::norm(x0_from_phases(s, ls, k, 0, ph)) <= best * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("rate and utility tables are finite and nonnegative", "[property]")
{
    std::mt19937_64 rng(72);
    std::uniform_real_distribution<double> pos(-80.0, 80.0);
    for (int trial = 0; trial < 100; ++trial)
    {
        const Scenario s = random_scenario(rng);
        const LinkState ls = link_state_at(s, {pos(rng), pos(rng)});
        const Eigen::MatrixXd U = utility_table(ls, s), R = rate_table(ls, s);
        CHECK(U.allFinite());
        CHECK(R.allFinite());
        CHECK((U.array() >= 0.0).all());
        CHECK((R.array() >= 0.0).all());
        for (int k = 0; k < s.K(); ++k)
            CHECK(U(k, 0) <= hover_utilities(s)(k) * (1.0 + 1e-12));
    }
}

TEST_CASE("slot scheduling beats every binary choice", "[property]")
{
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> pos(-30.0, 30.0);
    for (int trial = 0; trial < 60; ++trial)
    {
        Scenario s = random_scenario(rng);
        s.R_th = 0.5;
        Trajectory t;
        t.q.assign(static_cast<std::size_t>(s.N) + 1, s.q_init);
        for (int n = 1; n < s.N; ++n)
            t.q[static_cast<std::size_t>(n)] = {pos(rng), pos(rng)};
        if (!schedule_feasible(s, t))
            continue;
        const LinkState ls = link_state(s, t);
        const Eigen::MatrixXd U = utility_table(ls, s), R = rate_table(ls, s);
        const Schedule a = schedule_subproblem(s, ls);
        for (int n = 0; n < s.N; ++n)
        {
            double got = 0.0;
            for (int k = 0; k < s.K(); ++k)
                got += s.w[static_cast<std::size_t>(k)] * a(k, n) * U(k, n);
            for (int k = 0; k < s.K(); ++k)
                if (R(k, n) >= s.R_th)
                    CHECK(s.w[static_cast<std::size_t>(k)] * U(k, n) <= got * (1.0 + 1e-12) + 1e-15);
        }
    }
}

TEST_CASE("penalty helpers", "[property]")
{
    std::mt19937_64 rng(74);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial)
    {
        const Schedule a = Schedule::NullaryExpr(3, 4, [&] { return unit(rng); });
        const Schedule b = update_a_bar(a);
        CHECK((b.array() >= a.array() - 1e-15).all());
        CHECK((b.array() <= 1.0).all());
        CHECK(penalty_value(a, b, 0.5 + unit(rng)) >= 0.0);
        CHECK(violation(a, b) <= 1.0);
        CHECK(binariness_gap(a) <= 0.5);
    }
}

TEST_CASE("wrapped angles stay in range", "[property]")
{
    std::mt19937_64 rng(75);
    std::uniform_real_distribution<double> u(-1e4, 1e4);
    for (int trial = 0; trial < 2000; ++trial)
    {
        const double t = u(rng);
        const double w = wrap_angle(t);
        CHECK(w >= 0.0);
        CHECK(w < 2.0 * std::numbers::pi);
        CHECK(std::abs(std::remainder(w - t, 2.0 * std::numbers::pi)) <= 1e-9);
    }
}

TEST_CASE("scenario JSON round-trips random instances", "[property]")
{
    std::mt19937_64 rng(76);
    const auto dir = test_support::fresh_dir("property_roundtrip");
    for (int trial = 0; trial < 30; ++trial)
    {
        Scenario s = random_scenario(rng);
        s.rng_seed = rng();
        const auto path = (dir / ("s" + std::to_string(trial) + ".json")).string();
        save_scenario(s, path);
        CHECK(load_scenario(path) == s);
    }
}

TEST_CASE("threshold BER stays in range", "[property]")
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial)
    {
        const double g = std::pow(10.0, -15.0 + 8.0 * unit(rng));
        const int L = 1 + static_cast<int>(rng() % 2048);
        const double ber = ber_closed_form(g, 1e-9, 0.1, L);
        CHECK(ber >= 0.0);
        CHECK(ber <= 0.5 + 1e-12);
    }
}
