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
#include "uavirs/errors.hpp"
#include "uavirs/sca_trajectory.hpp"
#include "uavirs/weighted_sum.hpp"

#include <cmath>
#include <random>

using namespace uavirs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

double exact_gain(double beta0, double alpha, double H, Vec2 c, Vec2 q)
{
    return beta0 / std::pow(norm_sq(q - c) + H * H, alpha / 2.0);
}

Trajectory hover_at(const Scenario &s, Vec2 p)
{
    Trajectory t;
    t.q.assign(static_cast<std::size_t>(s.N) + 1, p);
    return t;
}

} // namespace

TEST_CASE("single IRS is scheduled in every slot", "[weighted_sum]")
{
    Scenario s = test_support::coarse_default();
    s.irs = {{30.0, 30.0}};
    s.w = {1.0};
    const LinkState ls = link_state(s, initial_trajectory(s));
    bool fractional = true;
    const Schedule a = schedule_subproblem(s, ls, &fractional);
    CHECK(a == Schedule::Ones(1, s.N));
    CHECK_FALSE(fractional);
}

TEST_CASE("scheduling picks the largest weighted utility", "[weighted_sum]")
{
    Scenario s = test_support::coarse_default();
    s.R_th = 0.0;
    s.w = {0.3, 2.0, 1.0, 0.7, 1.4};
    const LinkState ls = link_state(s, initial_trajectory(s));
    const Eigen::MatrixXd U = utility_table(ls, s);
    const Schedule a = schedule_subproblem(s, ls);
    for (int n = 0; n < s.N; ++n)
    {
        int best = 0;
        for (int k = 1; k < s.K(); ++k)
            if (s.w[static_cast<std::size_t>(k)] * U(k, n) > s.w[static_cast<std::size_t>(best)] * U(best, n))
                best = k;
        for (int k = 0; k < s.K(); ++k)
            CHECK(a(k, n) == (k == best ? 1.0 : 0.0));
    }
}

TEST_CASE("rate target excludes weak links", "[weighted_sum]")
{
    Scenario s = test_support::coarse_default();
    const LinkState ls = link_state(s, initial_trajectory(s));
    const Eigen::MatrixXd Rt = rate_table(ls, s);
    const Schedule a = schedule_subproblem(s, ls);
    for (int n = 0; n < s.N; ++n)
    {
        CHECK(a.col(n).dot(Rt.col(n)) >= s.R_th - 1e-12);
        CHECK(a.col(n).sum() <= 1.0 + 1e-12);
    }
    s.R_th = 1e3;
    CHECK_THROWS_AS(schedule_subproblem(s, ls), InfeasibleSlot);
}

TEST_CASE("Taylor bound of the path gain", "[weighted_sum]")
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-60.0, 60.0);
    const Vec2 c{30.0, -20.0};
    for (int trial = 0; trial < 500; ++trial)
    {
        const Vec2 ref{u(rng), u(rng)}, q{u(rng), u(rng)};
        const double H = 20.0, alpha = 2.4, beta0 = 1e-3;
        CHECK_THAT(beta_lower_bound(beta0, alpha, H, c, ref, ref), WithinRel(exact_gain(beta0, alpha, H, c, ref), 1e-13));
        CHECK(beta_lower_bound(beta0, alpha, H, c, ref, q) <= exact_gain(beta0, alpha, H, c, q) * (1.0 + 1e-13));
    }
}

TEST_CASE("zero speed keeps the hover trajectory", "[weighted_sum]")
{
    Scenario s = test_support::coarse_default();
    s.v_max = 0.0;
    const Trajectory start = hover_at(s, s.q_init);
    const Schedule a = schedule_subproblem(s, link_state(s, start));
    const Trajectory q = trajectory_subproblem(s, a, start);
    REQUIRE(q.q.size() == start.q.size());
    for (std::size_t i = 0; i < q.q.size(); ++i)
    {
        CHECK(q.q[i].x == start.q[i].x);
        CHECK(q.q[i].y == start.q[i].y);
    }
}

TEST_CASE("trajectory steps toward a single IRS", "[weighted_sum]")
{
    Scenario s = test_support::coarse_default();
    s.irs = {{30.0, 30.0}};
    s.w = {1.0};
    const Trajectory start = initial_trajectory(s);
    const Solution sol = run_weighted_sum(s);
    double before = 0.0, after = 0.0;
    for (int n = 0; n < s.N; ++n)
    {
        before += norm(start.slot_position(n) - s.irs[0]);
        after += norm(sol.trajectory.slot_position(n) - s.irs[0]);
    }
    CHECK(after < before);
    CHECK(sol.report.objective > weighted_utility(s, link_state(s, start), Schedule::Ones(1, s.N)));
}

TEST_CASE("weighted-sum run is monotone, feasible and bounded", "[weighted_sum]")
{
    const Scenario s = test_support::coarse_default();
    const Solution sol = run_weighted_sum(s);
    const auto &tr = sol.report.objective_trace;
    REQUIRE(!tr.empty());
    for (std::size_t i = 1; i < tr.size(); ++i)
        CHECK(tr[i] >= tr[i - 1] - 1e-9 * std::abs(tr[i - 1]));
    CHECK(mobility_violation(s, sol.trajectory) <= 1e-9);
    CHECK(sol.report.rate_margin >= -1e-9);
    CHECK(sol.report.objective <= sol.report.upper_bound);
    CHECK(binariness_gap(sol.schedule) == 0.0);
    CHECK_THAT(sol.report.objective, WithinRel(weighted_utility(s, link_state(s, sol.trajectory), sol.schedule), 1e-12));
}

TEST_CASE("upper bound dominates every hover point", "[weighted_sum]")
{
    const Scenario s = test_support::coarse_default();
    const double ub = weighted_sum_upper_bound(s);
    const Eigen::VectorXd U = hover_utilities(s);
    CHECK_THAT(ub, WithinRel((Eigen::Map<const Eigen::VectorXd>(s.w.data(), s.K()).cwiseProduct(U)).maxCoeff(), 1e-12));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-60.0, 60.0);
    for (int trial = 0; trial < 300; ++trial)
    {
        const LinkState ls = link_state_at(s, {u(rng), u(rng)});
        const Eigen::MatrixXd T = utility_table(ls, s);
        for (int k = 0; k < s.K(); ++k)
            CHECK(s.w[static_cast<std::size_t>(k)] * T(k, 0) <= ub * (1.0 + 1e-12));
    }
    for (int k = 0; k < s.K(); ++k)
        CHECK_THAT(utility_table(link_state_at(s, s.irs[static_cast<std::size_t>(k)]), s)(k, 0), WithinRel(U(k), 1e-12));
}

TEST_CASE("scheduling is binary on random instances", "[weighted_sum]")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> pos(-50.0, 50.0), wt(0.1, 2.0);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial)
    {
        Scenario s = test_support::coarse_default();
        const int K = 1 + static_cast<int>(rng() % 5);
        s.irs.clear();
        s.w.clear();
        for (int k = 0; k < K; ++k)
        {
            s.irs.push_back({pos(rng), pos(rng)});
            s.w.push_back(wt(rng));
        }
        Trajectory t = hover_at(s, s.q_init);
        for (int n = 1; n < s.N; ++n)
            t.q[static_cast<std::size_t>(n)] = {pos(rng) * 0.3, pos(rng) * 0.3};
        const LinkState ls = link_state(s, t);
        if (!schedule_feasible(s, t))
        {
            CHECK_THROWS_AS(schedule_subproblem(s, ls), InfeasibleSlot);
            continue;
        }
        bool fractional = false;
        const Schedule a = schedule_subproblem(s, ls, &fractional);
        if (!fractional)
            CHECK(binariness_gap(a) == 0.0);
        ++checked;
    }
    CHECK(checked > 50);
}
