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

#include "uavirs/benchmarks.hpp"
#include "uavirs/closed_forms.hpp"
#include "uavirs/errors.hpp"
#include "uavirs/fairness.hpp"
#include "uavirs/physical_layer.hpp"
#include "uavirs/sca_trajectory.hpp"
#include "uavirs/weighted_sum.hpp"

#include "log.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace uavirs
{

Trajectory circular_trajectory(const Scenario &s, double radius, Vec2 centre)
{
    const double r0 = norm(s.q_init - centre);
    const double r = radius < 0.0 ? r0 : radius;
    if (std::abs(r - r0) > 1e-9 * (1.0 + r))
        throw InvalidInput("q_init does not lie on the circle");
    if (!(s.q_final == s.q_init))
        throw InvalidInput("a closed circle needs q_final = q_init");
    if (s.N < 1)
        throw InvalidInput("circle needs at least one slot");
    const double step = 2.0 * std::numbers::pi / s.N;
    const double chord = 2.0 * r * std::sin(step / 2.0);
    if (chord > s.v_max * s.delta * (1.0 + 1e-12))
        throw InvalidInput("circle speed exceeds V_max");
    const double phi0 = std::atan2(s.q_init.y - centre.y, s.q_init.x - centre.x);
    Trajectory t;
    t.q.resize(static_cast<std::size_t>(s.N) + 1);
    for (int n = 0; n <= s.N; ++n)
    {
        const double phi = phi0 + step * n;
        t.q[static_cast<std::size_t>(n)] = {centre.x + r * std::cos(phi), centre.y + r * std::sin(phi)};
    }
    t.q.front() = s.q_init;
    t.q.back() = s.q_final;
    return t;
}

double fixed_phase_utility(const Scenario &s, const LinkState &ls, int k, int n, const Eigen::VectorXd &phases)
{
    const double gain = std::norm(xbar0_from_phases(s, ls, k, n, phases)) + cascaded_scatter(s, ls, k, n);
    return utility(gain / s.sigma2, s);
}

FixedPhaseTable fixed_phase_eval(const Scenario &s, const Trajectory &traj, double theta0)
{
    if (!(theta0 >= 0.0 && theta0 < 2.0 * std::numbers::pi))
        throw InvalidInput("theta0 must lie in [0, 2 pi)");
    const LinkState ls = link_state(s, traj);
    const Eigen::VectorXd phases = Eigen::VectorXd::Constant(s.M, theta0);
    FixedPhaseTable t;
    t.utility.resize(ls.K(), ls.N());
    t.rate.resize(ls.K(), ls.N());
    for (int k = 0; k < ls.K(); ++k)
        for (int n = 0; n < ls.N(); ++n)
        {
            t.utility(k, n) = fixed_phase_utility(s, ls, k, n, phases);
            t.rate(k, n) = primary_rate_bound(s, ls, std::norm(x0_from_phases(s, ls, k, n, phases)), k, n);
        }
    return t;
}

std::vector<std::string> known_schemes() { return {"proposed", "circular", "fixed-pi", "fixed-pi/2", "upper-bound"}; }

namespace
{

struct Design
{
    Trajectory q;
    Schedule a;
    std::string status;
};

double design_value(const Scenario &s, const Design &d, Objective obj)
{
    const LinkState ls = link_state(s, d.q);
    return obj == Objective::WeightedSum ? weighted_utility(s, ls, d.a) : fairness_utility(s, ls, d.a);
}

double design_margin(const Scenario &s, const Design &d)
{
    return rate_margin(s, link_state(s, d.q), d.a);
}

// Keeps the better of a fresh design and the previous sweep point's design,
// which stays feasible when only M grows.
Design best_of(const Scenario &s, Design fresh, const std::optional<Design> &carried, Objective obj)
{
    if (!carried || carried->q.slots() != s.N)
        return fresh;
    if (design_margin(s, *carried) < 0.0)
        return fresh;
    if (design_value(s, *carried, obj) > design_value(s, fresh, obj))
    {
        Design d = *carried;
        d.status = "carried";
        return d;
    }
    return fresh;
}

Design solve_design(const Scenario &s, Objective obj, const SolveOptions &opt)
{
    const Solution sol = obj == Objective::WeightedSum ? run_weighted_sum(s, opt) : run_fairness(s, opt);
    return {sol.trajectory, sol.schedule, to_string(sol.report.status)};
}

double fixed_value(const Scenario &s, const Design &d, Objective obj, double theta0, double &margin)
{
    const FixedPhaseTable t = fixed_phase_eval(s, d.q, theta0);
    const Eigen::VectorXd rates = (d.a.array() * t.rate.array()).colwise().sum().transpose();
    margin = rates.minCoeff() - s.R_th;
    const Eigen::MatrixXd au = (d.a.array() * t.utility.array()).matrix();
    if (obj == Objective::WeightedSum)
    {
        double acc = 0.0;
        for (int k = 0; k < s.K(); ++k)
            acc += s.w[static_cast<std::size_t>(k)] * au.row(k).sum();
        return acc / s.N;
    }
    return au.rowwise().sum().minCoeff() / s.N;
}

} // namespace

std::vector<ComparisonRow> compare_schemes(const Scenario &s, Sweep sweep, const CompareOptions &opt)
{
    validate(s);
    const std::vector<std::string> schemes = opt.schemes.empty() ? known_schemes() : opt.schemes;
    const std::vector<std::string> known = known_schemes();
    for (const auto &name : schemes)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw InvalidInput("unknown scheme: " + name);
    auto wanted = [&](const std::string &name) {
        return std::find(schemes.begin(), schemes.end(), name) != schemes.end();
    };

    struct Point
    {
        Scenario s;
        double value;
    };
    std::vector<Point> points;
    std::string sweep_name = "-";
    if (sweep == Sweep::Period)
    {
        sweep_name = "T";
        for (double T : opt.periods)
            points.push_back({with_period(s, T), T});
    }
    else if (sweep == Sweep::Elements)
    {
        sweep_name = "M";
        for (int M : opt.elements)
        {
            Scenario v = s;
            v.M = M;
            points.push_back({v, static_cast<double>(M)});
        }
    }
    else
        points.push_back({s, s.period()});

    std::vector<ComparisonRow> rows;
    const bool carry = sweep == Sweep::Elements;
    for (Objective obj : {Objective::WeightedSum, Objective::Fairness})
    {
        if ((obj == Objective::WeightedSum && !opt.weighted_sum) || (obj == Objective::Fairness && !opt.fairness))
            continue;
        const std::string oname = obj == Objective::WeightedSum ? "wsb" : "fair";
        std::optional<Design> prev_proposed, prev_circular;
        for (const Point &pt : points)
        {
            const Scenario &sp = pt.s;
            validate(sp);
            auto emit = [&](const std::string &scheme, double value, double margin, const std::string &status) {
                rows.push_back({oname, scheme, sweep_name, pt.value, value, margin, status});
            };
            const bool need_proposed = wanted("proposed") || wanted("fixed-pi") || wanted("fixed-pi/2");
            if (need_proposed)
            {
                Design d = solve_design(sp, obj, {});
                if (carry)
                {
                    if (prev_proposed && obj == Objective::WeightedSum)
                    {
                        // Warm start from the previous design; AO keeps it monotone.
                        SolveOptions warm;
                        warm.initial = prev_proposed->q;
                        if (schedule_feasible(sp, *warm.initial))
                        {
                            Design w = solve_design(sp, obj, warm);
                            if (design_value(sp, w, obj) > design_value(sp, d, obj))
                                d = w;
                        }
                    }
                    d = best_of(sp, d, prev_proposed, obj);
                    prev_proposed = d;
                }
                if (wanted("proposed"))
                    emit("proposed", design_value(sp, d, obj), design_margin(sp, d), d.status);
                for (auto [name, theta] : {std::pair<const char *, double>{"fixed-pi", std::numbers::pi},
                                           std::pair<const char *, double>{"fixed-pi/2", std::numbers::pi / 2.0}})
                    if (wanted(name))
                    {
                        double margin = 0.0;
                        const double v = fixed_value(sp, d, obj, theta, margin);
                        emit(name, v, margin, "evaluated");
                    }
            }
            if (wanted("circular"))
            {
                Design d;
                try
                {
                    const Trajectory circle = circular_trajectory(sp, 15.0, {0.0, 0.0});
                    if (obj == Objective::WeightedSum)
                    {
                        const LinkState ls = link_state(sp, circle);
                        d = {circle, schedule_subproblem(sp, ls), "evaluated"};
                    }
                    else
                    {
                        SolveOptions frozen;
                        frozen.initial = circle;
                        frozen.freeze_trajectory = true;
                        d = solve_design(sp, obj, frozen);
                    }
                    if (carry)
                    {
                        d = best_of(sp, d, prev_circular, obj);
                        prev_circular = d;
                    }
                    emit("circular", design_value(sp, d, obj), design_margin(sp, d), d.status);
                }
                catch (const InfeasibleError &e)
                {
                    emit("circular", 0.0, 0.0, "Infeasible");
                }
            }
            if (wanted("upper-bound"))
            {
                const double ub = obj == Objective::WeightedSum ? weighted_sum_upper_bound(sp) : fairness_upper_bound(sp);
                emit("upper-bound", ub, 0.0, "analytic");
            }
            logger()->info("benchmarks: {} {}={} done", oname, sweep_name, pt.value);
        }
    }
    return rows;
}

} // namespace uavirs
