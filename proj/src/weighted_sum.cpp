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

#include "uavirs/weighted_sum.hpp"
#include "uavirs/benchmarks.hpp"
#include "uavirs/closed_forms.hpp"
#include "uavirs/errors.hpp"
#include "uavirs/lp.hpp"
#include "uavirs/physical_layer.hpp"
#include "uavirs/sca_trajectory.hpp"

#include "log.hpp"

#include <chrono>
#include <cmath>

namespace uavirs
{

const char *to_string(SolveStatus s)
{
    switch (s)
    {
    case SolveStatus::Converged:
        return "Converged";
    case SolveStatus::MaxIter:
        return "MaxIter";
    case SolveStatus::Infeasible:
        return "Infeasible";
    case SolveStatus::NonConverged:
        return "NonConverged";
    }
    return "Unknown";
}

Schedule schedule_subproblem(const Scenario &s, const LinkState &ls, bool *fractional)
{
    const Eigen::MatrixXd U = utility_table(ls, s);
    const Eigen::MatrixXd R = rate_table(ls, s);
    const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(s.w.data(), s.K());
    Schedule a = Schedule::Zero(ls.K(), ls.N());
    bool frac = false;
    for (int n = 0; n < ls.N(); ++n)
    {
        Eigen::VectorXd col;
        if (!solve_slot_lp(w.cwiseProduct(U.col(n)), R.col(n), s.R_th, col))
            throw InfeasibleSlot(n);
        a.col(n) = col;
        const double gap = binariness_gap(col);
        if (gap > 1e-6)
        {
            frac = true;
            logger()->warn("slot {}: scheduling optimum is fractional (gap {:.3g}); no single IRS is optimal", n, gap);
        }
    }
    if (fractional)
        *fractional = frac;
    return a;
}

Trajectory trajectory_subproblem(const Scenario &s, const Schedule &sched, const Trajectory &q_prev)
{
    return sca_trajectory_step(s, sched, q_prev, ScaObjective::WeightedSum).q;
}

bool schedule_feasible(const Scenario &s, const Trajectory &traj)
{
    const LinkState ls = link_state(s, traj);
    const Eigen::MatrixXd R = rate_table(ls, s);
    for (int n = 0; n < ls.N(); ++n)
        if (R.col(n).maxCoeff() < s.R_th)
            return false;
    return true;
}

Trajectory initial_trajectory(const Scenario &s)
{
    std::vector<Trajectory> candidates;
    try
    {
        candidates.push_back(circular_trajectory(s, -1.0, s.bs));
    }
    catch (const InvalidInput &e)
    {
        logger()->info("circular start unavailable: {}", e.what());
    }
    if (s.q_init == s.q_final)
    {
        Trajectory hover;
        hover.q.assign(static_cast<std::size_t>(s.N) + 1, s.q_init);
        candidates.push_back(hover);
    }
    candidates.push_back(straight_line(s));
    for (const Trajectory &t : candidates)
        if (mobility_violation(s, t) <= 1e-9 && schedule_feasible(s, t))
            return t;
    throw InfeasibleError("no initial trajectory meets the rate target in every slot");
}

Solution run_weighted_sum(const Scenario &s, const SolveOptions &opt)
{
    validate(s);
    const auto t0 = std::chrono::steady_clock::now();
    Solution sol;
    SolveReport &rep = sol.report;
    rep.algorithm = "weighted-sum";
    rep.upper_bound = weighted_sum_upper_bound(s);

    Trajectory q;
    if (opt.initial)
    {
        check_trajectory(s, *opt.initial);
        if (!schedule_feasible(s, *opt.initial))
            throw InfeasibleError("initial trajectory misses the rate target in some slot");
        q = *opt.initial;
    }
    else
        q = initial_trajectory(s);

    bool fractional = false;
    LinkState ls = link_state(s, q);
    Schedule a = schedule_subproblem(s, ls, &fractional);
    rep.non_binary = fractional;
    double prev = weighted_utility(s, ls, a);
    rep.objective_trace.push_back(prev);
    rep.xi_trace.push_back(binariness_gap(a));
    rep.status = SolveStatus::MaxIter;

    for (int r = 1; r <= s.algo.r_max; ++r)
    {
        if (!opt.freeze_trajectory)
        {
            const ScaStep st = sca_trajectory_step(s, a, q, ScaObjective::WeightedSum);
            q = st.q;
            if (!st.note.empty())
                logger()->debug("iteration {}: {}", r, st.note);
        }
        ls = link_state(s, q);
        const double after_q = weighted_utility(s, ls, a);
        bool frac = false;
        const Schedule a_next = schedule_subproblem(s, ls, &frac);
        // The current schedule stays feasible, so only a strict improvement
        // replaces it.
        if (weighted_utility(s, ls, a_next) > after_q)
        {
            a = a_next;
            rep.non_binary = rep.non_binary || frac;
        }
        const double cur = weighted_utility(s, ls, a);
        rep.objective_trace.push_back(cur);
        rep.xi_trace.push_back(binariness_gap(a));
        rep.iterations = r;
        logger()->info("wsb iteration {}: objective {:.12g}", r, cur);
        if (std::abs(cur - prev) <= s.algo.eps1 * std::max(std::abs(prev), 1e-300))
        {
            rep.status = SolveStatus::Converged;
            break;
        }
        prev = cur;
    }

    ls = link_state(s, q);
    rep.binariness = binariness_gap(a);
    rep.objective = weighted_utility(s, ls, a);
    rep.rate_margin = rate_margin(s, ls, a);
    if (rep.non_binary)
        rep.notes.push_back("scheduling LP returned a fractional optimum in at least one slot");
    if (rep.rate_margin < 0.0)
        rep.notes.push_back("final schedule misses the rate target");
    sol.trajectory = q;
    sol.schedule = a;
    sol.phases = optimal_phases(ls, s);
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sol;
}

Eigen::VectorXd hover_utilities(const Scenario &s)
{
    const double dh = s.H_u - s.H_s;
    const double beta_hover = s.beta0 / std::pow(std::abs(dh), s.alpha1);
    Eigen::VectorXd u(s.K());
    const double k12 = (s.K1 + 1.0) * (s.K2 + 1.0);
    for (int k = 0; k < s.K(); ++k)
    {
        const Vec2 qs = s.irs[static_cast<std::size_t>(k)];
        const double d2 = std::sqrt(norm_sq(s.bs - qs) + (s.H_b - s.H_s) * (s.H_b - s.H_s));
        const double b2 = path_gain(s.beta0, d2, s.alpha2);
        const double M = s.M;
        const double c1 = s.K1 * s.K2 * M * M * b2 / k12;
        const double c3 = (1.0 + s.K1 + s.K2) * M * b2 / k12;
        u(k) = utility((c1 + c3) * beta_hover / s.sigma2, s);
    }
    return u;
}

double weighted_sum_upper_bound(const Scenario &s)
{
    const Eigen::VectorXd u = hover_utilities(s);
    double best = 0.0;
    for (int k = 0; k < s.K(); ++k)
        best = std::max(best, s.w[static_cast<std::size_t>(k)] * u(k));
    return best;
}

} // namespace uavirs
