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

#include "uavirs/fairness.hpp"
#include "uavirs/closed_forms.hpp"
#include "uavirs/errors.hpp"
#include "uavirs/lp.hpp"
#include "uavirs/sca_trajectory.hpp"
#include "uavirs/weighted_sum.hpp"

#include "log.hpp"

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

namespace uavirs
{

Schedule update_a_bar(const Schedule &a)
{
    const Eigen::ArrayXXd x = a.array();
    return ((x + x.square()) / (1.0 + x.square())).matrix();
}

double penalty_value(const Schedule &a, const Schedule &a_bar, double eta)
{
    const Eigen::ArrayXXd x = a.array(), xb = a_bar.array();
    return ((x.square() * (1.0 - xb).square()) + (x - xb).square()).sum() / (2.0 * eta);
}

double violation(const Schedule &a, const Schedule &a_bar)
{
    if (a.size() == 0)
        return 0.0;
    const Eigen::ArrayXXd x = a.array(), xb = a_bar.array();
    return std::max((x * (1.0 - xb)).abs().maxCoeff(), (x - xb).abs().maxCoeff());
}

QuadraticProgram penalty_qp(const Scenario &s, const LinkState &ls, const Schedule &a_bar, double eta)
{
    if (!(eta > 0.0))
        throw InvalidInput("penalty coefficient must be positive");
    const int K = ls.K(), N = ls.N();
    if (a_bar.rows() != K || a_bar.cols() != N)
        throw DimensionMismatch("a_bar must be K x N");
    const Eigen::MatrixXd U = utility_table(ls, s);
    const Eigen::MatrixXd Rt = rate_table(ls, s);
    const int nv = K * N + 1;
    const int iR = K * N;
    auto idx = [K](int k, int n) { return n * K + k; };

    // Objective multiplied by eta: -eta R + 1/2 sum[a^2 (1 - ab)^2 + (a - ab)^2].
    QuadraticProgram qp;
    qp.H = Eigen::MatrixXd::Zero(nv, nv);
    qp.g = Eigen::VectorXd::Zero(nv);
    for (int n = 0; n < N; ++n)
        for (int k = 0; k < K; ++k)
        {
            const double ab = a_bar(k, n);
            qp.H(idx(k, n), idx(k, n)) = (1.0 - ab) * (1.0 - ab) + 1.0;
            qp.g(idx(k, n)) = -ab;
        }
    qp.g(iR) = -eta;

    qp.A = Eigen::MatrixXd::Zero(2 * N + K, nv);
    qp.b = Eigen::VectorXd::Zero(2 * N + K);
    for (int n = 0; n < N; ++n)
    {
        for (int k = 0; k < K; ++k)
        {
            qp.A(n, idx(k, n)) = 1.0;
            qp.A(N + n, idx(k, n)) = -Rt(k, n);
        }
        qp.b(n) = 1.0;
        qp.b(N + n) = -s.R_th;
    }
    for (int k = 0; k < K; ++k)
    {
        qp.A(2 * N + k, iR) = 1.0;
        for (int n = 0; n < N; ++n)
            qp.A(2 * N + k, idx(k, n)) = -U(k, n) / N;
    }
    qp.lower = Eigen::VectorXd::Zero(nv);
    qp.upper = Eigen::VectorXd::Ones(nv);
    // Every utility and share is nonnegative, so R >= 0 never cuts the optimum.
    qp.lower(iR) = 0.0;
    qp.upper(iR) = lp_inf;
    return qp;
}

PenaltySchedule schedule_penalty_subproblem(const Scenario &s, const LinkState &ls, const Schedule &a_bar,
                                            double eta)
{
    const QuadraticProgram qp = penalty_qp(s, ls, a_bar, eta);
    PenaltySchedule out;
    out.qp = solve_qp_linear(qp);
    logger()->trace("penalty qp: iterations {} polished {} stationarity {:.3g} status {}", out.qp.iterations,
                    out.qp.polished, out.qp.stationarity, static_cast<int>(out.qp.status));
    const int K = ls.K(), N = ls.N();
    out.a.resize(K, N);
    for (int n = 0; n < N; ++n)
        for (int k = 0; k < K; ++k)
            out.a(k, n) = std::clamp(out.qp.x(n * K + k), 0.0, 1.0);
    out.R = out.qp.x(K * N);
    return out;
}

PenaltyTrajectory trajectory_penalty_subproblem(const Scenario &s, const Schedule &a, const Trajectory &q_prev)
{
    const ScaStep st = sca_trajectory_step(s, a, q_prev, ScaObjective::Fairness);
    return {st.q, st.objective};
}

Schedule binarize_schedule(const Scenario &s, const LinkState &ls, const Schedule &a, std::vector<int> *repaired)
{
    if (a.rows() != ls.K() || a.cols() != ls.N())
        throw DimensionMismatch("schedule must be K x N");
    Schedule out = (a.array() >= 0.5).cast<double>().matrix();
    const Eigen::MatrixXd Rt = rate_table(ls, s);
    for (int n = 0; n < ls.N(); ++n)
    {
        if (out.col(n).dot(Rt.col(n)) >= s.R_th)
            continue;
        int best = -1;
        for (int k = 0; k < ls.K(); ++k)
            if (Rt(k, n) >= s.R_th && (best < 0 || a(k, n) > a(best, n)))
                best = k;
        if (best < 0)
            continue;
        out.col(n).setZero();
        out(best, n) = 1.0;
        if (repaired)
            repaired->push_back(n);
    }
    return out;
}

Solution run_fairness(const Scenario &s, const SolveOptions &opt)
{
    validate(s);
    const auto t0 = std::chrono::steady_clock::now();
    Solution sol;
    SolveReport &rep = sol.report;
    rep.algorithm = "fairness";
    rep.upper_bound = fairness_upper_bound(s);

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

    const int K = s.K();
    Schedule a = Schedule::Constant(K, s.N, 1.0 / K);
    Schedule a_bar = update_a_bar(a);
    double eta = s.algo.eta0;
    LinkState ls = link_state(s, q);
    rep.status = SolveStatus::NonConverged;
    double xi = violation(a, a_bar);

    for (int outer = 0; outer < s.algo.max_outer; ++outer)
    {
        double prev = 0.0;
        int inner = 0;
        bool stalled = false;
        for (int r = 1; r <= s.algo.r_max; ++r)
        {
            const Schedule a_bar_next = update_a_bar(a);
            PenaltySchedule ps;
            try
            {
                ps = schedule_penalty_subproblem(s, ls, a_bar_next, eta);
            }
            catch (const InfeasibleError &)
            {
                if (outer == 0 && r == 1)
                    throw;
                rep.notes.push_back("scheduling subproblem infeasible after penalty update; keeping previous iterate");
                stalled = true;
                break;
            }
            a_bar = a_bar_next;
            a = ps.a;
            if (!opt.freeze_trajectory)
            {
                const ScaStep st = sca_trajectory_step(s, a, q, ScaObjective::Fairness);
                q = st.q;
                ls = link_state(s, q);
            }
            const double f = -fairness_utility(s, ls, a) + penalty_value(a, a_bar, eta);
            xi = violation(a, a_bar);
            rep.objective_trace.push_back(f);
            rep.xi_trace.push_back(xi);
            ++rep.iterations;
            inner = r;
            logger()->debug("fair outer {} inner {}: objective {:.12g} xi {:.3g}", outer, r, f, xi);
            if (r > 1 && std::abs(prev - f) <= s.algo.eps1 * std::max(std::abs(prev), 1e-300))
                break;
            prev = f;
        }
        if (stalled)
            break;
        rep.outer_trace.push_back({eta, xi, fairness_utility(s, ls, a), inner});
        rep.outer_iterations = outer + 1;
        logger()->info("fair outer {}: eta {:.6g} xi {:.3g} R {:.12g}", outer, eta, xi, fairness_utility(s, ls, a));
        if (xi <= s.algo.eps2)
        {
            rep.status = SolveStatus::Converged;
            break;
        }
        eta *= s.algo.c_scale;
    }

    rep.xi = xi;
    rep.binariness = binariness_gap(a);
    std::vector<int> repaired;
    const Schedule a_bin = binarize_schedule(s, ls, a, &repaired);
    for (int n : repaired)
        rep.notes.push_back("slot " + std::to_string(n) + " rounded to its largest rate-feasible share");
    rep.rate_margin = rate_margin(s, ls, a_bin);
    rep.objective = fairness_utility(s, ls, a_bin);
    if (rep.rate_margin < 0.0)
        rep.notes.push_back("binary schedule misses the rate target");
    sol.trajectory = q;
    sol.schedule = a_bin;
    sol.phases = optimal_phases(ls, s);
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sol;
}

FairnessBound fairness_upper_bound_detail(const Scenario &s)
{
    const Eigen::VectorXd U = hover_utilities(s);
    const int K = s.K();
    // Variables x_1..x_K, R: max R  s.t.  R - x_k U_k <= 0,  sum x = 1,  x >= 0.
    LinearProgram lp;
    lp.c = Eigen::VectorXd::Zero(K + 1);
    lp.c(K) = 1.0;
    lp.A_ub = Eigen::MatrixXd::Zero(K, K + 1);
    lp.b_ub = Eigen::VectorXd::Zero(K);
    for (int k = 0; k < K; ++k)
    {
        lp.A_ub(k, k) = -U(k);
        lp.A_ub(k, K) = 1.0;
    }
    lp.A_eq = Eigen::MatrixXd::Zero(1, K + 1);
    lp.A_eq.row(0).head(K).setOnes();
    lp.b_eq = Eigen::VectorXd::Ones(1);
    lp.lower = Eigen::VectorXd::Zero(K + 1);
    lp.lower(K) = -lp_inf;
    lp.upper = Eigen::VectorXd::Constant(K + 1, lp_inf);
    const LpResult r = solve_lp(lp, s.algo.lp_tol);

    FairnessBound fb;
    fb.lp_value = r.objective;
    fb.time_ratio = r.x.head(K);
    fb.closed_form = 1.0 / U.cwiseInverse().sum();
    return fb;
}

double fairness_upper_bound(const Scenario &s) { return fairness_upper_bound_detail(s).lp_value; }

} // namespace uavirs
