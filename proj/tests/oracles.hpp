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

#ifndef UAVIRS_TEST_ORACLES_HPP
#define UAVIRS_TEST_ORACLES_HPP

#include "test_support.hpp"
#include "uavirs/channel.hpp"
#include "uavirs/closed_forms.hpp"
#include "uavirs/sca_trajectory.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

namespace oracles
{

// Best vertex of {A x <= b, 0 <= x <= ub} found by solving every n-subset of
// the constraints as equalities. Returns -inf when nothing is feasible.
inline double enumerate_vertices(const Eigen::VectorXd &c, const Eigen::MatrixXd &A, const Eigen::VectorXd &b,
                                 const Eigen::VectorXd &ub, Eigen::VectorXd *best_x = nullptr)
{
    const int n = static_cast<int>(c.size());
    const int m = static_cast<int>(A.rows());
    const int rows = m + 2 * n;
    Eigen::MatrixXd G(rows, n);
    Eigen::VectorXd h(rows);
    G.topRows(m) = A;
    h.head(m) = b;
    G.middleRows(m, n) = -Eigen::MatrixXd::Identity(n, n);
    h.segment(m, n).setZero();
    G.bottomRows(n) = Eigen::MatrixXd::Identity(n, n);
    h.tail(n) = ub;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> pick(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n)
        {
            Eigen::MatrixXd S(n, n);
            Eigen::VectorXd r(n);
            for (int i = 0; i < n; ++i)
            {
                S.row(i) = G.row(pick[static_cast<std::size_t>(i)]);
                r(i) = h(pick[static_cast<std::size_t>(i)]);
            }
            Eigen::FullPivLU<Eigen::MatrixXd> lu(S);
            if (!lu.isInvertible())
                return;
            const Eigen::VectorXd x = lu.solve(r);
            if (((G * x - h).array() > 1e-9).any())
                return;
            const double v = c.dot(x);
            if (v > best)
            {
                best = v;
                if (best_x)
                    *best_x = x;
            }
            return;
        }
        for (int i = start; i < rows; ++i)
        {
            pick[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return best;
}

// Minimizes f over a box by a coarse grid followed by successively finer
// local grids around the incumbent. Infeasible points return +inf.
template <class F>
double grid_minimize_2d(F f, double x0, double x1, double y0, double y1, int steps, int levels, double &bx, double &by)
{
    double best = std::numeric_limits<double>::infinity();
    bx = x0;
    by = y0;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= steps; ++j)
        {
            const double x = x0 + (x1 - x0) * i / steps, y = y0 + (y1 - y0) * j / steps;
            const double v = f(x, y);
            if (v < best)
            {
                best = v;
                bx = x;
                by = y;
            }
        }
    double hx = (x1 - x0) / steps, hy = (y1 - y0) / steps;
    for (int level = 0; level < levels; ++level)
    {
        const double cx = bx, cy = by;
        for (int i = -20; i <= 20; ++i)
            for (int j = -20; j <= 20; ++j)
            {
                const double x = std::clamp(cx + i * hx / 10.0, x0, x1), y = std::clamp(cy + j * hy / 10.0, y0, y1);
                const double v = f(x, y);
                if (v < best)
                {
                    best = v;
                    bx = x;
                    by = y;
                }
            }
        hx /= 10.0;
        hy /= 10.0;
    }
    return best;
}

// Two IRS, one slot: the penalty scheduling problem in its original scale.
struct FairnessToy
{
    uavirs::Scenario s;
    uavirs::LinkState ls;
    uavirs::Schedule a_bar;
    double eta = 500.0;
};

inline FairnessToy fairness_toy()
{
    FairnessToy t;
    t.s = test_support::coarse_default();
    t.s.irs = {{30.0, 30.0}, {-30.0, 30.0}};
    t.s.w = {1.0, 1.0};
    t.s.N = 1;
    t.s.delta = 1.0;
    t.s.R_th = 2.0;
    uavirs::Trajectory q;
    q.q = {t.s.q_init, t.s.q_final};
    t.ls = uavirs::link_state(t.s, q);
    t.a_bar.resize(2, 1);
    t.a_bar << 0.6, 0.3;
    return t;
}

// -min_k U_k a_k + (1 / 2 eta) penalty over the feasible shares.
inline double fairness_toy_value(const FairnessToy &t, double a1, double a2)
{
    const Eigen::MatrixXd U = uavirs::utility_table(t.ls, t.s);
    const Eigen::MatrixXd Rt = uavirs::rate_table(t.ls, t.s);
    if (a1 + a2 > 1.0 || a1 * Rt(0, 0) + a2 * Rt(1, 0) < t.s.R_th)
        return std::numeric_limits<double>::infinity();
    const double R = std::min(a1 * U(0, 0), a2 * U(1, 0));
    double pen = 0.0;
    const double av[2] = {a1, a2};
    for (int k = 0; k < 2; ++k)
    {
        const double ab = t.a_bar(k, 0);
        pen += av[k] * av[k] * (1.0 - ab) * (1.0 - ab) + (av[k] - ab) * (av[k] - ab);
    }
    return -R + pen / (2.0 * t.eta);
}

inline double fairness_toy_grid(const FairnessToy &t, double &a1, double &a2)
{
    return grid_minimize_2d([&](double x, double y) { return fairness_toy_value(t, x, y); }, 0.0, 1.0, 0.0, 1.0,
                            400, 8, a1, a2);
}

// One IRS, two slots: only the middle waypoint is free.
inline uavirs::Scenario trajectory_toy()
{
    uavirs::Scenario s = test_support::coarse_default();
    s.irs = {{5.0, 20.0}};
    s.w = {1.0};
    s.N = 2;
    s.delta = 1.0;
    s.q_init = {0.0, 0.0};
    s.q_final = {8.0, 6.0};
    s.R_th = 0.0;
    return s;
}

// SCA iterated from the midpoint until the true objective stops improving.
inline double trajectory_toy_sca(const uavirs::Scenario &s, uavirs::Trajectory *out = nullptr)
{
    const uavirs::Schedule a = uavirs::Schedule::Ones(1, 2);
    uavirs::Trajectory q;
    q.q = {s.q_init, 0.5 * (s.q_init + s.q_final), s.q_final};
    for (int it = 0; it < 200; ++it)
    {
        const uavirs::ScaStep st = uavirs::sca_trajectory_step(s, a, q, uavirs::ScaObjective::WeightedSum);
        q = st.q;
        if (st.objective - st.objective_prev <= 1e-13)
            break;
    }
    if (out)
        *out = q;
    return uavirs::weighted_utility(s, uavirs::link_state(s, q), a);
}

inline double trajectory_toy_grid(const uavirs::Scenario &s)
{
    const uavirs::Schedule a = uavirs::Schedule::Ones(1, 2);
    const double reach = s.v_max * s.delta;
    const auto neg = [&](double x, double y) {
        const uavirs::Vec2 p{x, y};
        if (uavirs::norm(p - s.q_init) > reach || uavirs::norm(s.q_final - p) > reach)
            return std::numeric_limits<double>::infinity();
        uavirs::Trajectory t;
        t.q = {s.q_init, p, s.q_final};
        return -uavirs::weighted_utility(s, uavirs::link_state(s, t), a);
    };
    double bx = 0.0, by = 0.0;
    return -grid_minimize_2d(neg, -12.0, 20.0, -12.0, 20.0, 400, 6, bx, by);
}

} // namespace oracles

#endif
