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

#include "uavirs/trajectory.hpp"
#include "uavirs/errors.hpp"

#include <algorithm>
#include <cmath>

namespace uavirs
{

double mobility_violation(const Scenario &s, const Trajectory &traj)
{
    if (traj.q.empty())
        return INFINITY;
    double worst = std::max(norm(traj.q.front() - s.q_init), norm(traj.q.back() - s.q_final));
    const double step = s.v_max * s.delta;
    for (std::size_t n = 1; n < traj.q.size(); ++n)
        worst = std::max(worst, norm(traj.q[n] - traj.q[n - 1]) - step);
    return std::max(worst, 0.0);
}

void check_trajectory(const Scenario &s, const Trajectory &traj, double tol)
{
    if (traj.slots() != s.N)
        throw DimensionMismatch("trajectory has " + std::to_string(traj.q.size()) + " points, expected " +
                                std::to_string(s.N + 1));
    if (mobility_violation(s, traj) > tol)
        throw InvalidInput("trajectory violates mobility or endpoint constraints");
}

std::vector<double> speeds(const Scenario &s, const Trajectory &traj)
{
    std::vector<double> v(traj.q.size(), 0.0);
    for (std::size_t n = 1; n < traj.q.size(); ++n)
        v[n] = norm(traj.q[n] - traj.q[n - 1]) / s.delta;
    return v;
}

Trajectory straight_line(const Scenario &s)
{
    Trajectory t;
    t.q.resize(static_cast<std::size_t>(s.N) + 1);
    for (int n = 0; n <= s.N; ++n)
    {
        const double f = static_cast<double>(n) / s.N;
        t.q[n] = s.q_init + f * (s.q_final - s.q_init);
    }
    t.q.back() = s.q_final;
    return t;
}

double binariness_gap(const Schedule &a)
{
    double g = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        g = std::max(g, std::min(std::abs(a.data()[i]), std::abs(1.0 - a.data()[i])));
    return g;
}

} // namespace uavirs
