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

#ifndef UAVIRS_TRAJECTORY_HPP
#define UAVIRS_TRAJECTORY_HPP

#include "uavirs/scenario.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace uavirs
{

// UAV waypoints q[0..N]. Slot n (0-based, n < N) uses position q[n + 1];
// q[0] is the initial location and q[N] the final one.
struct Trajectory
{
    std::vector<Vec2> q;

    int slots() const { return static_cast<int>(q.size()) - 1; }
    Vec2 slot_position(int n) const { return q[static_cast<std::size_t>(n) + 1]; }
};

// Association a(k, n) of IRS k with slot n; relaxed entries lie in [0, 1].
using Schedule = Eigen::MatrixXd;

// Largest per-step displacement violation max(0, |q[n]-q[n-1]| - V*delta)
// together with the endpoint mismatch.
double mobility_violation(const Scenario &s, const Trajectory &traj);

// Throws DimensionMismatch / InvalidInput when the trajectory has the wrong
// length or breaks the mobility constraints by more than tol.
void check_trajectory(const Scenario &s, const Trajectory &traj, double tol = 1e-9);

// Per-slot speed |q[n]-q[n-1]| / delta; speed[0] is 0.
std::vector<double> speeds(const Scenario &s, const Trajectory &traj);

// Straight line from q_init to q_final at constant speed.
Trajectory straight_line(const Scenario &s);

// max over entries of min(a, 1 - a).
double binariness_gap(const Schedule &a);

} // namespace uavirs

#endif
