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

#ifndef UAVIRS_SCA_TRAJECTORY_HPP
#define UAVIRS_SCA_TRAJECTORY_HPP

#include "uavirs/barrier.hpp"
#include "uavirs/channel.hpp"
#include "uavirs/scenario.hpp"
#include "uavirs/trajectory.hpp"

#include <Eigen/Dense>

#include <string>

namespace uavirs
{

// Time-averaged weighted utility (1/N) sum_k w_k sum_n a_k[n] F(gamma_k[n]).
double weighted_utility(const Scenario &s, const LinkState &ls, const Schedule &a);

// Per-IRS averages (1/N) sum_n a_k[n] F(gamma_k[n]).
Eigen::VectorXd irs_utilities(const Scenario &s, const LinkState &ls, const Schedule &a);

// min_k of irs_utilities.
double fairness_utility(const Scenario &s, const LinkState &ls, const Schedule &a);

// Per-slot achieved primary rate sum_k a_k[n] R_{u,k}[n].
Eigen::VectorXd slot_rates(const Scenario &s, const LinkState &ls, const Schedule &a);

// min_n (slot rate - R_th); nonnegative when every slot meets the target.
double rate_margin(const Scenario &s, const LinkState &ls, const Schedule &a);

// Taylor lower bound of beta0 / (|q - c|^2 + H^2)^(alpha/2) in |q - c|^2
// expanded at q_ref.
double beta_lower_bound(double beta0, double alpha, double H, Vec2 c, Vec2 q_ref, Vec2 q);

enum class ScaObjective
{
    WeightedSum,
    Fairness
};

struct ScaStep
{
    Trajectory q;                 // accepted trajectory (q_prev when rejected)
    double objective_prev = 0.0;  // true objective at q_prev
    double objective = 0.0;       // true objective at q
    double surrogate = 0.0;       // surrogate optimum
    bool moved = false;
    BarrierStatus status = BarrierStatus::Optimal;
    int newton_steps = 0;
    std::string note;
};

// Scaled convex surrogate around q_prev. Variables are the free waypoints
// followed by the slack variables; exposed for tests.
struct ScaProblem
{
    SmoothConvexProgram program;
    int free_points = 0;
    bool degenerate = false; // no movement possible
};

ScaProblem build_sca_problem(const Scenario &s, const Schedule &a, const Trajectory &q_prev, ScaObjective kind);

// Trajectory extracted from a surrogate solution vector.
Trajectory trajectory_from_solution(const Scenario &s, const Eigen::VectorXd &x);

// One SCA step: solve the surrogate around q_prev and keep the result only if
// the true objective does not decrease and every slot still meets R_th.
ScaStep sca_trajectory_step(const Scenario &s, const Schedule &a, const Trajectory &q_prev, ScaObjective kind);

} // namespace uavirs

#endif
