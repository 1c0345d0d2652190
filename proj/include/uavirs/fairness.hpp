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

#ifndef UAVIRS_FAIRNESS_HPP
#define UAVIRS_FAIRNESS_HPP

#include "uavirs/channel.hpp"
#include "uavirs/qp.hpp"
#include "uavirs/report.hpp"
#include "uavirs/scenario.hpp"

namespace uavirs
{

// (a + a^2) / (1 + a^2) elementwise.
Schedule update_a_bar(const Schedule &a);

// (1 / (2 eta)) sum [a^2 (1 - a_bar)^2 + (a - a_bar)^2].
double penalty_value(const Schedule &a, const Schedule &a_bar, double eta);

// max over entries of max(|a (1 - a_bar)|, |a - a_bar|).
double violation(const Schedule &a, const Schedule &a_bar);

struct PenaltySchedule
{
    Schedule a;
    double R = 0.0;
    QpResult qp;
};

// Scheduling QP of the penalty method for a fixed trajectory.
PenaltySchedule schedule_penalty_subproblem(const Scenario &s, const LinkState &ls, const Schedule &a_bar,
                                            double eta);

// The underlying QP (objective scaled by eta); exposed for tests.
QuadraticProgram penalty_qp(const Scenario &s, const LinkState &ls, const Schedule &a_bar, double eta);

struct PenaltyTrajectory
{
    Trajectory q;
    double R = 0.0;
};

PenaltyTrajectory trajectory_penalty_subproblem(const Scenario &s, const Schedule &a, const Trajectory &q_prev);

// Rounds at 0.5; a slot that then misses R_th gets the rate-feasible IRS
// with the largest share instead. Repaired slots are appended to repaired.
Schedule binarize_schedule(const Scenario &s, const LinkState &ls, const Schedule &a,
                           std::vector<int> *repaired = nullptr);

Solution run_fairness(const Scenario &s, const SolveOptions &opt = {});

struct FairnessBound
{
    double lp_value = 0.0;
    double closed_form = 0.0;   // 1 / sum_k 1 / U_k
    Eigen::VectorXd time_ratio; // x_k
};

FairnessBound fairness_upper_bound_detail(const Scenario &s);
double fairness_upper_bound(const Scenario &s);

} // namespace uavirs

#endif
