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

#ifndef UAVIRS_WEIGHTED_SUM_HPP
#define UAVIRS_WEIGHTED_SUM_HPP

#include "uavirs/channel.hpp"
#include "uavirs/report.hpp"
#include "uavirs/scenario.hpp"

namespace uavirs
{

// Per-slot exact scheduling LP. Throws InfeasibleSlot for the first slot
// with no feasible association. Sets *fractional when a slot optimum is not
// binary.
Schedule schedule_subproblem(const Scenario &s, const LinkState &ls, bool *fractional = nullptr);

// One SCA trajectory step for a fixed schedule.
Trajectory trajectory_subproblem(const Scenario &s, const Schedule &sched, const Trajectory &q_prev);

// Starting trajectory: circle through q_init centred at the BS, else
// hovering at q_init, else the straight line. Throws InfeasibleError when no
// candidate admits a feasible schedule in every slot.
Trajectory initial_trajectory(const Scenario &s);

// True when every slot has at least one IRS meeting R_th alone.
bool schedule_feasible(const Scenario &s, const Trajectory &traj);

Solution run_weighted_sum(const Scenario &s, const SolveOptions &opt = {});

// max_k w_k log2(1 + s_pref (c1 + c3) beta0 / (sigma^2 (H_u - H_s)^alpha1)).
double weighted_sum_upper_bound(const Scenario &s);

// Per-IRS hover utilities U_k.
Eigen::VectorXd hover_utilities(const Scenario &s);

} // namespace uavirs

#endif
