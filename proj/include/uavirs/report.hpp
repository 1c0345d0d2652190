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

#ifndef UAVIRS_REPORT_HPP
#define UAVIRS_REPORT_HPP

#include "uavirs/closed_forms.hpp"
#include "uavirs/trajectory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uavirs
{

enum class SolveStatus
{
    Converged,
    MaxIter,
    Infeasible,
    NonConverged
};

const char *to_string(SolveStatus s);

// One outer penalty iteration: coefficient used, violation reached and the
// fairness level at the end of its inner loop.
struct OuterRecord
{
    double eta = 0.0;
    double xi = 0.0;
    double objective = 0.0;
    int inner_iterations = 0;
};

struct SolveReport
{
    std::string algorithm;               // "weighted-sum" or "fairness"
    std::vector<double> objective_trace; // one entry per AO iteration
    std::vector<double> xi_trace;        // violation (or binariness gap) per entry
    std::vector<OuterRecord> outer_trace;
    int iterations = 0;                  // total AO iterations
    int outer_iterations = 0;
    SolveStatus status = SolveStatus::Converged;
    bool non_binary = false;             // a scheduling LP returned a fractional vertex
    double objective = 0.0;              // final achieved utility
    double upper_bound = 0.0;
    double rate_margin = 0.0;            // min_n slot rate - R_th at the final schedule
    double binariness = 0.0;             // max min(a, 1 - a) before rounding
    double xi = 0.0;
    double wall_time_s = 0.0;
    std::vector<std::string> notes;
};

struct Solution
{
    Trajectory trajectory;
    Schedule schedule;
    PhaseSchedule phases;
    SolveReport report;
};

// Warm start and freezing controls shared by both algorithms.
struct SolveOptions
{
    std::optional<Trajectory> initial;
    bool freeze_trajectory = false;
};

} // namespace uavirs

#endif
