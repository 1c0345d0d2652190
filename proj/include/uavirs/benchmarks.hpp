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

#ifndef UAVIRS_BENCHMARKS_HPP
#define UAVIRS_BENCHMARKS_HPP

#include "uavirs/channel.hpp"
#include "uavirs/report.hpp"
#include "uavirs/scenario.hpp"

#include <string>
#include <vector>

namespace uavirs
{

// Constant angular speed on a circle through q_init; q[0] = q[N] = q_init.
// A negative radius means |q_init - centre|. Throws InvalidInput when
// q_init is off the circle, q_final differs from q_init, or the chord per
// slot exceeds V_max * delta.
Trajectory circular_trajectory(const Scenario &s, double radius = -1.0, Vec2 centre = {0.0, 0.0});

// Per-slot utilities and primary-rate bounds with every phase set to theta0.
struct FixedPhaseTable
{
    Eigen::MatrixXd utility; // K x N
    Eigen::MatrixXd rate;    // K x N
};
FixedPhaseTable fixed_phase_eval(const Scenario &s, const Trajectory &traj, double theta0);

// Same evaluation for explicit per-slot phase vectors (used to check the
// optimal-phase case).
double fixed_phase_utility(const Scenario &s, const LinkState &ls, int k, int n, const Eigen::VectorXd &phases);

enum class Objective
{
    WeightedSum,
    Fairness
};

enum class Sweep
{
    None,
    Period,
    Elements
};

struct ComparisonRow
{
    std::string objective; // "wsb" or "fair"
    std::string scheme;    // proposed, circular, fixed-pi, fixed-pi/2, upper-bound
    std::string sweep;     // "T", "M" or "-"
    double point = 0.0;    // sweep value
    double value = 0.0;    // achieved utility
    double rate_margin = 0.0;
    std::string status;
};

struct CompareOptions
{
    std::vector<double> periods{10.0, 20.0, 30.0, 40.0};
    std::vector<int> elements{20, 40, 60, 80, 100};
    std::vector<std::string> schemes; // empty means all
    bool weighted_sum = true;
    bool fairness = true;
};

std::vector<std::string> known_schemes();

// Rows for every scheme at every sweep point (or at the scenario itself for
// Sweep::None). Deterministic.
std::vector<ComparisonRow> compare_schemes(const Scenario &s, Sweep sweep, const CompareOptions &opt = {});

} // namespace uavirs

#endif
