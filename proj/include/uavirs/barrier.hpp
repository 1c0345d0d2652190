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

#ifndef UAVIRS_BARRIER_HPP
#define UAVIRS_BARRIER_HPP

#include "uavirs/scenario.hpp"

#include <Eigen/Dense>

#include <functional>
#include <random>
#include <vector>

namespace uavirs
{

// Smooth function of the variables listed in support. eval receives the
// restriction of x to the support and fills the value and, when requested,
// the local gradient and Hessian. Returns false outside the domain.
struct SmoothFunction
{
    using Eval = std::function<bool(const Eigen::VectorXd &xl, double &value, Eigen::VectorXd *grad,
                                    Eigen::MatrixXd *hess)>;
    std::vector<int> support;
    Eval eval;
};

// maximize sum(objective)  s.t.  constraints[i](x) <= 0,  A_eq x = b_eq.
// Objective terms must be concave and constraints convex.
struct SmoothConvexProgram
{
    int n = 0;
    std::vector<SmoothFunction> objective;
    std::vector<SmoothFunction> constraints;
    Eigen::MatrixXd A_eq;
    Eigen::VectorXd b_eq;
    Eigen::VectorXd x0; // strictly feasible start
};

enum class BarrierStatus
{
    Optimal,
    LineSearchStall,
    MaxNewton
};

struct BarrierResult
{
    Eigen::VectorXd x;
    double objective = 0.0;
    BarrierStatus status = BarrierStatus::Optimal;
    int newton_steps = 0;
    int stages = 0;
    double mu = 0.0;
    double stationarity = 0.0;   // |grad of Lagrangian|_inf with lambda_i = mu / (-g_i)
    double max_constraint = 0.0; // max_i g_i(x), negative
    Eigen::VectorXd lambda;
};

double evaluate_objective(const SmoothConvexProgram &p, const Eigen::VectorXd &x);

// Largest constraint value; +inf when a constraint is outside its domain.
double max_constraint(const SmoothConvexProgram &p, const Eigen::VectorXd &x);

// Log-barrier Newton method. Throws InfeasibleStart when x0 is not strictly
// feasible.
BarrierResult solve_sca_subproblem(const SmoothConvexProgram &p, const BarrierParams &bp = {});

// Phase one: returns a strictly feasible point starting from p.x0 (which need
// only lie in every domain), or throws InfeasibleStart.
Eigen::VectorXd find_strictly_feasible(const SmoothConvexProgram &p, const BarrierParams &bp = {});

// Largest midpoint-convexity violation f((x+y)/2) - (f(x)+f(y))/2 over random
// pairs around x (sign flipped for concave functions).
double convexity_violation(const SmoothFunction &f, const Eigen::VectorXd &x, double radius, int samples,
                           std::mt19937_64 &rng, bool concave = false);

} // namespace uavirs

#endif
