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

#ifndef UAVIRS_LP_HPP
#define UAVIRS_LP_HPP

#include <Eigen/Dense>

#include <limits>

namespace uavirs
{

constexpr double lp_inf = std::numeric_limits<double>::infinity();

// Dense linear program:
//   max (or min) c'x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  lower <= x <= upper.
// Empty lower/upper mean 0 and +inf respectively.
struct LinearProgram
{
    Eigen::VectorXd c;
    Eigen::MatrixXd A_ub;
    Eigen::VectorXd b_ub;
    Eigen::MatrixXd A_eq;
    Eigen::VectorXd b_eq;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    bool maximize = true;
};

enum class LpStatus
{
    Optimal,
    Infeasible,
    Unbounded
};

struct LpResult
{
    Eigen::VectorXd x;
    double objective = 0.0;
    LpStatus status = LpStatus::Optimal;
    int pivots = 0;
};

// Two-phase dense simplex with Bland's rule. Returns the status rather than
// throwing.
LpResult simplex(const LinearProgram &lp, double tol = 1e-9);

// Same, but throws InfeasibleLP / UnboundedLP.
LpResult solve_lp(const LinearProgram &lp, double tol = 1e-9);

// Exact solution of the per-slot scheduling LP
//   max u'a  s.t.  r'a >= R_th,  sum(a) <= 1,  0 <= a <= 1
// by enumerating every vertex (at most two nonzero entries). Ties go to the
// first candidate in the order: zero, unit vectors, scaled unit vectors,
// pairs (lowest indices first). Returns false when the slot is infeasible.
bool solve_slot_lp(const Eigen::VectorXd &u, const Eigen::VectorXd &r, double R_th, Eigen::VectorXd &a,
                   double tol = 1e-12);

// Every vertex of the slot polytope (columns), in enumeration order.
Eigen::MatrixXd slot_lp_vertices(const Eigen::VectorXd &r, double R_th, double tol = 1e-12);

} // namespace uavirs

#endif
