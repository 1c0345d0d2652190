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

#ifndef UAVIRS_QP_HPP
#define UAVIRS_QP_HPP

#include <Eigen/Dense>

namespace uavirs
{

// Convex quadratic program
//   min 1/2 x'Hx + g'x  s.t.  A x <= b,  A_eq x = b_eq,  lower <= x <= upper.
// Bounds may be infinite; empty bound vectors mean unbounded.
struct QuadraticProgram
{
    Eigen::MatrixXd H;
    Eigen::VectorXd g;
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    Eigen::MatrixXd A_eq;
    Eigen::VectorXd b_eq;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
};

enum class QpStatus
{
    Optimal,
    Infeasible,
    MaxIter
};

struct QpResult
{
    Eigen::VectorXd x;
    Eigen::VectorXd z;       // multipliers of A x <= b
    Eigen::VectorXd y;       // multipliers of A_eq x = b_eq
    Eigen::VectorXd z_lower; // bound multipliers
    Eigen::VectorXd z_upper;
    double objective = 0.0;
    QpStatus status = QpStatus::Optimal;
    int iterations = 0;
    bool polished = false;
    double stationarity = 0.0; // |Hx + g + A'z + A_eq'y - z_lower + z_upper|_inf
    double complementarity = 0.0;
    double primal_residual = 0.0;
};

struct QpOptions
{
    int max_iter = 200;
    double tol = 1e-11;
    bool polish = true;
};

// Mehrotra predictor-corrector interior point, followed by an exact
// active-set solve when it verifies. Does not throw on infeasibility.
QpResult qp_interior_point(const QuadraticProgram &qp, const QpOptions &opt = {});

// Same, throwing InfeasibleError when no feasible point exists and
// SolverError when the iteration cap is hit without convergence.
QpResult solve_qp_linear(const QuadraticProgram &qp, const QpOptions &opt = {});

// Residuals of a candidate primal-dual point.
void qp_residuals(const QuadraticProgram &qp, QpResult &r);

} // namespace uavirs

#endif
