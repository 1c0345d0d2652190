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

#ifndef UAVIRS_CLOSED_FORMS_HPP
#define UAVIRS_CLOSED_FORMS_HPP

#include "uavirs/channel.hpp"
#include "uavirs/scenario.hpp"

#include <Eigen/Dense>

#include <vector>

namespace uavirs
{

// Reflection phases theta(k, n, m) in [0, 2 pi).
struct PhaseSchedule
{
    int K = 0, N = 0, M = 0;
    std::vector<double> theta; // k-major, then n, then m

    double &at(int k, int n, int m) { return theta[index(k, n, m)]; }
    double at(int k, int n, int m) const { return theta[index(k, n, m)]; }
    Eigen::VectorXd slot(int k, int n) const;

private:
    std::size_t index(int k, int n, int m) const
    {
        return (static_cast<std::size_t>(k) * N + n) * M + m;
    }
};

// Reduce an angle to [0, 2 pi).
double wrap_angle(double theta);

// Phases aligning every reflected LoS path with the direct LoS path.
Eigen::VectorXd optimal_phases_slot(const Scenario &s, const LinkState &ls, int k, int n);
PhaseSchedule optimal_phases(const LinkState &ls, const Scenario &s);

// |x0|^2 and |xbar0|^2 at the optimal phases.
double x0_sq_opt(const Scenario &s, const LinkState &ls, int k, int n);
double xbar0_sq_opt(const LinkState &ls, int k, int n);

// Mean components for an arbitrary phase vector: xbar0 is the LoS cascaded
// term, x0 adds the LoS direct link.
cplx xbar0_from_phases(const Scenario &s, const LinkState &ls, int k, int n, const Eigen::VectorXd &phases);
cplx x0_from_phases(const Scenario &s, const LinkState &ls, int k, int n, const Eigen::VectorXd &phases);

// Scattered power of the cascaded link, (K1+K2+1) M beta1 beta2 / ((K1+1)(K2+1)).
double cascaded_scatter(const Scenario &s, const LinkState &ls, int k, int n);

// Primary rate R_{u,k}[n] at the optimal phases.
double rate_uk(const LinkState &ls, const Scenario &s, int k, int n);

// K x N tables of rate_uk and utility F(gamma_k[n]).
Eigen::MatrixXd rate_table(const LinkState &ls, const Scenario &s);
Eigen::MatrixXd utility_table(const LinkState &ls, const Scenario &s);

} // namespace uavirs

#endif
