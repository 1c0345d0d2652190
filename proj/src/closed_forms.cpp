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

#include "uavirs/closed_forms.hpp"
#include "uavirs/physical_layer.hpp"

#include <cmath>
#include <numbers>

namespace uavirs
{

namespace
{
constexpr double two_pi = 2.0 * std::numbers::pi;
}

Eigen::VectorXd PhaseSchedule::slot(int k, int n) const
{
    Eigen::VectorXd v(M);
    for (int m = 0; m < M; ++m)
        v(m) = at(k, n, m);
    return v;
}

double wrap_angle(double theta)
{
    double r = std::fmod(theta, two_pi);
    if (r < 0.0)
        r += two_pi;
    if (r >= two_pi)
        r = 0.0;
    return r;
}

Eigen::VectorXd optimal_phases_slot(const Scenario &s, const LinkState &ls, int k, int n)
{
    const double d = s.element_spacing();
    const double dcos = ls.cos_phi2(k) - ls.cos_phi1(k, n);
    const double offset = -(ls.d1(k, n) - ls.d2(k)) + ls.d3(n);
    Eigen::VectorXd th(s.M);
    for (int m = 0; m < s.M; ++m)
    {
        // Reduce the path-length term first to keep precision for long links.
        const double cycles = (d * dcos * m + offset) / s.lambda;
        th(m) = wrap_angle(-two_pi * (cycles - std::floor(cycles)));
    }
    return th;
}

PhaseSchedule optimal_phases(const LinkState &ls, const Scenario &s)
{
    PhaseSchedule ps;
    ps.K = ls.K();
    ps.N = ls.N();
    ps.M = s.M;
    ps.theta.resize(static_cast<std::size_t>(ps.K) * ps.N * ps.M);
    for (int k = 0; k < ps.K; ++k)
        for (int n = 0; n < ps.N; ++n)
        {
            const Eigen::VectorXd th = optimal_phases_slot(s, ls, k, n);
            for (int m = 0; m < ps.M; ++m)
                ps.at(k, n, m) = th(m);
        }
    return ps;
}

double x0_sq_opt(const Scenario &s, const LinkState &ls, int k, int n)
{
    const double b1 = ls.beta1(k, n);
    const double b2 = ls.beta2(k);
    const double b3 = ls.beta3(n);
    const double k12 = (s.K1 + 1.0) * (s.K2 + 1.0);
    const double M = s.M;
    return s.K3 * b3 / (s.K3 + 1.0) + s.K1 * s.K2 * M * M * b1 * b2 / k12 +
           2.0 * M * std::sqrt(s.K1 * s.K2 * s.K3 * b1 * b2 * b3 / (k12 * (s.K3 + 1.0)));
}

double xbar0_sq_opt(const LinkState &ls, int k, int n) { return ls.c1(k) * ls.beta1(k, n); }

cplx xbar0_from_phases(const Scenario &s, const LinkState &ls, int k, int n, const Eigen::VectorXd &phases)
{
    const LosComponents los = los_components(s, ls, k, n);
    const double amp = std::sqrt(s.K1 * s.K2 * ls.beta1(k, n) * ls.beta2(k) / ((s.K1 + 1.0) * (s.K2 + 1.0)));
    return amp * cascaded_gain(los.h2, phases, los.h1);
}

cplx x0_from_phases(const Scenario &s, const LinkState &ls, int k, int n, const Eigen::VectorXd &phases)
{
    const cplx direct = std::sqrt(s.K3 * ls.beta3(n) / (s.K3 + 1.0)) *
                        std::polar(1.0, -two_pi * ls.d3(n) / s.lambda);
    return direct + xbar0_from_phases(s, ls, k, n, phases);
}

double cascaded_scatter(const Scenario &s, const LinkState &ls, int k, int n)
{
    return (s.K1 + s.K2 + 1.0) * s.M * ls.beta1(k, n) * ls.beta2(k) / ((s.K1 + 1.0) * (s.K2 + 1.0));
}

double rate_uk(const LinkState &ls, const Scenario &s, int k, int n)
{
    const double b1 = ls.beta1(k, n);
    const double b3 = ls.beta3(n);
    const double on = (ls.c1(k) + ls.c3(k)) * b1 + ls.c2(k) * std::sqrt(b1 * b3) + b3;
    return (1.0 - s.rho) * std::log2(1.0 + s.P * b3 / s.sigma2) + s.rho * std::log2(1.0 + s.P * on / s.sigma2);
}

Eigen::MatrixXd rate_table(const LinkState &ls, const Scenario &s)
{
    Eigen::MatrixXd r(ls.K(), ls.N());
    for (int k = 0; k < ls.K(); ++k)
        for (int n = 0; n < ls.N(); ++n)
            r(k, n) = rate_uk(ls, s, k, n);
    return r;
}

Eigen::MatrixXd utility_table(const LinkState &ls, const Scenario &s)
{
    Eigen::MatrixXd f(ls.K(), ls.N());
    for (int k = 0; k < ls.K(); ++k)
        for (int n = 0; n < ls.N(); ++n)
            f(k, n) = utility(irs_snr(s, ls, k, n), s);
    return f;
}

} // namespace uavirs
