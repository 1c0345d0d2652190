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

#ifndef UAVIRS_PHYSICAL_LAYER_HPP
#define UAVIRS_PHYSICAL_LAYER_HPP

#include "uavirs/channel.hpp"
#include "uavirs/scenario.hpp"

#include <Eigen/Dense>

namespace uavirs
{

// Tail probability of the standard normal, 0.5 * erfc(x / sqrt(2)).
double q_function(double x);

// Received-energy statistics of the joint-energy detector for one IRS symbol.
struct DetectionStats
{
    double sigma1_sq; // variance per sample when the IRS reflects ("1")
    double sigma0_sq; // variance per sample when it absorbs ("0")
    int L;            // primary symbols per IRS symbol
};

DetectionStats detection_stats(double reflect_power, double sigma2, double P, int L);

// Optimal energy threshold for the Gaussian approximation of the energy
// statistic. Throws DegenerateChannel when sigma1^2 does not exceed sigma0^2.
double optimal_threshold(const DetectionStats &stats);

// Error probability at a given threshold under the Gaussian model with prior
// rho on symbol "1".
double ber_at_threshold(const DetectionStats &stats, double threshold, double rho);

// Large-L closed form Q(sqrt(L) * P g / (P g + 2 sigma^2)), g = |h2^H Theta h1|^2.
double ber_closed_form(double reflect_power, double sigma2, double P, int L);

// Reflection matrix applied elementwise: h2^H diag(exp(j theta)) h1.
cplx cascaded_gain(const Eigen::VectorXcd &h2, const Eigen::VectorXd &phases, const Eigen::VectorXcd &h1);

// Instantaneous primary rate for one channel draw and phase vector.
double primary_rate_exact(const Scenario &s, const ChannelDraw &draw, const Eigen::VectorXd &phases);

// Jensen upper bound on the average primary rate given |x0|^2.
double primary_rate_bound(const Scenario &s, const LinkState &ls, double x0_sq, int k, int n);

// Monte-Carlo BER of the energy detector with OOK prior rho for a fixed
// draw and phase vector. Throws DegenerateChannel for a zero reflection.
double ber_monte_carlo(const Scenario &s, const ChannelDraw &draw, const Eigen::VectorXd &phases,
                       long symbols, Rng &rng);

// Same simulation driven directly by detector statistics.
struct EnergyDetectionRun
{
    double ber;
    double mean_energy_h0; // sample mean of the statistic under "0"
    long count_h0;
};
EnergyDetectionRun simulate_energy_detector(const DetectionStats &stats, double rho, long symbols, Rng &rng);

// Average IRS SNR under optimal phases, (c1 + c3) beta1 / sigma^2.
double irs_snr(const Scenario &s, const LinkState &ls, int k, int n);

// Utility log2(1 + prefactor * gamma); prefactor defaults to L * P.
double utility(double gamma, const Scenario &s);
double utility_with_prefactor(double gamma, double prefactor);

} // namespace uavirs

#endif
