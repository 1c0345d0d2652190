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

#ifndef UAVIRS_CHANNEL_HPP
#define UAVIRS_CHANNEL_HPP

#include "uavirs/scenario.hpp"
#include "uavirs/trajectory.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace uavirs
{

using cplx = std::complex<double>;

// Geometry and large-scale quantities for every (IRS k, slot n). Matrices
// are K x N, vectors have K or N entries. The IRS-BS link is static.
struct LinkState
{
    Eigen::MatrixXd d1, beta1, cos_phi1; // UAV-IRS
    Eigen::VectorXd d2, beta2, cos_phi2; // IRS-BS
    Eigen::VectorXd d3, beta3;           // UAV-BS
    Eigen::VectorXd c1, c2, c3;          // per-IRS composite constants

    int K() const { return static_cast<int>(d2.size()); }
    int N() const { return static_cast<int>(d3.size()); }
};

// One Rician realization for a given (k, n).
struct ChannelDraw
{
    Eigen::VectorXcd h1; // UAV -> IRS, M entries
    Eigen::VectorXcd h2; // IRS -> BS, M entries
    cplx h3;             // UAV -> BS
};

// Large-scale gain beta0 / d^alpha.
double path_gain(double beta0, double distance, double alpha);

LinkState link_state(const Scenario &s, const Trajectory &traj);

// Single-slot variant: link quantities for one UAV position (N = 1).
LinkState link_state_at(const Scenario &s, Vec2 uav);

// ULA response exp(-j 2 pi dist / lambda) * exp(-j 2 pi d (m-1) cos_phi / lambda).
Eigen::VectorXcd los_steering(int m_count, double cos_phi, double dist, double lambda, double d_spacing);

// Deterministic LoS components of the three links at (k, n).
struct LosComponents
{
    Eigen::VectorXcd h1, h2;
    cplx h3;
};
LosComponents los_components(const Scenario &s, const LinkState &ls, int k, int n);

using Rng = std::mt19937_64;

// Independent stream keyed by (seed, a, b, c); used so every (k, n) slot
// draws from its own reproducible substream.
Rng make_substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

// Circularly-symmetric CN(0, 1) sample.
cplx complex_gaussian(Rng &rng);

// Unit-variance NLoS components, drawn in the order h1, h2, h3.
struct NlosDraw
{
    Eigen::VectorXcd h1, h2;
    cplx h3;
};
NlosDraw sample_nlos(int m_count, Rng &rng);

// Rician mixture sqrt(beta) (sqrt(K/(K+1)) LoS + sqrt(1/(K+1)) NLoS) per link.
ChannelDraw compose_channels(const Scenario &s, const LinkState &ls, int k, int n, const NlosDraw &nlos);

ChannelDraw sample_channels(const Scenario &s, const LinkState &ls, int k, int n, Rng &rng);

} // namespace uavirs

#endif
