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

#include "uavirs/channel.hpp"
#include "uavirs/errors.hpp"

#include <cmath>
#include <numbers>

namespace uavirs
{

double path_gain(double beta0, double distance, double alpha) { return beta0 / std::pow(distance, alpha); }

namespace
{

void fill_static(const Scenario &s, LinkState &ls)
{
    const int K = s.K();
    const double M = s.M;
    ls.d2.resize(K);
    ls.beta2.resize(K);
    ls.cos_phi2.resize(K);
    ls.c1.resize(K);
    ls.c2.resize(K);
    ls.c3.resize(K);
    const double dh = s.H_b - s.H_s;
    const double k12 = (s.K1 + 1.0) * (s.K2 + 1.0);
    for (int k = 0; k < K; ++k)
    {
        const double d2 = std::sqrt(norm_sq(s.bs - s.irs[k]) + dh * dh);
        ls.d2(k) = d2;
        ls.beta2(k) = path_gain(s.beta0, d2, s.alpha2);
        ls.cos_phi2(k) = (s.bs.x - s.irs[k].x) / d2;
        ls.c1(k) = s.K1 * s.K2 * M * M * ls.beta2(k) / k12;
        ls.c2(k) = 2.0 * M * std::sqrt(s.K1 * s.K2 * s.K3 * ls.beta2(k) / (k12 * (s.K3 + 1.0)));
        ls.c3(k) = (1.0 + s.K1 + s.K2) * M * ls.beta2(k) / k12;
    }
}

void fill_slot(const Scenario &s, LinkState &ls, int n, Vec2 uav)
{
    const double dh1 = s.H_u - s.H_s;
    const double dh3 = s.H_b - s.H_u;
    for (int k = 0; k < s.K(); ++k)
    {
        const double d1 = std::sqrt(norm_sq(uav - s.irs[k]) + dh1 * dh1);
        ls.d1(k, n) = d1;
        ls.beta1(k, n) = path_gain(s.beta0, d1, s.alpha1);
        ls.cos_phi1(k, n) = (s.irs[k].x - uav.x) / d1;
    }
    const double d3 = std::sqrt(norm_sq(uav - s.bs) + dh3 * dh3);
    ls.d3(n) = d3;
    ls.beta3(n) = path_gain(s.beta0, d3, s.alpha3);
}

void size_slots(LinkState &ls, int K, int N)
{
    ls.d1.resize(K, N);
    ls.beta1.resize(K, N);
    ls.cos_phi1.resize(K, N);
    ls.d3.resize(N);
    ls.beta3.resize(N);
}

} // namespace

LinkState link_state(const Scenario &s, const Trajectory &traj)
{
    if (traj.slots() != s.N)
        throw DimensionMismatch("trajectory has " + std::to_string(traj.q.size()) + " points, expected " +
                                std::to_string(s.N + 1));
    LinkState ls;
    fill_static(s, ls);
    size_slots(ls, s.K(), s.N);
    for (int n = 0; n < s.N; ++n)
        fill_slot(s, ls, n, traj.slot_position(n));
    return ls;
}

LinkState link_state_at(const Scenario &s, Vec2 uav)
{
    LinkState ls;
    fill_static(s, ls);
    size_slots(ls, s.K(), 1);
    fill_slot(s, ls, 0, uav);
    return ls;
}

Eigen::VectorXcd los_steering(int m_count, double cos_phi, double dist, double lambda, double d_spacing)
{
    if (m_count < 1)
        throw InvalidInput("steering vector needs at least one element");
    if (!(std::abs(cos_phi) <= 1.0))
        throw InvalidInput("|cos_phi| must not exceed 1");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double common = -two_pi * dist / lambda;
    const double step = -two_pi * d_spacing * cos_phi / lambda;
    Eigen::VectorXcd v(m_count);
    for (int m = 0; m < m_count; ++m)
        v(m) = std::polar(1.0, common + step * m);
    return v;
}

LosComponents los_components(const Scenario &s, const LinkState &ls, int k, int n)
{
    const double d = s.element_spacing();
    return {los_steering(s.M, ls.cos_phi1(k, n), ls.d1(k, n), s.lambda, d),
            los_steering(s.M, ls.cos_phi2(k), ls.d2(k), s.lambda, d),
            std::polar(1.0, -2.0 * std::numbers::pi * ls.d3(n) / s.lambda)};
}

Rng make_substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(a),    static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b),    static_cast<std::uint32_t>(b >> 32),
                      static_cast<std::uint32_t>(c),    static_cast<std::uint32_t>(c >> 32)};
    return Rng(seq);
}

cplx complex_gaussian(Rng &rng)
{
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

NlosDraw sample_nlos(int m_count, Rng &rng)
{
    NlosDraw d;
    d.h1.resize(m_count);
    d.h2.resize(m_count);
    for (int m = 0; m < m_count; ++m)
        d.h1(m) = complex_gaussian(rng);
    for (int m = 0; m < m_count; ++m)
        d.h2(m) = complex_gaussian(rng);
    d.h3 = complex_gaussian(rng);
    return d;
}

ChannelDraw compose_channels(const Scenario &s, const LinkState &ls, int k, int n, const NlosDraw &nlos)
{
    const LosComponents los = los_components(s, ls, k, n);
    auto mix = [](double beta, double kf) {
        return std::pair{std::sqrt(beta * kf / (kf + 1.0)), std::sqrt(beta / (kf + 1.0))};
    };
    const auto [l1, n1] = mix(ls.beta1(k, n), s.K1);
    const auto [l2, n2] = mix(ls.beta2(k), s.K2);
    const auto [l3, n3] = mix(ls.beta3(n), s.K3);
    ChannelDraw out;
    out.h1 = l1 * los.h1 + n1 * nlos.h1;
    out.h2 = l2 * los.h2 + n2 * nlos.h2;
    out.h3 = l3 * los.h3 + n3 * nlos.h3;
    return out;
}

ChannelDraw sample_channels(const Scenario &s, const LinkState &ls, int k, int n, Rng &rng)
{
    return compose_channels(s, ls, k, n, sample_nlos(s.M, rng));
}

} // namespace uavirs
