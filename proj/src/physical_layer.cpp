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

#include "uavirs/physical_layer.hpp"
#include "uavirs/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace uavirs
{

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

DetectionStats detection_stats(double reflect_power, double sigma2, double P, int L)
{
    return {P * reflect_power + sigma2, sigma2, L};
}

namespace
{

void require_detectable(const DetectionStats &st)
{
    if (!(st.sigma0_sq > 0.0) || !(st.sigma1_sq > st.sigma0_sq * (1.0 + 1e-15)))
        throw DegenerateChannel("sigma1^2 must exceed sigma0^2 for energy detection");
}

} // namespace

double optimal_threshold(const DetectionStats &st)
{
    require_detectable(st);
    const double s1 = st.sigma1_sq;
    const double s0 = st.sigma0_sq;
    const double L = st.L;
    const double inner = 1.0 + 2.0 * (s1 + s0) * std::log(s1 / s0) / (L * (s1 - s0));
    return L * s1 * s0 / (s1 + s0) * (1.0 + std::sqrt(inner));
}

double ber_at_threshold(const DetectionStats &st, double threshold, double rho)
{
    const double sl = std::sqrt(static_cast<double>(st.L));
    const double miss = q_function((st.L * st.sigma1_sq - threshold) / (sl * st.sigma1_sq));
    const double false_alarm = q_function((threshold - st.L * st.sigma0_sq) / (sl * st.sigma0_sq));
    return rho * miss + (1.0 - rho) * false_alarm;
}

double ber_closed_form(double reflect_power, double sigma2, double P, int L)
{
    const double pg = P * reflect_power;
    return q_function(std::sqrt(static_cast<double>(L)) * pg / (pg + 2.0 * sigma2));
}

cplx cascaded_gain(const Eigen::VectorXcd &h2, const Eigen::VectorXd &phases, const Eigen::VectorXcd &h1)
{
    cplx acc{0.0, 0.0};
    for (Eigen::Index m = 0; m < h1.size(); ++m)
        acc += std::conj(h2(m)) * std::polar(1.0, phases(m)) * h1(m);
    return acc;
}

double primary_rate_exact(const Scenario &s, const ChannelDraw &draw, const Eigen::VectorXd &phases)
{
    const cplx g = cascaded_gain(draw.h2, phases, draw.h1);
    const double on = std::norm(draw.h3 + g);
    const double off = std::norm(draw.h3);
    return s.rho * std::log2(1.0 + s.P * on / s.sigma2) + (1.0 - s.rho) * std::log2(1.0 + s.P * off / s.sigma2);
}

double primary_rate_bound(const Scenario &s, const LinkState &ls, double x0_sq, int k, int n)
{
    const double b1 = ls.beta1(k, n);
    const double b2 = ls.beta2(k);
    const double b3 = ls.beta3(n);
    const double scattered = (s.K1 + s.K2 + 1.0) * s.M * b1 * b2 / ((s.K1 + 1.0) * (s.K2 + 1.0));
    const double on = x0_sq + scattered + b3 / (s.K3 + 1.0);
    return (1.0 - s.rho) * std::log2(1.0 + s.P * b3 / s.sigma2) + s.rho * std::log2(1.0 + s.P * on / s.sigma2);
}

EnergyDetectionRun simulate_energy_detector(const DetectionStats &st, double rho, long symbols, Rng &rng)
{
    const double threshold = optimal_threshold(st);
    std::bernoulli_distribution prior(rho);
    // Real and imaginary parts of a CN(0, 1) receive sample.
    std::normal_distribution<double> part(0.0, std::sqrt(0.5));
    long errors = 0;
    long count_h0 = 0;
    double energy_h0 = 0.0;
    for (long i = 0; i < symbols; ++i)
    {
        const bool one = prior(rng);
        const double var = one ? st.sigma1_sq : st.sigma0_sq;
        double energy = 0.0;
        for (int l = 0; l < st.L; ++l)
        {
            const double re = part(rng);
            const double im = part(rng);
            energy += var * (re * re + im * im);
        }
        const bool decide_one = energy >= threshold;
        if (decide_one != one)
            ++errors;
        if (!one)
        {
            ++count_h0;
            energy_h0 += energy;
        }
    }
    return {static_cast<double>(errors) / static_cast<double>(symbols),
            count_h0 > 0 ? energy_h0 / static_cast<double>(count_h0) : 0.0, count_h0};
}

double ber_monte_carlo(const Scenario &s, const ChannelDraw &draw, const Eigen::VectorXd &phases, long symbols,
                       Rng &rng)
{
    if (symbols < 1000)
        throw InvalidInput("ber_monte_carlo needs at least 1000 symbols");
    const double g = std::norm(cascaded_gain(draw.h2, phases, draw.h1));
    return simulate_energy_detector(detection_stats(g, s.sigma2, s.P, s.L), s.rho, symbols, rng).ber;
}

double irs_snr(const Scenario &s, const LinkState &ls, int k, int n)
{
    return (ls.c1(k) + ls.c3(k)) * ls.beta1(k, n) / s.sigma2;
}

double utility_with_prefactor(double gamma, double prefactor) { return std::log2(1.0 + prefactor * gamma); }

double utility(double gamma, const Scenario &s) { return utility_with_prefactor(gamma, s.utility_scale()); }

} // namespace uavirs
