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

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "uavirs/errors.hpp"
#include "uavirs/physical_layer.hpp"

#include <cmath>
#include <random>

using namespace uavirs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Q function against 40-digit references", "[physical_layer]")
{
    CHECK(q_function(0.0) == 0.5);
    CHECK_THAT(q_function(0.5), WithinAbs(0.30853753872598689636, 1e-15));
    CHECK_THAT(q_function(1.0), WithinAbs(0.15865525393145705141, 1e-15));
    CHECK_THAT(q_function(2.0), WithinAbs(0.0227501319481792072, 1e-15));
    CHECK_THAT(q_function(3.0), WithinRel(0.0013498980316300945267, 1e-13));
    CHECK_THAT(q_function(5.0), WithinRel(2.8665157187919391167e-7, 1e-13));
    CHECK_THAT(q_function(8.0), WithinRel(6.2209605742717841235e-16, 1e-12));
    CHECK_THAT(q_function(-1.5), WithinAbs(0.933192798731141934, 1e-15));
    CHECK(q_function(40.0) <= 1e-300);
    for (double x = -10.0; x <= 10.0; x += 0.37)
        CHECK_THAT(q_function(x) + q_function(-x), WithinAbs(1.0, 1e-12));
}

TEST_CASE("optimal detection threshold", "[physical_layer]")
{
    const auto direct = [](double s1, double s0, double L) {
        return L * s1 * s0 / (s1 + s0) * (1.0 + std::sqrt(1.0 + 2.0 * (s1 + s0) * std::log(s1 / s0) / (L * (s1 - s0))));
    };
    CHECK_THAT(optimal_threshold({2.0, 1.0, 512}), WithinRel(direct(2.0, 1.0, 512.0), 1e-14));
    CHECK_THAT(optimal_threshold({3.5e-9, 1e-9, 64}), WithinRel(direct(3.5e-9, 1e-9, 64.0), 1e-14));

    const double s1 = 1.3, s0 = 1.0, L = 1e6;
    CHECK_THAT(optimal_threshold({s1, s0, static_cast<int>(L)}), WithinRel(2.0 * L * s1 * s0 / (s1 + s0), 0.01));

    const DetectionStats st{2.0, 1.0, 512};
    const double th = optimal_threshold(st);
    CHECK(th > 512.0 * 1.0);
    CHECK(th < 512.0 * 2.0);

    CHECK_THROWS_AS(optimal_threshold({1.0, 1.0, 512}), DegenerateChannel);
    CHECK_THROWS_AS(optimal_threshold({0.5, 1.0, 512}), DegenerateChannel);
}

TEST_CASE("closed-form BER", "[physical_layer]")
{
    CHECK(ber_closed_form(0.0, 1e-9, 0.1, 512) == 0.5);
    CHECK(ber_closed_form(1.0, 1e-9, 0.1, 512) < 1e-100);
    // P g = 2 sigma^2, L = 100: Q(10 * 1/2) = Q(5).
    CHECK_THAT(ber_closed_form(2.0, 1.0, 1.0, 100), WithinRel(2.8665157187919391167e-7, 1e-12));
}

TEST_CASE("closed-form BER is monotone in power and block length", "[physical_layer]")
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i)
    {
        const double g = std::pow(10.0, -12.0 + 6.0 * u(rng));
        const double g2 = g * (1.0 + 3.0 * u(rng));
        const int L = 1 + static_cast<int>(1000 * u(rng));
        const int L2 = L + 1 + static_cast<int>(100 * u(rng));
        const double p = ber_closed_form(g, 1e-9, 0.1, L);
        CHECK(ber_closed_form(g2, 1e-9, 0.1, L) <= p);
        CHECK(ber_closed_form(g, 1e-9, 0.1, L2) <= p);
        CHECK(p >= 0.0);
        CHECK(p <= 0.5);
    }
}

TEST_CASE("exact primary rate special cases", "[physical_layer]")
{
    Scenario s = default_scenario();
    s.M = 1;
    s.P = 1.0;
    s.sigma2 = 1.0;
    ChannelDraw d;
    d.h1 = Eigen::VectorXcd::Ones(1);
    d.h2 = Eigen::VectorXcd::Ones(1);
    d.h3 = 1.0;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);

    s.rho = 0.3;
    CHECK_THAT(primary_rate_exact(s, d, zero), WithinRel(0.3 * std::log2(5.0) + 0.7 * std::log2(2.0), 1e-14));

    s.rho = 0.0;
    d.h3 = {0.6, -0.2};
    CHECK_THAT(primary_rate_exact(s, d, zero), WithinRel(std::log2(1.0 + 0.4), 1e-14));

    s.rho = 1.0;
    d.h3 = 0.0;
    d.h1(0) = {0.0, 2.0};
    d.h2(0) = {1.5, 0.0};
    CHECK_THAT(primary_rate_exact(s, d, zero), WithinRel(std::log2(1.0 + 9.0), 1e-14));
}

TEST_CASE("rate bound special cases", "[physical_layer]")
{
    Scenario s = default_scenario();
    const LinkState ls = link_state_at(s, {4.0, -9.0});
    const double b3 = ls.beta3(0);
    const double direct = std::log2(1.0 + s.P * b3 / s.sigma2);

    Scenario r0 = s;
    r0.rho = 0.0;
    CHECK_THAT(primary_rate_bound(r0, ls, 123.0, 0, 0), WithinRel(direct, 1e-14));

    // Without reflecting elements only the direct path is left.
    Scenario m0 = s;
    m0.M = 0;
    CHECK_THAT(primary_rate_bound(m0, ls, s.K3 * b3 / (s.K3 + 1.0), 0, 0), WithinRel(direct, 1e-13));

    const double x0 = 3e-7;
    const double b1 = ls.beta1(3, 0), b2 = ls.beta2(3);
    const double inner = x0 + (s.K1 + s.K2 + 1.0) * s.M * b1 * b2 / ((s.K1 + 1.0) * (s.K2 + 1.0)) + b3 / (s.K3 + 1.0);
    const double expected = (1.0 - s.rho) * direct + s.rho * std::log2(1.0 + s.P * inner / s.sigma2);
    CHECK_THAT(primary_rate_bound(s, ls, x0, 3, 0), WithinRel(expected, 1e-14));
}

TEST_CASE("energy detector statistics", "[physical_layer]")
{
    Rng guard = make_substream(1, 1);
    const ChannelDraw silent{Eigen::VectorXcd::Zero(50), Eigen::VectorXcd::Zero(50), 0.0};
    CHECK_THROWS_AS(ber_monte_carlo(default_scenario(), silent, Eigen::VectorXd::Zero(50), 1000, guard),
                    DegenerateChannel);

    const double sigma2 = 1e-9, P = 0.1;
    const int L = 512;
    const double g = 0.15 * sigma2 / P;
    const DetectionStats st = detection_stats(g, sigma2, P, L);
    CHECK_THAT(st.sigma0_sq, WithinRel(sigma2, 1e-15));
    CHECK_THAT(st.sigma1_sq, WithinRel(P * g + sigma2, 1e-15));

    Rng rng = make_substream(4, 99);
    const long symbols = 100000;
    const EnergyDetectionRun run = simulate_energy_detector(st, 0.5, symbols, rng);
    const double p = ber_closed_form(g, sigma2, P, L);
    REQUIRE(p > 1e-3);
    REQUIRE(p < 0.3);
    CHECK(std::abs(run.ber - p) <= 3.0 * std::sqrt(p * (1.0 - p) / symbols));

    // Energy of L exponential samples: mean L sigma0^2, variance L sigma0^4.
    const double se = sigma2 * std::sqrt(static_cast<double>(L) / run.count_h0);
    CHECK(std::abs(run.mean_energy_h0 - L * sigma2) <= 3.0 * se);
}

TEST_CASE("IRS SNR and utility", "[physical_layer]")
{
    const Scenario s = default_scenario();
    const LinkState ls = link_state_at(s, s.irs[0]);
    const double den = (s.K1 + 1.0) * (s.K2 + 1.0);
    const double b2 = test_support::gain_from_geometry(s.beta0, s.alpha2, s.irs[0].x, s.irs[0].y, 0.0);
    const double c1 = s.K1 * s.K2 * s.M * s.M * b2 / den;
    const double c3 = (1.0 + s.K1 + s.K2) * s.M * b2 / den;
    const double b1 = 7.5427204206814538581e-7;
    CHECK_THAT(irs_snr(s, ls, 0, 0), WithinRel((c1 + c3) * b1 / s.sigma2, 1e-12));

    const LinkState far = link_state_at(s, {1e7, 1e7});
    const double b1_far = test_support::gain_from_geometry(s.beta0, s.alpha1, 1e7 - s.irs[0].x, 1e7 - s.irs[0].y,
                                                           s.H_u - s.H_s);
    CHECK_THAT(irs_snr(s, far, 0, 0), WithinRel((c1 + c3) * b1_far / s.sigma2, 1e-12));

    Scenario twice = s;
    twice.M = 2 * s.M;
    const double ratio = irs_snr(twice, link_state_at(twice, s.irs[0]), 0, 0) / irs_snr(s, ls, 0, 0);
    CHECK(ratio > 2.0);
    CHECK(ratio < 4.0);

    const double pref = s.utility_scale();
    CHECK_THAT(pref, WithinRel(s.L * s.P, 1e-15));
    CHECK(utility(0.0, s) == 0.0);
    CHECK_THAT(utility(1.0 / pref, s), WithinRel(1.0, 1e-14));
    CHECK_THAT(utility(3.0 / pref, s), WithinRel(2.0, 1e-14));
    CHECK_THAT(utility_with_prefactor(7.0, 1.0), WithinRel(3.0, 1e-14));

    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1e3);
    for (int i = 0; i < 200; ++i)
    {
        const double a = u(rng), b = u(rng);
        CHECK(utility(0.5 * (a + b), s) >= 0.5 * (utility(a, s) + utility(b, s)) - 1e-12);
        CHECK(utility(std::max(a, b), s) >= utility(std::min(a, b), s));
    }
}
