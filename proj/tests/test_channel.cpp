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
#include "uavirs/channel.hpp"
#include "uavirs/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace uavirs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

// Reference values of 1e-3 / d^2.4 computed in 40-digit arithmetic.
constexpr double beta_at_20m = 7.5427204206814538581e-7;
constexpr double beta_at_25m = 4.4151349166758874636e-7;

} // namespace

TEST_CASE("UAV above an IRS sees the altitude gap", "[channel]")
{
    const Scenario s = default_scenario();
    const LinkState ls = link_state_at(s, s.irs[0]);
    CHECK_THAT(ls.d1(0, 0), WithinRel(20.0, 1e-15));
    CHECK_THAT(ls.beta1(0, 0), WithinRel(beta_at_20m, 1e-13));
    CHECK_THAT(ls.cos_phi1(0, 0), WithinAbs(0.0, 1e-15));
}

TEST_CASE("direct link from the start point", "[channel]")
{
    const Scenario s = default_scenario();
    const LinkState ls = link_state_at(s, {15.0, 0.0});
    CHECK_THAT(ls.d3(0), WithinRel(25.0, 1e-15));
    CHECK_THAT(ls.beta3(0), WithinRel(beta_at_25m, 1e-13));
}

TEST_CASE("link state matches geometry for every slot", "[channel]")
{
    Scenario s = test_support::coarse_default();
    s.N = 3;
    s.delta = 1.0;
    Trajectory q;
    q.q = {s.q_init, {12.0, 3.0}, {5.0, 8.0}, s.q_final};
    const LinkState ls = link_state(s, q);
    REQUIRE(ls.K() == 5);
    REQUIRE(ls.N() == 3);
    const double dz1 = s.H_u - s.H_s, dz2 = s.H_s - s.H_b, dz3 = s.H_u - s.H_b;
    const double den = (s.K1 + 1.0) * (s.K2 + 1.0);
    for (int k = 0; k < 5; ++k)
    {
        const Vec2 p = s.irs[static_cast<std::size_t>(k)];
        const double d2 = std::sqrt(std::pow(s.bs.x - p.x, 2) + std::pow(s.bs.y - p.y, 2) + dz2 * dz2);
        CHECK_THAT(ls.d2(k), WithinRel(d2, 1e-14));
        CHECK_THAT(ls.cos_phi2(k), WithinRel((s.bs.x - p.x) / d2, 1e-14));
        const double b2 = test_support::gain_from_geometry(s.beta0, s.alpha2, s.bs.x - p.x, s.bs.y - p.y, dz2);
        CHECK_THAT(ls.beta2(k), WithinRel(b2, 1e-13));
        CHECK_THAT(ls.c1(k), WithinRel(s.K1 * s.K2 * s.M * s.M * b2 / den, 1e-13));
        CHECK_THAT(ls.c2(k), WithinRel(2.0 * s.M * std::sqrt(s.K1 * s.K2 * s.K3 * b2 / (den * (s.K3 + 1.0))), 1e-13));
        CHECK_THAT(ls.c3(k), WithinRel((1.0 + s.K1 + s.K2) * s.M * b2 / den, 1e-13));
        for (int n = 0; n < 3; ++n)
        {
            const Vec2 u = q.q[static_cast<std::size_t>(n) + 1];
            const double d1 = std::sqrt(std::pow(p.x - u.x, 2) + std::pow(p.y - u.y, 2) + dz1 * dz1);
            CHECK_THAT(ls.d1(k, n), WithinRel(d1, 1e-14));
            CHECK_THAT(ls.cos_phi1(k, n), WithinAbs((p.x - u.x) / d1, 1e-14));
            CHECK_THAT(ls.beta1(k, n),
                       WithinRel(test_support::gain_from_geometry(s.beta0, s.alpha1, p.x - u.x, p.y - u.y, dz1), 1e-13));
            CHECK(std::abs(ls.cos_phi1(k, n)) <= 1.0);
            CHECK(ls.d1(k, n) >= dz1);
        }
    }
    for (int n = 0; n < 3; ++n)
    {
        const Vec2 u = q.q[static_cast<std::size_t>(n) + 1];
        CHECK_THAT(ls.beta3(n), WithinRel(test_support::gain_from_geometry(s.beta0, s.alpha3, u.x, u.y, dz3), 1e-13));
    }

    Trajectory short_q;
    short_q.q = {s.q_init, s.q_final};
    CHECK_THROWS_AS(link_state(s, short_q), DimensionMismatch);
}

TEST_CASE("path gain decreases with distance", "[channel]")
{
    double prev = path_gain(1e-3, 1.0, 2.4);
    for (double d = 1.5; d < 500.0; d *= 1.5)
    {
        const double g = path_gain(1e-3, d, 2.4);
        CHECK(g < prev);
        prev = g;
    }
}

TEST_CASE("LoS steering vectors", "[channel]")
{
    const double lambda = 0.4;
    const auto one = los_steering(1, 0.3, lambda, lambda, 0.2);
    REQUIRE(one.size() == 1);
    CHECK_THAT(one(0).real(), WithinAbs(1.0, 1e-12));
    CHECK_THAT(one(0).imag(), WithinAbs(0.0, 1e-12));

    const auto broadside = los_steering(6, 0.0, 3.7, lambda, 0.2);
    for (int m = 1; m < 6; ++m)
        CHECK(std::abs(broadside(m) - broadside(0)) < 1e-14);

    // Consecutive elements rotate by exp(-j 2 pi (lambda/2) 0.5 / lambda) = -j.
    const auto v = los_steering(4, 0.5, 7.1, lambda, lambda / 2.0);
    for (int m = 1; m < 4; ++m)
    {
        const std::complex<double> ratio = v(m) / v(m - 1);
        CHECK_THAT(ratio.real(), WithinAbs(0.0, 1e-12));
        CHECK_THAT(ratio.imag(), WithinAbs(-1.0, 1e-12));
    }
    for (int m = 0; m < 4; ++m)
        CHECK_THAT(std::abs(v(m)), WithinAbs(1.0, 1e-14));

    CHECK_THROWS_AS(los_steering(4, 1.2, 1.0, lambda, 0.2), InvalidInput);
}

TEST_CASE("strong LoS draws collapse onto the LoS component", "[channel]")
{
    Scenario s = default_scenario();
    s.K1 = 1e12;
    const LinkState ls = link_state_at(s, {5.0, 7.0});
    const LosComponents los = los_components(s, ls, 2, 0);
    Rng rng = make_substream(9, 1);
    for (int i = 0; i < 20; ++i)
    {
        const ChannelDraw d = sample_channels(s, ls, 2, 0, rng);
        const Eigen::VectorXcd ref = std::sqrt(ls.beta1(2, 0)) * los.h1;
        CHECK((d.h1 - ref).norm() <= 1e-5 * d.h1.norm());
    }
}

TEST_CASE("channel power matches the large-scale gain", "[channel]")
{
    const Scenario s = default_scenario();
    const LinkState ls = link_state_at(s, {0.0, 10.0});
    Rng rng = make_substream(21, 2);
    const long draws = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (long i = 0; i < draws; ++i)
    {
        const double p = sample_channels(s, ls, 1, 0, rng).h1.squaredNorm();
        sum += p;
        sum_sq += p * p;
    }
    const double mean = sum / draws;
    const double se = std::sqrt((sum_sq / draws - mean * mean) / draws);
    CHECK(std::abs(mean - s.M * ls.beta1(1, 0)) <= 3.0 * se);
}

TEST_CASE("same substream gives the same draws", "[channel]")
{
    const Scenario s = default_scenario();
    const LinkState ls = link_state_at(s, {3.0, -4.0});
    Rng a = make_substream(5, 7, 1), b = make_substream(5, 7, 1), c = make_substream(5, 7, 2);
    const ChannelDraw da = sample_channels(s, ls, 0, 0, a);
    const ChannelDraw db = sample_channels(s, ls, 0, 0, b);
    const ChannelDraw dc = sample_channels(s, ls, 0, 0, c);
    CHECK(da.h1 == db.h1);
    CHECK(da.h2 == db.h2);
    CHECK(da.h3 == db.h3);
    CHECK(da.h1 != dc.h1);
}
