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

#include "uavirs/verify.hpp"
#include "uavirs/channel.hpp"
#include "uavirs/closed_forms.hpp"
#include "uavirs/physical_layer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

namespace uavirs
{

namespace
{

enum Suite : std::uint64_t
{
    SuitePhase = 11,
    SuiteJensen = 12,
    SuiteBer = 13,
    SuiteMoments = 14
};

std::string fmt(const char *f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

struct Geometry
{
    Scenario s;
    LinkState ls;
    int k = 0;
};

// UAV position uniform over a box around the deployment, IRS index and M
// drawn at random.
Geometry random_geometry(const Scenario &base, Rng &rng, bool vary_m)
{
    std::uniform_real_distribution<double> pos(-60.0, 60.0);
    std::uniform_int_distribution<int> pick_k(0, base.K() - 1);
    std::uniform_int_distribution<int> pick_m(1, 100);
    Geometry g;
    g.s = base;
    if (vary_m)
        g.s.M = pick_m(rng);
    const Vec2 uav{pos(rng), pos(rng)};
    g.k = pick_k(rng);
    g.ls = link_state_at(g.s, uav);
    return g;
}

struct Amplitudes
{
    double direct_los, cascaded_los;
};

Amplitudes los_amplitudes(const Geometry &g)
{
    const Scenario &s = g.s;
    const double b1 = g.ls.beta1(g.k, 0), b2 = g.ls.beta2(g.k), b3 = g.ls.beta3(0);
    return {std::sqrt(s.K3 * b3 / (s.K3 + 1.0)),
            std::sqrt(s.K1 * s.K2 * b1 * b2 / ((s.K1 + 1.0) * (s.K2 + 1.0)))};
}

// LoS mean x0 built element by element from the steering vectors.
cplx x0_direct(const Geometry &g, const Eigen::VectorXd &phases)
{
    const LosComponents los = los_components(g.s, g.ls, g.k, 0);
    const Amplitudes a = los_amplitudes(g);
    cplx sum{0.0, 0.0};
    for (int m = 0; m < g.s.M; ++m)
        sum += std::conj(los.h2(m)) * std::polar(1.0, phases(m)) * los.h1(m);
    return a.direct_los * los.h3 + a.cascaded_los * sum;
}

void add(std::vector<VerifyCheck> &out, std::string name, bool ok, std::string detail)
{
    out.push_back({std::move(name), ok, std::move(detail)});
}

} // namespace

void verify_phase_optimality(const Scenario &s, const VerifyOptions &opt, std::vector<VerifyCheck> &out)
{
    Rng rng = make_substream(opt.seed, SuitePhase);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::normal_distribution<double> jitter(0.0, 0.3);
    double worst_coherent = 0.0, worst_x0 = 0.0, worst_gain = -1e300;
    for (int i = 0; i < opt.geometries; ++i)
    {
        const Geometry g = random_geometry(s, rng, true);
        const Eigen::VectorXd theta = optimal_phases_slot(g.s, g.ls, g.k, 0);
        const LosComponents los = los_components(g.s, g.ls, g.k, 0);
        cplx coherent{0.0, 0.0};
        for (int m = 0; m < g.s.M; ++m)
            coherent += std::conj(los.h2(m)) * std::polar(1.0, theta(m)) * los.h1(m) * std::conj(los.h3);
        worst_coherent = std::max(worst_coherent, std::abs(std::abs(coherent) - g.s.M) / g.s.M);
        worst_coherent = std::max(worst_coherent, std::abs(std::arg(coherent)));

        const double x0 = std::norm(x0_direct(g, theta));
        const double closed = x0_sq_opt(g.s, g.ls, g.k, 0);
        worst_x0 = std::max(worst_x0, std::abs(x0 - closed) / closed);

        for (int p = 0; p < opt.perturbations; ++p)
        {
            Eigen::VectorXd trial = theta;
            for (int m = 0; m < g.s.M; ++m)
                trial(m) = (p % 2 == 0) ? wrap_angle(trial(m) + jitter(rng)) : angle(rng);
            worst_gain = std::max(worst_gain, (std::norm(x0_direct(g, trial)) - x0) / x0);
        }
    }
    add(out, "phase.coherent_combining", worst_coherent <= 1e-9,
        "geometries=" + std::to_string(opt.geometries) + " max_rel_err=" + fmt("%.3e", worst_coherent));
    add(out, "phase.x0_closed_form", worst_x0 <= 1e-9,
        "geometries=" + std::to_string(opt.geometries) + " max_rel_err=" + fmt("%.3e", worst_x0));
    add(out, "phase.local_optimality", worst_gain <= 1e-12,
        "trials=" + std::to_string(opt.geometries * opt.perturbations) +
            " max_rel_gain=" + fmt("%.3e", worst_gain));
}

void verify_jensen(const Scenario &s, const VerifyOptions &opt, std::vector<VerifyCheck> &out)
{
    Rng geo = make_substream(opt.seed, SuiteJensen);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double worst_z = -1e300;
    int failures = 0;
    for (int c = 0; c < opt.jensen_configs; ++c)
    {
        const Geometry g = random_geometry(s, geo, false);
        Eigen::VectorXd theta = optimal_phases_slot(g.s, g.ls, g.k, 0);
        if (c % 2 == 1)
            for (int m = 0; m < g.s.M; ++m)
                theta(m) = angle(geo);
        const double bound = primary_rate_bound(g.s, g.ls, std::norm(x0_direct(g, theta)), g.k, 0);
        Rng rng = make_substream(opt.seed, SuiteJensen, static_cast<std::uint64_t>(c) + 1);
        double sum = 0.0, sum_sq = 0.0;
        for (long d = 0; d < opt.jensen_draws; ++d)
        {
            const double r = primary_rate_exact(g.s, sample_channels(g.s, g.ls, g.k, 0, rng), theta);
            sum += r;
            sum_sq += r * r;
        }
        const double n = static_cast<double>(opt.jensen_draws);
        const double mean = sum / n;
        const double se = std::sqrt(std::max(0.0, sum_sq / n - mean * mean) / (n - 1.0));
        const double z = (mean - bound) / std::max(se, 1e-300);
        worst_z = std::max(worst_z, z);
        if (mean > bound + 3.0 * se)
            ++failures;
    }
    add(out, "jensen.rate_bound", failures == 0,
        "configs=" + std::to_string(opt.jensen_configs) + " draws=" + std::to_string(opt.jensen_draws) +
            " max_z=" + fmt("%.3f", worst_z) + " failures=" + std::to_string(failures));
}

void verify_ber(const Scenario &s, const VerifyOptions &opt, std::vector<VerifyCheck> &out)
{
    for (std::size_t i = 0; i < opt.ber_snr.size(); ++i)
    {
        const double snr = opt.ber_snr[i];
        const double g = snr * s.sigma2 / s.P;
        const double closed = ber_closed_form(g, s.sigma2, s.P, s.L);
        Rng rng = make_substream(opt.seed, SuiteBer, i);
        const EnergyDetectionRun run =
            simulate_energy_detector(detection_stats(g, s.sigma2, s.P, s.L), s.rho, opt.ber_symbols, rng);
        const double se = std::sqrt(std::max(run.ber * (1.0 - run.ber), 1e-300) / opt.ber_symbols);
        const bool in_range = closed >= 1e-3 && closed <= 0.3;
        const bool ok = std::abs(run.ber - closed) <= 3.0 * se;
        add(out, "ber.snr=" + fmt("%.3g", snr), ok,
            "L=" + std::to_string(s.L) + " symbols=" + std::to_string(opt.ber_symbols) +
                " closed=" + fmt("%.6e", closed) + " mc=" + fmt("%.6e", run.ber) + " se=" + fmt("%.3e", se) +
                (in_range ? "" : " (outside [1e-3, 0.3])"));
    }
}

void verify_moments(const Scenario &s, const VerifyOptions &opt, std::vector<VerifyCheck> &out)
{
    Rng geo = make_substream(opt.seed, SuiteMoments);
    double worst_z = 0.0;
    int failures = 0;
    for (int c = 0; c < opt.moment_configs; ++c)
    {
        const Geometry g = random_geometry(s, geo, false);
        const Scenario &sc = g.s;
        const double b1 = g.ls.beta1(g.k, 0), b2 = g.ls.beta2(g.k), b3 = g.ls.beta3(0);
        const double k1 = sc.K1, k2 = sc.K2, k3 = sc.K3, m = sc.M;
        const double den = (k1 + 1.0) * (k2 + 1.0);
        const Eigen::VectorXd theta = optimal_phases_slot(sc, g.ls, g.k, 0);
        const LosComponents los = los_components(sc, g.ls, g.k, 0);
        const double x0_sq = std::norm(x0_direct(g, theta));

        // E|x1|^2 .. E|x4|^2 and the total reflect-state power E|h3 + h2^H Theta h1|^2.
        const double expected[5] = {b3 / (k3 + 1.0), k1 * m * b1 * b2 / den, k2 * m * b1 * b2 / den,
                                    m * b1 * b2 / den,
                                    x0_sq + (k1 + k2 + 1.0) * m * b1 * b2 / den + b3 / (k3 + 1.0)};
        const double a1 = std::sqrt(b3 / (k3 + 1.0));
        const double a2 = std::sqrt(k1 * b1 * b2 / den);
        const double a3 = std::sqrt(k2 * b1 * b2 / den);
        const double a4 = std::sqrt(b1 * b2 / den);

        Rng rng = make_substream(opt.seed, SuiteMoments, static_cast<std::uint64_t>(c) + 1);
        double sum[5] = {}, sum_sq[5] = {};
        for (long d = 0; d < opt.moment_draws; ++d)
        {
            const NlosDraw nl = sample_nlos(sc.M, rng);
            const double v[5] = {std::norm(a1 * nl.h3), std::norm(a2 * cascaded_gain(nl.h2, theta, los.h1)),
                                 std::norm(a3 * cascaded_gain(los.h2, theta, nl.h1)),
                                 std::norm(a4 * cascaded_gain(nl.h2, theta, nl.h1)),
                                 [&] {
                                     const ChannelDraw ch = compose_channels(sc, g.ls, g.k, 0, nl);
                                     return std::norm(ch.h3 + cascaded_gain(ch.h2, theta, ch.h1));
                                 }()};
            for (int i = 0; i < 5; ++i)
            {
                sum[i] += v[i];
                sum_sq[i] += v[i] * v[i];
            }
        }
        const double n = static_cast<double>(opt.moment_draws);
        for (int i = 0; i < 5; ++i)
        {
            const double mean = sum[i] / n;
            const double se = std::sqrt(std::max(0.0, sum_sq[i] / n - mean * mean) / (n - 1.0));
            const double z = std::abs(mean - expected[i]) / std::max(se, 1e-300);
            worst_z = std::max(worst_z, z);
            if (z > 4.0)
                ++failures;
        }
    }
    add(out, "moments.second_order", failures == 0,
        "configs=" + std::to_string(opt.moment_configs) + " draws=" + std::to_string(opt.moment_draws) +
            " terms=5 max_z=" + fmt("%.3f", worst_z) + " failures=" + std::to_string(failures));
}

bool VerifyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck &c) { return c.passed; });
}

std::string VerifyReport::text() const
{
    std::ostringstream os;
    os << "verify seed=" << seed << '\n';
    int passed = 0;
    for (const VerifyCheck &c : checks)
    {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << ' ' << c.detail << '\n';
        passed += c.passed ? 1 : 0;
    }
    os << (all_passed() ? "PASS" : "FAIL") << " all " << passed << '/' << checks.size() << '\n';
    return os.str();
}

VerifyReport run_verification(const Scenario &s, const VerifyOptions &opt)
{
    VerifyReport r;
    r.seed = opt.seed;
    verify_phase_optimality(s, opt, r.checks);
    verify_jensen(s, opt, r.checks);
    verify_ber(s, opt, r.checks);
    verify_moments(s, opt, r.checks);
    return r;
}

} // namespace uavirs
