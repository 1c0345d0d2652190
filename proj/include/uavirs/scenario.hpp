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

#ifndef UAVIRS_SCENARIO_HPP
#define UAVIRS_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace uavirs
{

struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2 &, const Vec2 &) = default;
};

double norm(Vec2 v);
double norm_sq(Vec2 v);

double db_to_linear(double db);
double linear_to_db(double x);
double dbm_to_watt(double dbm);
double watt_to_dbm(double w);

constexpr double speed_of_light = 299792458.0;

// Log-barrier Newton settings for the trajectory subproblems.
struct BarrierParams
{
    double mu0 = 1.0;          // initial barrier weight
    double mu_factor = 10.0;   // mu <- mu / mu_factor per outer stage
    double gap_tol = 1e-8;     // stop when (#constraints) * mu <= gap_tol
    double newton_tol = 1e-10; // Newton decrement^2 / 2
    int max_newton = 200;      // per barrier stage
    double ls_alpha = 0.01;
    double ls_beta = 0.5;
    friend bool operator==(const BarrierParams &, const BarrierParams &) = default;
};

struct AlgoParams
{
    int r_max = 300;          // inner AO iteration cap
    double eps1 = 1e-3;       // fractional objective change threshold
    double eps2 = 1e-10;      // constraint violation threshold (fairness)
    double eta0 = 500.0;      // initial penalty coefficient
    double c_scale = 0.7;     // penalty shrink factor
    int max_outer = 200;      // fairness outer-iteration cap
    double sca_tol = 1e-6;    // relative suboptimality of SCA subproblems
    double lp_tol = 1e-9;
    BarrierParams barrier;
    friend bool operator==(const AlgoParams &, const AlgoParams &) = default;
};

// One problem instance. Every power and gain is stored linear; the JSON
// loader accepts dB/dBm forms and converts them. Treat as immutable once
// validated.
struct Scenario
{
    int M = 50;               // reflecting elements per IRS
    int N = 400;              // time slots
    double delta = 0.1;       // slot duration (s)

    Vec2 bs{0.0, 0.0};
    double H_b = 10.0;
    std::vector<Vec2> irs;    // K entries
    double H_s = 10.0;
    double H_u = 30.0;

    Vec2 q_init{15.0, 0.0};
    Vec2 q_final{15.0, 0.0};
    double v_max = 10.0;

    double P = 0.1;           // W
    double sigma2 = 1e-9;     // W
    double beta0 = 1e-3;
    double alpha1 = 2.4, alpha2 = 2.4, alpha3 = 2.4;
    double K1 = 10.0, K2 = 10.0, K3 = 10.0;

    double d_over_lambda = 0.5;
    double lambda = speed_of_light / 755e6;

    double rho = 0.5;
    int L = 512;
    int N1 = 100;             // IRS symbols per coherence block (informational)
    double R_th = 3.5;        // bps/Hz
    std::vector<double> w;    // K weights

    // Prefactor inside the utility log2(1 + s * gamma). Negative means
    // "use L * P".
    double utility_prefactor = -1.0;

    AlgoParams algo;
    std::uint64_t rng_seed = 1;

    int K() const { return static_cast<int>(irs.size()); }
    double period() const { return N * delta; }
    double element_spacing() const { return d_over_lambda * lambda; }
    double utility_scale() const { return utility_prefactor > 0.0 ? utility_prefactor : L * P; }

    friend bool operator==(const Scenario &, const Scenario &) = default;
};

Scenario default_scenario();

// Same scenario with delta = 1 s and N = T (rounded), keeping the period.
Scenario coarsen(const Scenario &s);

// Same scenario with a different period at the current slot duration.
Scenario with_period(const Scenario &s, double T);

// Throws ValidationError naming the first violated field.
void validate(const Scenario &s);

// Non-fatal invariant warnings (e.g. V_max*delta not small next to H_u).
std::vector<std::string> scenario_warnings(const Scenario &s);

Scenario load_scenario(const std::string &path);
Scenario parse_scenario(const std::string &json_text);
std::string scenario_to_json(const Scenario &s);
void save_scenario(const Scenario &s, const std::string &path);

} // namespace uavirs

#endif
