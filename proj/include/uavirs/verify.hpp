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

#ifndef UAVIRS_VERIFY_HPP
#define UAVIRS_VERIFY_HPP

#include "uavirs/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace uavirs
{

struct VerifyCheck
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions
{
    std::uint64_t seed = 1;
    int geometries = 50;         // phase-optimality geometries
    int perturbations = 20;      // perturbed phase vectors per geometry
    int jensen_configs = 20;
    long jensen_draws = 10000;
    int moment_configs = 5;
    long moment_draws = 20000;
    long ber_symbols = 100000;
    std::vector<double> ber_snr{0.06, 0.1, 0.15, 0.2, 0.25}; // P g / sigma^2 operating points
};

struct VerifyReport
{
    std::uint64_t seed = 0;
    std::vector<VerifyCheck> checks;

    bool all_passed() const;
    std::string text() const;
};

// Individual suites; each appends its checks to out.
void verify_phase_optimality(const Scenario &s, const VerifyOptions &opt, std::vector<VerifyCheck> &out);
void verify_jensen(const Scenario &s, const VerifyOptions &opt, std::vector<VerifyCheck> &out);
void verify_ber(const Scenario &s, const VerifyOptions &opt, std::vector<VerifyCheck> &out);
void verify_moments(const Scenario &s, const VerifyOptions &opt, std::vector<VerifyCheck> &out);

VerifyReport run_verification(const Scenario &s, const VerifyOptions &opt);

} // namespace uavirs

#endif
