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
#include "uavirs/verify.hpp"

using namespace uavirs;

namespace
{

VerifyOptions small_options(std::uint64_t seed)
{
    VerifyOptions o;
    o.seed = seed;
    o.geometries = 6;
    o.perturbations = 6;
    o.jensen_configs = 4;
    o.jensen_draws = 4000;
    o.moment_configs = 2;
    o.moment_draws = 8000;
    o.ber_symbols = 40000;
    return o;
}

} // namespace

TEST_CASE("verification suites pass on the default scenario", "[verify]")
{
    const Scenario s = test_support::coarse_default();
    const VerifyReport r = run_verification(s, small_options(3));
    CHECK(r.seed == 3);
    REQUIRE(!r.checks.empty());
    for (const auto &c : r.checks)
    {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
    CHECK(r.all_passed());
    CHECK(r.text().find("FAIL") == std::string::npos);
}

TEST_CASE("verification is deterministic for a seed", "[verify]")
{
    const Scenario s = test_support::coarse_default();
    const std::string a = run_verification(s, small_options(9)).text();
    const std::string b = run_verification(s, small_options(9)).text();
    CHECK(a == b);
    CHECK(run_verification(s, small_options(10)).text() != a);
}

TEST_CASE("individual suites append checks", "[verify]")
{
    const Scenario s = test_support::coarse_default();
    const VerifyOptions o = small_options(5);
    std::vector<VerifyCheck> out;
    verify_phase_optimality(s, o, out);
    const std::size_t a = out.size();
    CHECK(a > 0);
    verify_jensen(s, o, out);
    const std::size_t b = out.size();
    CHECK(b > a);
    verify_ber(s, o, out);
    CHECK(out.size() >= b + o.ber_snr.size());
    verify_moments(s, o, out);
    for (const auto &c : out)
        CHECK(!c.name.empty());
}
