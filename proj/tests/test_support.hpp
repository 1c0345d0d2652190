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

#ifndef UAVIRS_TEST_SUPPORT_HPP
#define UAVIRS_TEST_SUPPORT_HPP

#include "uavirs/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace test_support
{

inline uavirs::Scenario coarse_default() { return uavirs::coarsen(uavirs::default_scenario()); }

// Fresh empty directory under the system temp dir.
inline std::filesystem::path fresh_dir(const std::string &name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("uavirs_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string read_file(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path &p, const std::string &text)
{
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Large-scale gain beta0 / d^alpha evaluated from raw coordinates.
inline double gain_from_geometry(double beta0, double alpha, double dx, double dy, double dz)
{
    return beta0 / std::pow(std::sqrt(dx * dx + dy * dy + dz * dz), alpha);
}

} // namespace test_support

#endif
