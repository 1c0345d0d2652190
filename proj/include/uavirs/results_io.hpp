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

#ifndef UAVIRS_RESULTS_IO_HPP
#define UAVIRS_RESULTS_IO_HPP

#include "uavirs/benchmarks.hpp"
#include "uavirs/report.hpp"
#include "uavirs/scenario.hpp"
#include "uavirs/trajectory.hpp"

#include <string>
#include <vector>

namespace uavirs
{

// Fixed 17-significant-digit rendering used for every CSV float.
std::string format_real(double v);

// Writes trajectory.csv, schedule.csv, trace.csv, outer.csv (when the report
// has outer iterations) and summary.json under dir, creating it if needed.
// Throws IoError on any filesystem failure.
void save_results(const Scenario &s, const SolveReport &report, const Trajectory &traj, const Schedule &sched,
                  const std::string &dir);

// Summary object as JSON text (no timing fields).
std::string summary_json(const Scenario &s, const SolveReport &report);

void write_comparison_csv(const std::vector<ComparisonRow> &rows, const std::string &path);

// Writes text to path, creating parent directories. Throws IoError.
void write_text_file(const std::string &path, const std::string &text);

} // namespace uavirs

#endif
