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

#include "uavirs/results_io.hpp"
#include "uavirs/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

namespace uavirs
{

namespace fs = std::filesystem;

std::string format_real(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

static void ensure_directory(const fs::path &dir)
{
    if (dir.empty())
        return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError("cannot create directory " + dir.string() + (ec ? ": " + ec.message() : ""));
}

void write_text_file(const std::string &path, const std::string &text)
{
    const fs::path p(path);
    ensure_directory(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out)
        throw IoError("write failed for " + path);
}

static std::string trajectory_csv(const Trajectory &traj, double delta)
{
    std::ostringstream os;
    os << "n,x,y,speed\n";
    for (std::size_t n = 0; n < traj.q.size(); ++n)
    {
        double speed = 0.0;
        if (n > 0)
        {
            const double dx = traj.q[n].x - traj.q[n - 1].x;
            const double dy = traj.q[n].y - traj.q[n - 1].y;
            speed = std::hypot(dx, dy) / delta;
        }
        os << n << ',' << format_real(traj.q[n].x) << ',' << format_real(traj.q[n].y) << ','
           << format_real(speed) << '\n';
    }
    return os.str();
}

static std::string schedule_csv(const Schedule &a)
{
    std::ostringstream os;
    os << "n,k,a\n";
    for (Eigen::Index n = 0; n < a.cols(); ++n)
        for (Eigen::Index k = 0; k < a.rows(); ++k)
            os << n + 1 << ',' << k + 1 << ',' << format_real(a(k, n)) << '\n';
    return os.str();
}

static std::string trace_csv(const SolveReport &r)
{
    std::ostringstream os;
    os << "iter,objective,xi\n";
    for (std::size_t i = 0; i < r.objective_trace.size(); ++i)
    {
        const double xi = i < r.xi_trace.size() ? r.xi_trace[i] : 0.0;
        os << i << ',' << format_real(r.objective_trace[i]) << ',' << format_real(xi) << '\n';
    }
    return os.str();
}

static std::string outer_csv(const SolveReport &r)
{
    std::ostringstream os;
    os << "outer,eta,xi,objective,inner_iterations\n";
    for (std::size_t i = 0; i < r.outer_trace.size(); ++i)
    {
        const OuterRecord &o = r.outer_trace[i];
        os << i + 1 << ',' << format_real(o.eta) << ',' << format_real(o.xi) << ',' << format_real(o.objective)
           << ',' << o.inner_iterations << '\n';
    }
    return os.str();
}

std::string summary_json(const Scenario &s, const SolveReport &r)
{
    nlohmann::ordered_json j;
    j["algorithm"] = r.algorithm;
    j["status"] = to_string(r.status);
    j["K"] = s.K();
    j["M"] = s.M;
    j["N"] = s.N;
    j["delta"] = s.delta;
    j["period"] = s.period();
    j["iterations"] = r.iterations;
    j["outer_iterations"] = r.outer_iterations;
    j["objective"] = r.objective;
    j["upper_bound"] = r.upper_bound;
    j["rate_margin"] = r.rate_margin;
    j["binariness"] = r.binariness;
    j["xi"] = r.xi;
    j["non_binary"] = r.non_binary;
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

void save_results(const Scenario &s, const SolveReport &report, const Trajectory &traj, const Schedule &sched,
                  const std::string &dir)
{
    if (static_cast<int>(traj.q.size()) != s.N + 1)
        throw DimensionMismatch("trajectory has " + std::to_string(traj.q.size()) + " points, expected N+1");
    if (sched.rows() != s.K() || sched.cols() != s.N)
        throw DimensionMismatch("schedule must be K x N");
    const fs::path base(dir);
    ensure_directory(base);
    write_text_file((base / "trajectory.csv").string(), trajectory_csv(traj, s.delta));
    write_text_file((base / "schedule.csv").string(), schedule_csv(sched));
    write_text_file((base / "trace.csv").string(), trace_csv(report));
    if (!report.outer_trace.empty())
        write_text_file((base / "outer.csv").string(), outer_csv(report));
    write_text_file((base / "summary.json").string(), summary_json(s, report));
}

void write_comparison_csv(const std::vector<ComparisonRow> &rows, const std::string &path)
{
    std::ostringstream os;
    os << "objective,scheme,sweep,point,value,rate_margin,status\n";
    for (const ComparisonRow &r : rows)
        os << r.objective << ',' << r.scheme << ',' << r.sweep << ',' << format_real(r.point) << ','
           << format_real(r.value) << ',' << format_real(r.rate_margin) << ',' << r.status << '\n';
    write_text_file(path, os.str());
}

} // namespace uavirs
