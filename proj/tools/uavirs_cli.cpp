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

// Command-line front end. Talks to the library only through the C API.

#include "uavirs/uavirs.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace
{

struct Options
{
    std::string scenario;
    std::string out = "uavirs-out";
    std::optional<std::uint64_t> seed;
    bool coarse = false;
    std::string sweep;
    std::vector<std::string> schemes;
};

// Exit code for a failed library call.
int exit_code(uavirs_status st)
{
    switch (st)
    {
    case UAVIRS_OK:
        return 0;
    case UAVIRS_ERR_SOLVER:
    case UAVIRS_ERR_INTERNAL:
        return 2;
    default:
        return 1;
    }
}

int report_error(uavirs_status st)
{
    std::fprintf(stderr, "error (%s): %s\n", uavirs_status_name(st), uavirs_last_error());
    return exit_code(st);
}

struct ScenarioDeleter
{
    void operator()(uavirs_scenario *s) const { uavirs_scenario_free(s); }
};
struct SolutionDeleter
{
    void operator()(uavirs_solution *s) const { uavirs_solution_free(s); }
};
struct ReportDeleter
{
    void operator()(uavirs_report *r) const { uavirs_report_free(r); }
};
using ScenarioPtr = std::unique_ptr<uavirs_scenario, ScenarioDeleter>;

uavirs_status prepare_scenario(const Options &o, ScenarioPtr &out)
{
    uavirs_scenario *raw = nullptr;
    uavirs_status st = o.scenario.empty() ? uavirs_scenario_default(&raw) : uavirs_scenario_load(o.scenario.c_str(), &raw);
    if (st != UAVIRS_OK)
        return st;
    out.reset(raw);
    if (o.coarse && (st = uavirs_scenario_coarsen(raw)) != UAVIRS_OK)
        return st;
    if (o.seed && (st = uavirs_scenario_set_seed(raw, *o.seed)) != UAVIRS_OK)
        return st;
    return UAVIRS_OK;
}

std::string scenario_json(const uavirs_scenario *s)
{
    size_t needed = 0;
    uavirs_scenario_to_json(s, nullptr, 0, &needed);
    std::string text(needed, '\0');
    uavirs_scenario_to_json(s, text.data(), text.size(), &needed);
    text.resize(needed > 0 ? needed - 1 : 0);
    return text;
}

bool write_file(const std::filesystem::path &p, const std::string &text)
{
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    f << text;
    f.flush();
    if (!f)
    {
        std::fprintf(stderr, "error (i/o error): cannot write %s\n", p.string().c_str());
        return false;
    }
    return true;
}

const char *solve_status_name(uavirs_solve_status s)
{
    switch (s)
    {
    case UAVIRS_SOLVE_CONVERGED:
        return "Converged";
    case UAVIRS_SOLVE_MAX_ITER:
        return "MaxIter";
    case UAVIRS_SOLVE_INFEASIBLE:
        return "Infeasible";
    case UAVIRS_SOLVE_NON_CONVERGED:
        return "NonConverged";
    }
    return "Unknown";
}

int run_optimize(const Options &o, bool fairness)
{
    ScenarioPtr scn;
    if (uavirs_status st = prepare_scenario(o, scn); st != UAVIRS_OK)
        return report_error(st);
    uavirs_solution *raw = nullptr;
    uavirs_status st = fairness ? uavirs_optimize_fairness(scn.get(), &raw) : uavirs_optimize_weighted_sum(scn.get(), &raw);
    if (st != UAVIRS_OK)
        return report_error(st);
    std::unique_ptr<uavirs_solution, SolutionDeleter> sol(raw);
    if ((st = uavirs_solution_save(sol.get(), o.out.c_str())) != UAVIRS_OK)
        return report_error(st);
    uavirs_summary sum{};
    uavirs_solution_summary(sol.get(), &sum);
    std::printf("%s: status=%s iterations=%d objective=%.17g upper_bound=%.17g rate_margin=%.17g", fairness ? "fairness" : "weighted-sum",
                solve_status_name(sum.status), sum.iterations, sum.objective, sum.upper_bound, sum.rate_margin);
    if (fairness)
        std::printf(" outer=%d xi=%.17g", sum.outer_iterations, sum.xi);
    std::printf("\n");
    if (sum.status == UAVIRS_SOLVE_INFEASIBLE)
    {
        std::fprintf(stderr, "error (infeasible): solver stopped on an infeasible subproblem\n");
        return 1;
    }
    return 0;
}

int run_benchmarks(const Options &o)
{
    ScenarioPtr scn;
    if (uavirs_status st = prepare_scenario(o, scn); st != UAVIRS_OK)
        return report_error(st);
    uavirs_sweep sweep = UAVIRS_SWEEP_NONE;
    if (o.sweep == "T")
        sweep = UAVIRS_SWEEP_PERIOD;
    else if (o.sweep == "M")
        sweep = UAVIRS_SWEEP_ELEMENTS;
    std::string schemes;
    for (const std::string &s : o.schemes)
        schemes += (schemes.empty() ? "" : ",") + s;
    const std::filesystem::path dir(o.out);
    const std::string csv = (dir / "comparison.csv").string();
    size_t rows = 0;
    if (uavirs_status st = uavirs_run_benchmarks(scn.get(), sweep, schemes.empty() ? nullptr : schemes.c_str(), nullptr,
                                                 csv.c_str(), &rows);
        st != UAVIRS_OK)
        return report_error(st);
    nlohmann::ordered_json j;
    j["command"] = "benchmarks";
    j["sweep"] = o.sweep.empty() ? "-" : o.sweep;
    j["schemes"] = o.schemes;
    j["rows"] = rows;
    j["table"] = "comparison.csv";
    if (!write_file(dir / "summary.json", j.dump(2) + "\n"))
        return 1;
    std::ifstream in(csv);
    std::cout << in.rdbuf();
    return 0;
}

int run_verify(const Options &o)
{
    ScenarioPtr scn;
    if (uavirs_status st = prepare_scenario(o, scn); st != UAVIRS_OK)
        return report_error(st);
    uavirs_report *raw = nullptr;
    if (uavirs_status st = uavirs_verify(scn.get(), o.seed.value_or(1), &raw); st != UAVIRS_OK)
        return report_error(st);
    std::unique_ptr<uavirs_report, ReportDeleter> rep(raw);
    const std::string text = uavirs_report_text(rep.get());
    std::cout << text;
    const bool passed = uavirs_report_passed(rep.get()) != 0;
    const std::filesystem::path dir(o.out);
    nlohmann::ordered_json j;
    j["command"] = "verify";
    j["seed"] = o.seed.value_or(1);
    j["passed"] = passed;
    j["report"] = "verify.txt";
    if (!write_file(dir / "verify.txt", text) || !write_file(dir / "summary.json", j.dump(2) + "\n"))
        return 1;
    return passed ? 0 : 1;
}

int run_show(const Options &o)
{
    ScenarioPtr scn;
    if (uavirs_status st = prepare_scenario(o, scn); st != UAVIRS_OK)
        return report_error(st);
    const std::string text = scenario_json(scn.get());
    std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
    int K = 0, M = 0, N = 0;
    uavirs_scenario_dims(scn.get(), &K, &M, &N);
    const std::filesystem::path dir(o.out);
    nlohmann::ordered_json j;
    j["command"] = "show-scenario";
    j["K"] = K;
    j["M"] = M;
    j["N"] = N;
    j["scenario"] = "scenario.json";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (uavirs_status st = uavirs_scenario_save(scn.get(), (dir / "scenario.json").string().c_str()); st != UAVIRS_OK)
        return report_error(st);
    return write_file(dir / "summary.json", j.dump(2) + "\n") ? 0 : 1;
}

void add_common(CLI::App *cmd, Options &o)
{
    cmd->add_option("--scenario", o.scenario, "Scenario JSON file (default: built-in scenario)")->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
    cmd->add_option("--seed", o.seed, "Random seed");
    cmd->add_flag("--coarse", o.coarse, "Use 1 s slots (N = T)");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Trajectory, phase-shift and scheduling design for UAV-assisted IRS symbiotic radio"};
    app.set_version_flag("--version", std::string(uavirs_version()));
    app.require_subcommand(1);
    Options o;

    auto *wsb = app.add_subcommand("optimize-wsb", "Maximize the weighted-sum utility");
    add_common(wsb, o);
    auto *fair = app.add_subcommand("optimize-fair", "Maximize the minimum utility");
    add_common(fair, o);
    auto *bench = app.add_subcommand("benchmarks", "Compare the proposed design with baselines");
    add_common(bench, o);
    bench->add_option("--sweep", o.sweep, "Sweep the period (T) or element count (M)")->check(CLI::IsMember({"T", "M"}));
    bench->add_option("--scheme", o.schemes, "Scheme(s) to include (repeatable)")
        ->check(CLI::IsMember({"proposed", "circular", "fixed-pi", "fixed-pi/2", "upper-bound"}));
    auto *ver = app.add_subcommand("verify", "Run the Monte-Carlo oracle suites");
    add_common(ver, o);
    auto *show = app.add_subcommand("show-scenario", "Print the effective scenario");
    add_common(show, o);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    if (wsb->parsed())
        return run_optimize(o, false);
    if (fair->parsed())
        return run_optimize(o, true);
    if (bench->parsed())
        return run_benchmarks(o);
    if (ver->parsed())
        return run_verify(o);
    return run_show(o);
}
