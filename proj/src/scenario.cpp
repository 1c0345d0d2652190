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

#include "uavirs/scenario.hpp"
#include "uavirs/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace uavirs
{

using nlohmann::json;

double norm(Vec2 v) { return std::hypot(v.x, v.y); }
double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double x) { return 10.0 * std::log10(x); }
double dbm_to_watt(double dbm) { return 1e-3 * db_to_linear(dbm); }
double watt_to_dbm(double w) { return linear_to_db(w * 1e3); }

Scenario default_scenario()
{
    Scenario s;
    s.irs = {{30.0, 30.0}, {-30.0, 30.0}, {-40.0, 0.0}, {-30.0, -30.0}, {30.0, -30.0}};
    s.w.assign(s.irs.size(), 1.0);
    s.P = dbm_to_watt(20.0);
    s.sigma2 = dbm_to_watt(-60.0);
    s.beta0 = db_to_linear(-30.0);
    s.K1 = s.K2 = s.K3 = db_to_linear(10.0);
    s.delta = 0.1;
    s.N = 400;
    return s;
}

Scenario coarsen(const Scenario &s)
{
    Scenario c = s;
    c.delta = 1.0;
    c.N = std::max(1, static_cast<int>(std::lround(s.period())));
    return c;
}

Scenario with_period(const Scenario &s, double T)
{
    if (!(T > 0.0) || !std::isfinite(T))
        throw ValidationError("period_s", "must be positive");
    Scenario c = s;
    const double n = T / s.delta;
    const long rounded = std::lround(n);
    if (rounded < 1 || std::abs(n - static_cast<double>(rounded)) > 1e-9 * std::max(1.0, n))
        throw ValidationError("period_s", "not an integer multiple of slot_s");
    c.N = static_cast<int>(rounded);
    return c;
}

namespace
{

void require(bool ok, const char *field, const char *what)
{
    if (!ok)
        throw ValidationError(field, what);
}

bool finite(double v) { return std::isfinite(v); }

} // namespace

void validate(const Scenario &s)
{
    require(s.M >= 1, "M", "must be >= 1");
    require(s.N >= 1, "N", "must be >= 1");
    require(finite(s.delta) && s.delta > 0.0, "slot_s", "must be positive");
    require(s.K() >= 1, "irs", "at least one IRS is required");
    require(static_cast<int>(s.w.size()) == s.K(), "w", "one weight per IRS");
    for (double wk : s.w)
        require(finite(wk) && wk >= 0.0, "w", "weights must be finite and >= 0");
    require(finite(s.H_u) && finite(s.H_s) && finite(s.H_b), "H_u", "altitudes must be finite");
    require(s.H_u > s.H_s, "H_u", "UAV must fly above the IRS altitude");
    require(s.H_u != s.H_b, "H_u", "UAV altitude must differ from BS altitude");
    for (const Vec2 &p : s.irs)
    {
        require(finite(p.x) && finite(p.y), "irs", "coordinates must be finite");
        require(norm_sq(s.bs - p) + (s.H_b - s.H_s) * (s.H_b - s.H_s) > 0.0, "irs",
                "IRS coincides with the BS");
    }
    require(finite(s.v_max) && s.v_max >= 0.0, "v_max", "must be finite and >= 0");
    require(finite(s.P) && s.P > 0.0, "P", "must be positive");
    require(finite(s.sigma2) && s.sigma2 > 0.0, "sigma2", "must be positive");
    require(finite(s.beta0) && s.beta0 > 0.0, "beta0", "must be positive");
    require(finite(s.alpha1) && s.alpha1 > 0.0, "alpha1", "must be positive");
    require(finite(s.alpha2) && s.alpha2 > 0.0, "alpha2", "must be positive");
    require(finite(s.alpha3) && s.alpha3 > 0.0, "alpha3", "must be positive");
    require(finite(s.K1) && s.K1 >= 0.0, "K1", "must be >= 0");
    require(finite(s.K2) && s.K2 >= 0.0, "K2", "must be >= 0");
    require(finite(s.K3) && s.K3 >= 0.0, "K3", "must be >= 0");
    require(finite(s.lambda) && s.lambda > 0.0, "lambda", "must be positive");
    require(finite(s.d_over_lambda) && s.d_over_lambda > 0.0, "d_over_lambda", "must be positive");
    require(finite(s.rho) && s.rho >= 0.0 && s.rho <= 1.0, "rho", "must lie in [0, 1]");
    require(s.L >= 1, "L", "must be >= 1");
    require(s.N1 >= 1, "N1", "must be >= 1");
    require(finite(s.R_th), "R_th", "must be finite");
    require(s.utility_prefactor == -1.0 || (finite(s.utility_prefactor) && s.utility_prefactor > 0.0),
            "utility_prefactor", "must be positive (or omitted)");
    require(norm(s.q_final - s.q_init) <= s.N * s.v_max * s.delta * (1.0 + 1e-12) + 1e-12, "q_final",
            "not reachable from q_init within the period");

    const AlgoParams &a = s.algo;
    require(a.r_max >= 1, "algo.r_max", "must be >= 1");
    require(a.eps1 > 0.0, "algo.eps1", "must be positive");
    require(a.eps2 > 0.0, "algo.eps2", "must be positive");
    require(a.eta0 > 0.0, "algo.eta0", "must be positive");
    require(a.c_scale > 0.0 && a.c_scale < 1.0, "algo.c_scale", "must lie in (0, 1)");
    require(a.max_outer >= 1, "algo.max_outer", "must be >= 1");
    require(a.sca_tol > 0.0, "algo.sca_tol", "must be positive");
    require(a.lp_tol > 0.0, "algo.lp_tol", "must be positive");
    require(a.barrier.mu0 > 0.0, "algo.barrier.mu0", "must be positive");
    require(a.barrier.mu_factor > 1.0, "algo.barrier.mu_factor", "must exceed 1");
    require(a.barrier.gap_tol > 0.0, "algo.barrier.gap_tol", "must be positive");
    require(a.barrier.newton_tol > 0.0, "algo.barrier.newton_tol", "must be positive");
    require(a.barrier.max_newton >= 1, "algo.barrier.max_newton", "must be >= 1");
    require(a.barrier.ls_alpha > 0.0 && a.barrier.ls_alpha < 0.5, "algo.barrier.ls_alpha", "must lie in (0, 0.5)");
    require(a.barrier.ls_beta > 0.0 && a.barrier.ls_beta < 1.0, "algo.barrier.ls_beta", "must lie in (0, 1)");
}

std::vector<std::string> scenario_warnings(const Scenario &s)
{
    std::vector<std::string> out;
    if (s.v_max * s.delta > 0.2 * s.H_u)
        out.push_back("v_max * slot_s exceeds 0.2 * H_u; the per-slot position is not quasi-static");
    return out;
}

namespace
{

Vec2 read_vec2(const json &j, const char *field)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(std::string(field) + ": expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json write_vec2(Vec2 v) { return json::array({v.x, v.y}); }

double read_number(const json &j, const char *field)
{
    if (!j.is_number())
        throw ParseError(std::string(field) + ": expected a number");
    return j.get<double>();
}

int read_int(const json &j, const char *field)
{
    if (!j.is_number_integer())
        throw ParseError(std::string(field) + ": expected an integer");
    return j.get<int>();
}

std::vector<double> read_numbers(const json &j, const char *field, std::size_t expected = 0)
{
    if (!j.is_array())
        throw ParseError(std::string(field) + ": expected an array");
    std::vector<double> v;
    for (const auto &e : j)
        v.push_back(read_number(e, field));
    if (expected != 0 && v.size() != expected)
        throw ParseError(std::string(field) + ": expected " + std::to_string(expected) + " entries");
    return v;
}

// Picks exactly one of a linear or logarithmic key, if present.
template <class Convert>
void read_either(const json &j, const char *linear_key, const char *log_key, double &target, Convert to_linear)
{
    const bool has_lin = j.contains(linear_key);
    const bool has_log = j.contains(log_key);
    if (has_lin && has_log)
        throw ParseError(std::string("give only one of ") + linear_key + " and " + log_key);
    if (has_lin)
        target = read_number(j[linear_key], linear_key);
    else if (has_log)
        target = to_linear(read_number(j[log_key], log_key));
}

const std::set<std::string> top_level_keys = {
    "M", "N", "period_s", "slot_s", "bs", "H_b", "irs", "H_s", "H_u", "q_init", "q_final", "v_max",
    "P_W", "P_dBm", "sigma2_W", "sigma2_dBm", "beta0", "beta0_dB", "alpha", "rician", "rician_dB",
    "lambda_m", "carrier_hz", "d_over_lambda", "rho", "L", "N1", "R_th", "w", "utility_prefactor",
    "algo", "rng_seed"};

const std::set<std::string> algo_keys = {"r_max", "eps1",    "eps2",   "eta0",    "c_scale",
                                         "max_outer", "sca_tol", "lp_tol", "barrier"};

const std::set<std::string> barrier_keys = {"mu0", "mu_factor", "gap_tol", "newton_tol",
                                            "max_newton", "ls_alpha", "ls_beta"};

void reject_unknown(const json &j, const std::set<std::string> &known, const std::string &where)
{
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw ParseError("unknown key '" + it.key() + "' in " + where);
}

void read_algo(const json &j, AlgoParams &a)
{
    if (!j.is_object())
        throw ParseError("algo: expected an object");
    reject_unknown(j, algo_keys, "algo");
    if (j.contains("r_max")) a.r_max = read_int(j["r_max"], "algo.r_max");
    if (j.contains("eps1")) a.eps1 = read_number(j["eps1"], "algo.eps1");
    if (j.contains("eps2")) a.eps2 = read_number(j["eps2"], "algo.eps2");
    if (j.contains("eta0")) a.eta0 = read_number(j["eta0"], "algo.eta0");
    if (j.contains("c_scale")) a.c_scale = read_number(j["c_scale"], "algo.c_scale");
    if (j.contains("max_outer")) a.max_outer = read_int(j["max_outer"], "algo.max_outer");
    if (j.contains("sca_tol")) a.sca_tol = read_number(j["sca_tol"], "algo.sca_tol");
    if (j.contains("lp_tol")) a.lp_tol = read_number(j["lp_tol"], "algo.lp_tol");
    if (j.contains("barrier"))
    {
        const json &b = j["barrier"];
        if (!b.is_object())
            throw ParseError("algo.barrier: expected an object");
        reject_unknown(b, barrier_keys, "algo.barrier");
        BarrierParams &p = a.barrier;
        if (b.contains("mu0")) p.mu0 = read_number(b["mu0"], "mu0");
        if (b.contains("mu_factor")) p.mu_factor = read_number(b["mu_factor"], "mu_factor");
        if (b.contains("gap_tol")) p.gap_tol = read_number(b["gap_tol"], "gap_tol");
        if (b.contains("newton_tol")) p.newton_tol = read_number(b["newton_tol"], "newton_tol");
        if (b.contains("max_newton")) p.max_newton = read_int(b["max_newton"], "max_newton");
        if (b.contains("ls_alpha")) p.ls_alpha = read_number(b["ls_alpha"], "ls_alpha");
        if (b.contains("ls_beta")) p.ls_beta = read_number(b["ls_beta"], "ls_beta");
    }
}

} // namespace

Scenario parse_scenario(const std::string &json_text)
{
    json j;
    try
    {
        j = json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("scenario must be a JSON object");
    reject_unknown(j, top_level_keys, "scenario");

    Scenario s = default_scenario();

    if (j.contains("M")) s.M = read_int(j["M"], "M");
    if (j.contains("slot_s")) s.delta = read_number(j["slot_s"], "slot_s");
    if (j.contains("N") && j.contains("period_s"))
    {
        s.N = read_int(j["N"], "N");
        const double T = read_number(j["period_s"], "period_s");
        if (std::abs(s.N * s.delta - T) > 1e-9 * std::max(1.0, T))
            throw ValidationError("period_s", "N * slot_s does not equal period_s");
    }
    else if (j.contains("N"))
        s.N = read_int(j["N"], "N");
    else
    {
        const double T = j.contains("period_s") ? read_number(j["period_s"], "period_s") : 40.0;
        if (!(s.delta > 0.0))
            throw ValidationError("slot_s", "must be positive");
        s = with_period(s, T);
    }

    if (j.contains("bs")) s.bs = read_vec2(j["bs"], "bs");
    if (j.contains("H_b")) s.H_b = read_number(j["H_b"], "H_b");
    if (j.contains("irs"))
    {
        if (!j["irs"].is_array())
            throw ParseError("irs: expected an array of [x, y]");
        s.irs.clear();
        for (const auto &e : j["irs"])
            s.irs.push_back(read_vec2(e, "irs"));
        s.w.assign(s.irs.size(), 1.0);
    }
    if (j.contains("H_s")) s.H_s = read_number(j["H_s"], "H_s");
    if (j.contains("H_u")) s.H_u = read_number(j["H_u"], "H_u");
    if (j.contains("q_init")) s.q_init = read_vec2(j["q_init"], "q_init");
    if (j.contains("q_final")) s.q_final = read_vec2(j["q_final"], "q_final");
    if (j.contains("v_max")) s.v_max = read_number(j["v_max"], "v_max");

    read_either(j, "P_W", "P_dBm", s.P, dbm_to_watt);
    read_either(j, "sigma2_W", "sigma2_dBm", s.sigma2, dbm_to_watt);
    read_either(j, "beta0", "beta0_dB", s.beta0, db_to_linear);

    if (j.contains("alpha"))
    {
        const auto a = read_numbers(j["alpha"], "alpha", 3);
        s.alpha1 = a[0];
        s.alpha2 = a[1];
        s.alpha3 = a[2];
    }
    if (j.contains("rician") && j.contains("rician_dB"))
        throw ParseError("give only one of rician and rician_dB");
    if (j.contains("rician"))
    {
        const auto k = read_numbers(j["rician"], "rician", 3);
        s.K1 = k[0];
        s.K2 = k[1];
        s.K3 = k[2];
    }
    if (j.contains("rician_dB"))
    {
        const auto k = read_numbers(j["rician_dB"], "rician_dB", 3);
        s.K1 = db_to_linear(k[0]);
        s.K2 = db_to_linear(k[1]);
        s.K3 = db_to_linear(k[2]);
    }
    read_either(j, "lambda_m", "carrier_hz", s.lambda, [](double f) { return speed_of_light / f; });
    if (j.contains("d_over_lambda")) s.d_over_lambda = read_number(j["d_over_lambda"], "d_over_lambda");
    if (j.contains("rho")) s.rho = read_number(j["rho"], "rho");
    if (j.contains("L")) s.L = read_int(j["L"], "L");
    if (j.contains("N1")) s.N1 = read_int(j["N1"], "N1");
    if (j.contains("R_th")) s.R_th = read_number(j["R_th"], "R_th");
    if (j.contains("w")) s.w = read_numbers(j["w"], "w");
    if (j.contains("utility_prefactor"))
        s.utility_prefactor = read_number(j["utility_prefactor"], "utility_prefactor");
    if (j.contains("algo")) read_algo(j["algo"], s.algo);
    if (j.contains("rng_seed"))
    {
        if (!j["rng_seed"].is_number_unsigned())
            throw ParseError("rng_seed: expected a non-negative integer");
        s.rng_seed = j["rng_seed"].get<std::uint64_t>();
    }

    validate(s);
    return s;
}

Scenario load_scenario(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario &s)
{
    json j;
    j["M"] = s.M;
    j["N"] = s.N;
    j["slot_s"] = s.delta;
    j["bs"] = write_vec2(s.bs);
    j["H_b"] = s.H_b;
    json irs = json::array();
    for (const Vec2 &p : s.irs)
        irs.push_back(write_vec2(p));
    j["irs"] = irs;
    j["H_s"] = s.H_s;
    j["H_u"] = s.H_u;
    j["q_init"] = write_vec2(s.q_init);
    j["q_final"] = write_vec2(s.q_final);
    j["v_max"] = s.v_max;
    j["P_W"] = s.P;
    j["sigma2_W"] = s.sigma2;
    j["beta0"] = s.beta0;
    j["alpha"] = {s.alpha1, s.alpha2, s.alpha3};
    j["rician"] = {s.K1, s.K2, s.K3};
    j["lambda_m"] = s.lambda;
    j["d_over_lambda"] = s.d_over_lambda;
    j["rho"] = s.rho;
    j["L"] = s.L;
    j["N1"] = s.N1;
    j["R_th"] = s.R_th;
    j["w"] = s.w;
    if (s.utility_prefactor > 0.0)
        j["utility_prefactor"] = s.utility_prefactor;
    const AlgoParams &a = s.algo;
    j["algo"] = {{"r_max", a.r_max},     {"eps1", a.eps1},       {"eps2", a.eps2},
                 {"eta0", a.eta0},       {"c_scale", a.c_scale}, {"max_outer", a.max_outer},
                 {"sca_tol", a.sca_tol}, {"lp_tol", a.lp_tol}};
    j["algo"]["barrier"] = {{"mu0", a.barrier.mu0},
                            {"mu_factor", a.barrier.mu_factor},
                            {"gap_tol", a.barrier.gap_tol},
                            {"newton_tol", a.barrier.newton_tol},
                            {"max_newton", a.barrier.max_newton},
                            {"ls_alpha", a.barrier.ls_alpha},
                            {"ls_beta", a.barrier.ls_beta}};
    j["rng_seed"] = s.rng_seed;
    return j.dump(2) + "\n";
}

void save_scenario(const Scenario &s, const std::string &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write scenario file: " + path);
    out << scenario_to_json(s);
    if (!out)
        throw IoError("write failed: " + path);
}

} // namespace uavirs
