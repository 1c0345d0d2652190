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

#include "uavirs/sca_trajectory.hpp"
#include "uavirs/closed_forms.hpp"
#include "uavirs/errors.hpp"
#include "uavirs/physical_layer.hpp"

#include "log.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace uavirs
{

namespace
{

constexpr double active_threshold = 1e-12; // smaller associations get no slack variables
constexpr double inv_ln2 = 1.0 / std::numbers::ln2;

using Eval = SmoothFunction::Eval;

// Layout of the surrogate variables.
struct Layout
{
    int N = 0, K = 0;
    int n_q = 0;                 // 2 * (N - 1)
    Eigen::MatrixXi u1, u2;      // K x N, -1 when the pair is inactive
    std::vector<int> u3;         // N
    int R = -1;                  // fairness level
    int total = 0;

    // Index of the x coordinate of waypoint i, or -1 when it is fixed.
    int q_index(int i) const { return (i >= 1 && i <= N - 1) ? 2 * (i - 1) : -1; }
};

Layout make_layout(const Scenario &s, const Schedule &a, ScaObjective kind)
{
    Layout L;
    L.N = s.N;
    L.K = s.K();
    L.n_q = 2 * std::max(s.N - 1, 0);
    int next = L.n_q;
    L.u1 = Eigen::MatrixXi::Constant(L.K, L.N, -1);
    L.u2 = Eigen::MatrixXi::Constant(L.K, L.N, -1);
    L.u3.assign(static_cast<std::size_t>(L.N), -1);
    for (int n = 0; n < L.N; ++n)
    {
        for (int k = 0; k < L.K; ++k)
            if (a(k, n) > active_threshold)
            {
                L.u1(k, n) = next++;
                L.u2(k, n) = next++;
            }
        L.u3[static_cast<std::size_t>(n)] = next++;
    }
    if (kind == ScaObjective::Fairness)
        L.R = next++;
    L.total = next;
    return L;
}

// Support helper: waypoint coordinates first (when free), then extras.
std::vector<int> support_with(int qi, std::initializer_list<int> extra)
{
    std::vector<int> sp;
    if (qi >= 0)
    {
        sp.push_back(qi);
        sp.push_back(qi + 1);
    }
    sp.insert(sp.end(), extra.begin(), extra.end());
    return sp;
}

// u - [1 - c (|p - centre|^2 - D_ref)] <= 0 with c = alpha / (2 (D_ref + H^2)).
SmoothFunction taylor_constraint(int qi, Vec2 fixed, Vec2 centre, double D_ref, double c, int u)
{
    SmoothFunction f;
    f.support = support_with(qi, {u});
    const bool has_q = qi >= 0;
    f.eval = [=](const Eigen::VectorXd &xl, double &v, Eigen::VectorXd *g, Eigen::MatrixXd *h) {
        const Vec2 p = has_q ? Vec2{xl(0), xl(1)} : fixed;
        const double uu = xl(xl.size() - 1);
        const Vec2 d = p - centre;
        v = uu - 1.0 + c * (norm_sq(d) - D_ref);
        if (g)
        {
            g->setZero(xl.size());
            if (has_q)
            {
                (*g)(0) = 2.0 * c * d.x;
                (*g)(1) = 2.0 * c * d.y;
            }
            (*g)(xl.size() - 1) = 1.0;
        }
        if (h)
        {
            h->setZero(xl.size(), xl.size());
            if (has_q)
            {
                (*h)(0, 0) = 2.0 * c;
                (*h)(1, 1) = 2.0 * c;
            }
        }
        return true;
    };
    return f;
}

// u2^2 / u3 - u1 <= 0.
SmoothFunction qol_constraint(int u1, int u2, int u3)
{
    SmoothFunction f;
    f.support = {u1, u2, u3};
    f.eval = [](const Eigen::VectorXd &xl, double &v, Eigen::VectorXd *g, Eigen::MatrixXd *h) {
        const double a = xl(0), b = xl(1), c = xl(2);
        if (!(c > 0.0))
            return false;
        v = b * b / c - a;
        if (g)
        {
            g->resize(3);
            *g << -1.0, 2.0 * b / c, -b * b / (c * c);
        }
        if (h)
        {
            h->setZero(3, 3);
            (*h)(1, 1) = 2.0 / c;
            (*h)(1, 2) = (*h)(2, 1) = -2.0 * b / (c * c);
            (*h)(2, 2) = 2.0 * b * b / (c * c * c);
        }
        return true;
    };
    return f;
}

// Accumulates w * log2(1 + coeff' x) into value/gradient/Hessian.
bool add_log_term(double w, const Eigen::VectorXd &coeff, const Eigen::VectorXd &x, double &v, Eigen::VectorXd *g,
                  Eigen::MatrixXd *h)
{
    const double arg = 1.0 + coeff.dot(x);
    if (!(arg > 0.0))
        return false;
    v += w * std::log2(arg);
    if (g)
        *g += (w * inv_ln2 / arg) * coeff;
    if (h)
        *h -= (w * inv_ln2 / (arg * arg)) * coeff * coeff.transpose();
    return true;
}

struct SlotRateData
{
    std::vector<double> weight;   // a_k for active pairs
    std::vector<double> A, B;     // coefficients of u1 and u2 (already times P / sigma^2)
    double C = 0.0;               // coefficient of u3 (times P / sigma^2)
    double sum_a = 0.0;
};

// R_th - sum_k a_k [rho log2(1 + A u1 + B u2 + C u3) + (1 - rho) log2(1 + C u3)] <= 0.
// Local layout: u1_0, u2_0, u1_1, u2_1, ..., u3.
SmoothFunction rate_constraint(const std::vector<int> &support, SlotRateData data, double rho, double R_th)
{
    SmoothFunction f;
    f.support = support;
    f.eval = [data = std::move(data), rho, R_th](const Eigen::VectorXd &xl, double &v, Eigen::VectorXd *g,
                                                   Eigen::MatrixXd *h) {
        const Eigen::Index n = xl.size();
        const Eigen::Index i3 = n - 1;
        double acc = 0.0;
        Eigen::VectorXd gl = Eigen::VectorXd::Zero(n);
        Eigen::MatrixXd hl = Eigen::MatrixXd::Zero(n, n);
        Eigen::VectorXd coeff = Eigen::VectorXd::Zero(n);
        for (std::size_t j = 0; j < data.weight.size(); ++j)
        {
            const auto i1 = static_cast<Eigen::Index>(2 * j);
            coeff.setZero();
            coeff(i1) = data.A[j];
            coeff(i1 + 1) = data.B[j];
            coeff(i3) = data.C;
            if (!add_log_term(data.weight[j] * rho, coeff, xl, acc, g ? &gl : nullptr, h ? &hl : nullptr))
                return false;
        }
        if (data.sum_a > 0.0 && rho < 1.0)
        {
            coeff.setZero();
            coeff(i3) = data.C;
            if (!add_log_term(data.sum_a * (1.0 - rho), coeff, xl, acc, g ? &gl : nullptr, h ? &hl : nullptr))
                return false;
        }
        v = R_th - acc;
        if (g)
            *g = -gl;
        if (h)
            *h = -hl;
        return true;
    };
    return f;
}

// (|p_i - p_{i-1}|^2 - r^2) / r^2 <= 0.
SmoothFunction mobility_constraint(int qa, Vec2 fa, int qb, Vec2 fb, double r)
{
    SmoothFunction f;
    if (qa >= 0)
    {
        f.support.push_back(qa);
        f.support.push_back(qa + 1);
    }
    if (qb >= 0)
    {
        f.support.push_back(qb);
        f.support.push_back(qb + 1);
    }
    const bool ha = qa >= 0, hb = qb >= 0;
    const double inv = 1.0 / (r * r);
    f.eval = [=](const Eigen::VectorXd &xl, double &v, Eigen::VectorXd *g, Eigen::MatrixXd *h) {
        const Vec2 pa = ha ? Vec2{xl(0), xl(1)} : fa;
        const Eigen::Index ob = ha ? 2 : 0;
        const Vec2 pb = hb ? Vec2{xl(ob), xl(ob + 1)} : fb;
        const Vec2 d = pb - pa;
        v = norm_sq(d) * inv - 1.0;
        if (g)
        {
            g->setZero(xl.size());
            if (ha)
            {
                (*g)(0) = -2.0 * d.x * inv;
                (*g)(1) = -2.0 * d.y * inv;
            }
            if (hb)
            {
                (*g)(ob) = 2.0 * d.x * inv;
                (*g)(ob + 1) = 2.0 * d.y * inv;
            }
        }
        if (h)
        {
            h->setZero(xl.size(), xl.size());
            for (Eigen::Index i = 0; i < xl.size(); ++i)
                (*h)(i, i) = 2.0 * inv;
            if (ha && hb)
                for (int c = 0; c < 2; ++c)
                    (*h)(c, 2 + c) = (*h)(2 + c, c) = -2.0 * inv;
        }
        return true;
    };
    return f;
}

// sum_j w_j log2(1 + G_j x_j) over a list of variables (separable, concave).
double log_sum(const std::vector<double> &w, const std::vector<double> &G, const Eigen::VectorXd &xl, Eigen::Index off,
               Eigen::VectorXd *g, Eigen::MatrixXd *h, bool &ok)
{
    double acc = 0.0;
    ok = true;
    for (std::size_t j = 0; j < w.size(); ++j)
    {
        const auto i = off + static_cast<Eigen::Index>(j);
        const double arg = 1.0 + G[j] * xl(i);
        if (!(arg > 0.0))
        {
            ok = false;
            return 0.0;
        }
        acc += w[j] * std::log2(arg);
        if (g)
            (*g)(i) = w[j] * inv_ln2 * G[j] / arg;
        if (h)
            (*h)(i, i) = -w[j] * inv_ln2 * G[j] * G[j] / (arg * arg);
    }
    return acc;
}

// Straight line is strictly mobility feasible and the expansion point can be
// pulled towards it.
bool has_interior(const Scenario &s)
{
    const double r = s.v_max * s.delta;
    if (!(r > 0.0) || s.N < 2)
        return false;
    return norm(s.q_final - s.q_init) < s.N * r * (1.0 - 1e-9);
}

} // namespace

double weighted_utility(const Scenario &s, const LinkState &ls, const Schedule &a)
{
    double acc = 0.0;
    for (int k = 0; k < ls.K(); ++k)
        for (int n = 0; n < ls.N(); ++n)
            if (a(k, n) != 0.0)
                acc += s.w[static_cast<std::size_t>(k)] * a(k, n) * utility(irs_snr(s, ls, k, n), s);
    return acc / ls.N();
}

Eigen::VectorXd irs_utilities(const Scenario &s, const LinkState &ls, const Schedule &a)
{
    Eigen::VectorXd u = Eigen::VectorXd::Zero(ls.K());
    for (int k = 0; k < ls.K(); ++k)
        for (int n = 0; n < ls.N(); ++n)
            if (a(k, n) != 0.0)
                u(k) += a(k, n) * utility(irs_snr(s, ls, k, n), s);
    return u / ls.N();
}

double fairness_utility(const Scenario &s, const LinkState &ls, const Schedule &a)
{
    return irs_utilities(s, ls, a).minCoeff();
}

Eigen::VectorXd slot_rates(const Scenario &s, const LinkState &ls, const Schedule &a)
{
    Eigen::VectorXd r = Eigen::VectorXd::Zero(ls.N());
    for (int n = 0; n < ls.N(); ++n)
        for (int k = 0; k < ls.K(); ++k)
            if (a(k, n) != 0.0)
                r(n) += a(k, n) * rate_uk(ls, s, k, n);
    return r;
}

double rate_margin(const Scenario &s, const LinkState &ls, const Schedule &a)
{
    return slot_rates(s, ls, a).minCoeff() - s.R_th;
}

double beta_lower_bound(double beta0, double alpha, double H, Vec2 c, Vec2 q_ref, Vec2 q)
{
    const double D = norm_sq(q_ref - c);
    const double base = D + H * H;
    const double b_ref = beta0 / std::pow(base, alpha / 2.0);
    return b_ref - alpha * beta0 / (2.0 * std::pow(base, alpha / 2.0 + 1.0)) * (norm_sq(q - c) - D);
}

Trajectory trajectory_from_solution(const Scenario &s, const Eigen::VectorXd &x)
{
    Trajectory t;
    t.q.resize(static_cast<std::size_t>(s.N) + 1);
    t.q.front() = s.q_init;
    t.q.back() = s.q_final;
    for (int i = 1; i <= s.N - 1; ++i)
        t.q[static_cast<std::size_t>(i)] = {x(2 * (i - 1)), x(2 * (i - 1) + 1)};
    return t;
}

ScaProblem build_sca_problem(const Scenario &s, const Schedule &a, const Trajectory &q_prev, ScaObjective kind)
{
    check_trajectory(s, q_prev);
    if (a.rows() != s.K() || a.cols() != s.N)
        throw DimensionMismatch("schedule must be K x N");
    const Layout L = make_layout(s, a, kind);
    const LinkState ls = link_state(s, q_prev);
    ScaProblem out;
    out.free_points = std::max(s.N - 1, 0);
    out.degenerate = !has_interior(s);
    SmoothConvexProgram &p = out.program;
    p.n = L.total;
    p.x0 = Eigen::VectorXd::Zero(p.n);

    // Interior start: pull q_prev slightly towards the straight line.
    Trajectory q_start = q_prev;
    if (!out.degenerate)
    {
        const Trajectory line = straight_line(s);
        constexpr double eps = 1e-3;
        for (std::size_t i = 1; i + 1 < q_start.q.size(); ++i)
            q_start.q[i] = line.q[i] + (1.0 - eps) * (q_prev.q[i] - line.q[i]);
    }
    for (int i = 1; i <= s.N - 1; ++i)
    {
        p.x0(L.q_index(i)) = q_start.q[static_cast<std::size_t>(i)].x;
        p.x0(L.q_index(i) + 1) = q_start.q[static_cast<std::size_t>(i)].y;
    }

    const double H1 = s.H_u - s.H_s;
    const double H3 = s.H_u - s.H_b;
    const double snr_scale = s.P / s.sigma2;
    const double pref = s.utility_scale();
    constexpr double shrink = 1.0 - 1e-7;

    // Per-IRS fairness data.
    std::vector<std::vector<int>> fair_idx(static_cast<std::size_t>(L.K));
    std::vector<std::vector<double>> fair_w(static_cast<std::size_t>(L.K)), fair_G(static_cast<std::size_t>(L.K));

    for (int n = 0; n < L.N; ++n)
    {
        const int wp = n + 1;
        const int qi = L.q_index(wp);
        const Vec2 qref = q_prev.q[static_cast<std::size_t>(wp)];
        const Vec2 qst = q_start.q[static_cast<std::size_t>(wp)];
        const int u3 = L.u3[static_cast<std::size_t>(n)];

        // beta3 surrogate, scaled by beta3 at the expansion point.
        const double s3 = ls.beta3(n);
        const double D3 = norm_sq(qref - s.bs);
        p.constraints.push_back(taylor_constraint(qi, qref, s.bs, D3, s.alpha3 / (2.0 * (D3 + H3 * H3)), u3));
        const double u3_0 = shrink * beta_lower_bound(s.beta0, s.alpha3, H3, s.bs, qref, qst) / s3;
        p.x0(u3) = u3_0;

        SlotRateData rd;
        std::vector<int> rate_support;
        for (int k = 0; k < L.K; ++k)
        {
            const int u1 = L.u1(k, n);
            if (u1 < 0)
                continue;
            const int u2 = L.u2(k, n);
            const Vec2 qs = s.irs[static_cast<std::size_t>(k)];
            const double s1 = ls.beta1(k, n);
            const double D1 = norm_sq(qref - qs);
            p.constraints.push_back(taylor_constraint(qi, qref, qs, D1, s.alpha1 / (2.0 * (D1 + H1 * H1)), u1));
            p.constraints.push_back(qol_constraint(u1, u2, u3));
            const double u1_0 = shrink * beta_lower_bound(s.beta0, s.alpha1, H1, qs, qref, qst) / s1;
            p.x0(u1) = u1_0;
            p.x0(u2) = shrink * std::sqrt(std::max(u1_0, 0.0) * u3_0);

            rd.weight.push_back(a(k, n));
            rd.A.push_back(snr_scale * (ls.c1(k) + ls.c3(k)) * s1);
            rd.B.push_back(snr_scale * ls.c2(k) * std::sqrt(s1 * s3));
            rd.sum_a += a(k, n);
            rate_support.push_back(u1);
            rate_support.push_back(u2);

            const double G = pref * (ls.c1(k) + ls.c3(k)) * s1 / s.sigma2;
            const double wt = a(k, n) / L.N;
            if (kind == ScaObjective::WeightedSum)
            {
                const double ww = s.w[static_cast<std::size_t>(k)] * wt;
                if (ww > 0.0)
                {
                    SmoothFunction f;
                    f.support = {u1};
                    f.eval = [ww, G](const Eigen::VectorXd &xl, double &v, Eigen::VectorXd *g, Eigen::MatrixXd *h) {
                        std::vector<double> w{ww}, GG{G};
                        if (g)
                            g->setZero(1);
                        if (h)
                            h->setZero(1, 1);
                        bool ok;
                        v = log_sum(w, GG, xl, 0, g, h, ok);
                        return ok;
                    };
                    p.objective.push_back(std::move(f));
                }
            }
            else
            {
                fair_idx[static_cast<std::size_t>(k)].push_back(u1);
                fair_w[static_cast<std::size_t>(k)].push_back(wt);
                fair_G[static_cast<std::size_t>(k)].push_back(G);
            }
        }
        rd.C = snr_scale * s3;
        rate_support.push_back(u3);
        p.constraints.push_back(rate_constraint(rate_support, std::move(rd), s.rho, s.R_th));
    }

    // Mobility between consecutive waypoints.
    const double r = s.v_max * s.delta;
    if (r > 0.0)
        for (int i = 1; i <= L.N; ++i)
        {
            const int qa = L.q_index(i - 1), qb = L.q_index(i);
            if (qa < 0 && qb < 0)
                continue;
            p.constraints.push_back(mobility_constraint(qa, q_prev.q[static_cast<std::size_t>(i - 1)], qb,
                                                        q_prev.q[static_cast<std::size_t>(i)], r));
        }

    if (kind == ScaObjective::Fairness)
    {
        SmoothFunction obj;
        obj.support = {L.R};
        obj.eval = [](const Eigen::VectorXd &xl, double &v, Eigen::VectorXd *g, Eigen::MatrixXd *h) {
            v = xl(0);
            if (g)
                *g = Eigen::VectorXd::Ones(1);
            if (h)
                *h = Eigen::MatrixXd::Zero(1, 1);
            return true;
        };
        p.objective.push_back(std::move(obj));
        double r_start = std::numeric_limits<double>::infinity();
        for (int k = 0; k < L.K; ++k)
        {
            const auto ku = static_cast<std::size_t>(k);
            SmoothFunction f;
            f.support = {L.R};
            f.support.insert(f.support.end(), fair_idx[ku].begin(), fair_idx[ku].end());
            f.eval = [w = fair_w[ku], G = fair_G[ku]](const Eigen::VectorXd &xl, double &v, Eigen::VectorXd *g,
                                                      Eigen::MatrixXd *h) {
                if (g)
                    g->setZero(xl.size());
                if (h)
                    h->setZero(xl.size(), xl.size());
                bool ok;
                const double sum = log_sum(w, G, xl, 1, g, h, ok);
                if (!ok)
                    return false;
                v = xl(0) - sum;
                if (g)
                {
                    g->tail(xl.size() - 1) *= -1.0;
                    (*g)(0) = 1.0;
                }
                if (h)
                    *h *= -1.0;
                return true;
            };
            double val = 0.0;
            Eigen::VectorXd xl(static_cast<Eigen::Index>(f.support.size()));
            xl(0) = 0.0;
            for (std::size_t j = 0; j < fair_idx[ku].size(); ++j)
                xl(static_cast<Eigen::Index>(j) + 1) = p.x0(fair_idx[ku][j]);
            if (f.eval(xl, val, nullptr, nullptr))
                r_start = std::min(r_start, -val);
            p.constraints.push_back(std::move(f));
        }
        if (!std::isfinite(r_start))
            r_start = 0.0;
        p.x0(L.R) = r_start - 1e-6 * (1.0 + std::abs(r_start));
    }
    return out;
}

ScaStep sca_trajectory_step(const Scenario &s, const Schedule &a, const Trajectory &q_prev, ScaObjective kind)
{
    ScaStep st;
    st.q = q_prev;
    const LinkState ls0 = link_state(s, q_prev);
    auto true_objective = [&](const LinkState &ls) {
        return kind == ScaObjective::WeightedSum ? weighted_utility(s, ls, a) : fairness_utility(s, ls, a);
    };
    st.objective_prev = st.objective = true_objective(ls0);
    const double margin_prev = rate_margin(s, ls0, a);

    ScaProblem sp = build_sca_problem(s, a, q_prev, kind);
    if (sp.degenerate)
    {
        st.note = "trajectory fixed by mobility constraints";
        return st;
    }
    SmoothConvexProgram &prog = sp.program;
    if (!(max_constraint(prog, prog.x0) < 0.0))
    {
        try
        {
            prog.x0 = find_strictly_feasible(prog, s.algo.barrier);
        }
        catch (const InfeasibleStart &e)
        {
            st.note = std::string("no strictly feasible surrogate start: ") + e.what();
            logger()->debug("sca: {}", st.note);
            return st;
        }
    }
    BarrierResult br;
    try
    {
        br = solve_sca_subproblem(prog, s.algo.barrier);
    }
    catch (const InfeasibleStart &e)
    {
        st.note = e.what();
        return st;
    }
    st.status = br.status;
    st.newton_steps = br.newton_steps;
    st.surrogate = br.objective;

    const Trajectory qn = trajectory_from_solution(s, br.x);
    if (mobility_violation(s, qn) > 1e-9)
    {
        st.note = "surrogate solution breaks mobility constraints";
        return st;
    }
    const LinkState ls1 = link_state(s, qn);
    const double obj_new = true_objective(ls1);
    const double margin_new = rate_margin(s, ls1, a);
    const bool rate_ok = margin_new >= 0.0 || margin_new >= margin_prev;
    if (obj_new >= st.objective_prev && rate_ok)
    {
        st.q = qn;
        st.objective = obj_new;
        st.moved = true;
    }
    else
    {
        st.note = rate_ok ? "true objective did not improve" : "rate constraint violated";
    }
    logger()->debug("sca: newton={} surrogate={:.10g} prev={:.10g} new={:.10g} moved={}", br.newton_steps,
                    br.objective, st.objective_prev, obj_new, st.moved);
    return st;
}

} // namespace uavirs
