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

#include "uavirs/barrier.hpp"
#include "uavirs/errors.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace uavirs
{

namespace
{

Eigen::VectorXd restrict(const Eigen::VectorXd &x, const std::vector<int> &support)
{
    Eigen::VectorXd xl(static_cast<Eigen::Index>(support.size()));
    for (std::size_t i = 0; i < support.size(); ++i)
        xl(static_cast<Eigen::Index>(i)) = x(support[i]);
    return xl;
}

bool value_of(const SmoothFunction &f, const Eigen::VectorXd &x, double &v)
{
    return f.eval(restrict(x, f.support), v, nullptr, nullptr) && std::isfinite(v);
}

using Triplets = std::vector<Eigen::Triplet<double>>;

// Barrier function -f - mu * sum log(-g) and its derivatives.
struct BarrierModel
{
    const std::vector<SmoothFunction> &obj;
    const std::vector<SmoothFunction> &cons;
    const std::vector<SmoothFunction> &domain_only;
    int n;

    // Value only; +inf outside the strictly feasible domain.
    double value(const Eigen::VectorXd &x, double mu) const
    {
        double acc = 0.0;
        for (const auto &f : obj)
        {
            double v;
            if (!value_of(f, x, v))
                return std::numeric_limits<double>::infinity();
            acc -= v;
        }
        for (const auto &g : cons)
        {
            double v;
            if (!value_of(g, x, v) || v >= 0.0)
                return std::numeric_limits<double>::infinity();
            acc -= mu * std::log(-v);
        }
        for (const auto &f : domain_only)
        {
            double v;
            if (!value_of(f, x, v))
                return std::numeric_limits<double>::infinity();
        }
        return acc;
    }

    bool derivatives(const Eigen::VectorXd &x, double mu, Eigen::VectorXd &grad, Triplets &trip) const
    {
        grad = Eigen::VectorXd::Zero(n);
        trip.clear();
        Eigen::VectorXd gl;
        Eigen::MatrixXd hl;
        for (const auto &f : obj)
        {
            double v;
            if (!f.eval(restrict(x, f.support), v, &gl, &hl))
                return false;
            const auto &sp = f.support;
            for (std::size_t a = 0; a < sp.size(); ++a)
            {
                grad(sp[a]) -= gl(static_cast<Eigen::Index>(a));
                for (std::size_t b = 0; b < sp.size(); ++b)
                {
                    const double h = hl(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
                    if (h != 0.0)
                        trip.emplace_back(sp[a], sp[b], -h);
                }
            }
        }
        for (const auto &g : cons)
        {
            double v;
            if (!g.eval(restrict(x, g.support), v, &gl, &hl) || v >= 0.0)
                return false;
            const double inv = 1.0 / (-v);
            const auto &sp = g.support;
            for (std::size_t a = 0; a < sp.size(); ++a)
            {
                const auto ia = static_cast<Eigen::Index>(a);
                grad(sp[a]) += mu * inv * gl(ia);
                for (std::size_t b = 0; b < sp.size(); ++b)
                {
                    const auto ib = static_cast<Eigen::Index>(b);
                    const double h = mu * (inv * hl(ia, ib) + inv * inv * gl(ia) * gl(ib));
                    if (h != 0.0)
                        trip.emplace_back(sp[a], sp[b], h);
                }
            }
        }
        return true;
    }
};

// Solves H dx = -grad (or the equality-constrained KKT system) with diagonal
// equilibration and increasing regularization on failure.
// Sparse LDLT that redoes the symbolic analysis only when the pattern changes.
class PatternCachedLdlt
{
  public:
    bool factorize(const Eigen::SparseMatrix<double> &H)
    {
        const std::vector<int> outer(H.outerIndexPtr(), H.outerIndexPtr() + H.outerSize() + 1);
        const std::vector<int> inner(H.innerIndexPtr(), H.innerIndexPtr() + H.nonZeros());
        if (!analyzed_ || outer != outer_ || inner != inner_)
        {
            ldlt_.analyzePattern(H);
            outer_ = outer;
            inner_ = inner;
            analyzed_ = true;
        }
        ldlt_.factorize(H);
        return ldlt_.info() == Eigen::Success;
    }

    const Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> &solver() const { return ldlt_; }

  private:
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;
    std::vector<int> outer_, inner_;
    bool analyzed_ = false;
};

bool newton_direction(int n, const Triplets &trip, const Eigen::VectorXd &grad, const Eigen::MatrixXd &A_eq,
                      PatternCachedLdlt &cache, Eigen::VectorXd &dx)
{
    Eigen::SparseMatrix<double> H(n, n);
    H.setFromTriplets(trip.begin(), trip.end());
    Eigen::VectorXd diag = H.diagonal();
    Eigen::VectorXd D(n);
    for (int i = 0; i < n; ++i)
        D(i) = 1.0 / std::sqrt(std::max(std::abs(diag(i)), 1e-300));
    Eigen::SparseMatrix<double> Hs = D.asDiagonal() * H * D.asDiagonal();
    const Eigen::VectorXd rhs = -D.cwiseProduct(grad);
    const int me = static_cast<int>(A_eq.rows());

    for (double reg : {0.0, 1e-12, 1e-10, 1e-8, 1e-6, 1e-4})
    {
        Eigen::SparseMatrix<double> Hr = Hs;
        if (reg > 0.0)
            for (int i = 0; i < n; ++i)
                Hr.coeffRef(i, i) += reg;
        Eigen::VectorXd y;
        if (me == 0)
        {
            Hr.makeCompressed();
            if (!cache.factorize(Hr))
                continue;
            const auto &ldlt = cache.solver();
            y = ldlt.solve(rhs);
            if (ldlt.info() != Eigen::Success || !y.allFinite() || (ldlt.vectorD().array() <= 0.0).any())
                continue;
        }
        else
        {
            Triplets kt;
            for (int k = 0; k < Hr.outerSize(); ++k)
                for (Eigen::SparseMatrix<double>::InnerIterator it(Hr, k); it; ++it)
                    kt.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
            for (int i = 0; i < me; ++i)
                for (int j = 0; j < n; ++j)
                    if (A_eq(i, j) != 0.0)
                    {
                        kt.emplace_back(n + i, j, A_eq(i, j) * D(j));
                        kt.emplace_back(j, n + i, A_eq(i, j) * D(j));
                    }
            Eigen::SparseMatrix<double> Kmat(n + me, n + me);
            Kmat.setFromTriplets(kt.begin(), kt.end());
            Kmat.makeCompressed();
            Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
            lu.compute(Kmat);
            if (lu.info() != Eigen::Success)
                continue;
            Eigen::VectorXd r(n + me);
            r.head(n) = rhs;
            r.tail(me).setZero(); // iterates stay on the affine set
            const Eigen::VectorXd sol = lu.solve(r);
            if (lu.info() != Eigen::Success || !sol.allFinite())
                continue;
            y = sol.head(n);
        }
        dx = D.cwiseProduct(y);
        if (dx.allFinite())
            return true;
    }
    return false;
}

struct CenterOutcome
{
    BarrierStatus status = BarrierStatus::Optimal;
    int steps = 0;
    bool stopped_early = false;
};

CenterOutcome center(const BarrierModel &model, const Eigen::MatrixXd &A_eq, double mu, const BarrierParams &bp,
                     PatternCachedLdlt &cache, Eigen::VectorXd &x, const std::function<bool(const Eigen::VectorXd &)> &stop_early)
{
    CenterOutcome out;
    Eigen::VectorXd grad, dx;
    Triplets trip;
    for (int it = 0; it < bp.max_newton; ++it)
    {
        if (!model.derivatives(x, mu, grad, trip))
            throw SolverError("barrier iterate left the domain");
        if (!newton_direction(model.n, trip, grad, A_eq, cache, dx))
        {
            out.status = BarrierStatus::LineSearchStall;
            return out;
        }
        const double slope = grad.dot(dx);
        const double dec2 = -slope;
        if (dec2 < 0.0)
        {
            out.status = BarrierStatus::LineSearchStall;
            return out;
        }
        if (0.5 * dec2 <= bp.newton_tol)
            return out;

        const double f0 = model.value(x, mu);
        double t = 1.0;
        double f1 = model.value(x + t * dx, mu);
        while (!std::isfinite(f1) && t > 1e-16)
        {
            t *= bp.ls_beta;
            f1 = model.value(x + t * dx, mu);
        }
        const double noise = 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(f0));
        while (f1 > f0 + bp.ls_alpha * t * slope + noise && t > 1e-16)
        {
            t *= bp.ls_beta;
            f1 = model.value(x + t * dx, mu);
        }
        if (!(t > 1e-16) || !std::isfinite(f1))
        {
            // Decrease below rounding noise counts as centered.
            if (dec2 <= 1e3 * noise)
                return out;
            out.status = BarrierStatus::LineSearchStall;
            return out;
        }
        x += t * dx;
        ++out.steps;
        if (stop_early && stop_early(x))
        {
            out.stopped_early = true;
            return out;
        }
    }
    out.status = BarrierStatus::MaxNewton;
    return out;
}

struct PathOutcome
{
    Eigen::VectorXd x;
    BarrierStatus status = BarrierStatus::Optimal;
    int steps = 0;
    int stages = 0;
    double mu = 0.0;
    bool stopped_early = false;
};

PathOutcome barrier_path(const BarrierModel &model, const Eigen::MatrixXd &A_eq, const Eigen::VectorXd &x0,
                         const BarrierParams &bp, const std::function<bool(const Eigen::VectorXd &)> &stop_early)
{
    PathOutcome po;
    po.x = x0;
    double mu = bp.mu0;
    const double m = std::max<std::size_t>(model.cons.size(), 1);
    Eigen::VectorXd best = x0;
    PatternCachedLdlt cache;
    for (;;)
    {
        Eigen::VectorXd trial = po.x;
        const CenterOutcome c = center(model, A_eq, mu, bp, cache, trial, stop_early);
        po.steps += c.steps;
        ++po.stages;
        po.x = trial;
        po.mu = mu;
        if (c.stopped_early)
        {
            po.stopped_early = true;
            return po;
        }
        if (c.status != BarrierStatus::Optimal)
        {
            // Keep the best iterate; an unfinished stage is still feasible.
            po.status = c.status;
            if (m * mu <= 1e3 * bp.gap_tol)
                po.status = BarrierStatus::Optimal;
            return po;
        }
        if (m * mu <= bp.gap_tol)
            return po;
        mu /= bp.mu_factor;
    }
}

} // namespace

double evaluate_objective(const SmoothConvexProgram &p, const Eigen::VectorXd &x)
{
    double acc = 0.0;
    for (const auto &f : p.objective)
    {
        double v;
        if (!value_of(f, x, v))
            return -std::numeric_limits<double>::infinity();
        acc += v;
    }
    return acc;
}

double max_constraint(const SmoothConvexProgram &p, const Eigen::VectorXd &x)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto &g : p.constraints)
    {
        double v;
        if (!value_of(g, x, v))
            return std::numeric_limits<double>::infinity();
        worst = std::max(worst, v);
    }
    return worst;
}

BarrierResult solve_sca_subproblem(const SmoothConvexProgram &p, const BarrierParams &bp)
{
    if (p.x0.size() != p.n)
        throw DimensionMismatch("start point has the wrong length");
    if (!(max_constraint(p, p.x0) < 0.0) || !std::isfinite(evaluate_objective(p, p.x0)))
        throw InfeasibleStart("start point is not strictly feasible");
    if (p.A_eq.rows() && (p.A_eq * p.x0 - p.b_eq).lpNorm<Eigen::Infinity>() > 1e-9)
        throw InfeasibleStart("start point violates the equality constraints");

    const std::vector<SmoothFunction> none;
    const BarrierModel model{p.objective, p.constraints, none, p.n};
    const PathOutcome po = barrier_path(model, p.A_eq, p.x0, bp, {});

    BarrierResult r;
    r.x = po.x;
    r.objective = evaluate_objective(p, po.x);
    r.status = po.status;
    r.newton_steps = po.steps;
    r.stages = po.stages;
    r.mu = po.mu;
    r.max_constraint = max_constraint(p, po.x);

    // Lagrangian stationarity with the central-path multipliers.
    Eigen::VectorXd grad;
    Triplets trip;
    if (model.derivatives(po.x, po.mu, grad, trip))
    {
        if (p.A_eq.rows())
        {
            // Remove the component in the row space of A_eq.
            const Eigen::MatrixXd At = p.A_eq.transpose();
            const Eigen::VectorXd nu = At.colPivHouseholderQr().solve(grad);
            grad -= At * nu;
        }
        r.stationarity = grad.lpNorm<Eigen::Infinity>();
    }
    r.lambda.resize(static_cast<Eigen::Index>(p.constraints.size()));
    for (std::size_t i = 0; i < p.constraints.size(); ++i)
    {
        double v = 0.0;
        value_of(p.constraints[i], po.x, v);
        r.lambda(static_cast<Eigen::Index>(i)) = po.mu / (-v);
    }
    return r;
}

Eigen::VectorXd find_strictly_feasible(const SmoothConvexProgram &p, const BarrierParams &bp)
{
    if (p.x0.size() != p.n)
        throw DimensionMismatch("start point has the wrong length");
    const double g0 = max_constraint(p, p.x0);
    if (!std::isfinite(g0) || !std::isfinite(evaluate_objective(p, p.x0)))
        throw InfeasibleStart("start point lies outside a constraint domain");
    if (g0 < 0.0)
        return p.x0;

    // Variables (x, s): maximize -s  s.t.  g_i(x) - s <= 0,  -s - 1 <= 0.
    const int n = p.n;
    std::vector<SmoothFunction> obj(1), cons;
    obj[0].support = {n};
    obj[0].eval = [](const Eigen::VectorXd &xl, double &v, Eigen::VectorXd *g, Eigen::MatrixXd *h) {
        v = -xl(0);
        if (g)
            *g = Eigen::VectorXd::Constant(1, -1.0);
        if (h)
            *h = Eigen::MatrixXd::Zero(1, 1);
        return true;
    };
    for (const auto &gi : p.constraints)
    {
        SmoothFunction f;
        f.support = gi.support;
        f.support.push_back(n);
        const auto inner = gi.eval;
        const auto ls = static_cast<Eigen::Index>(gi.support.size());
        f.eval = [inner, ls](const Eigen::VectorXd &xl, double &v, Eigen::VectorXd *g, Eigen::MatrixXd *h) {
            Eigen::VectorXd gl;
            Eigen::MatrixXd hl;
            if (!inner(xl.head(ls), v, g ? &gl : nullptr, h ? &hl : nullptr))
                return false;
            v -= xl(ls);
            if (g)
            {
                g->resize(ls + 1);
                g->head(ls) = gl;
                (*g)(ls) = -1.0;
            }
            if (h)
            {
                *h = Eigen::MatrixXd::Zero(ls + 1, ls + 1);
                h->topLeftCorner(ls, ls) = hl;
            }
            return true;
        };
        cons.push_back(std::move(f));
    }
    {
        SmoothFunction f;
        f.support = {n};
        f.eval = [](const Eigen::VectorXd &xl, double &v, Eigen::VectorXd *g, Eigen::MatrixXd *h) {
            v = -xl(0) - 1.0;
            if (g)
                *g = Eigen::VectorXd::Constant(1, -1.0);
            if (h)
                *h = Eigen::MatrixXd::Zero(1, 1);
            return true;
        };
        cons.push_back(std::move(f));
    }
    Eigen::VectorXd x0(n + 1);
    x0.head(n) = p.x0;
    x0(n) = g0 + 0.1 * std::max(1.0, std::abs(g0));
    Eigen::MatrixXd A_eq;
    if (p.A_eq.rows())
    {
        A_eq = Eigen::MatrixXd::Zero(p.A_eq.rows(), n + 1);
        A_eq.leftCols(n) = p.A_eq;
    }

    const BarrierModel model{obj, cons, p.objective, n + 1};
    auto feasible = [&](const Eigen::VectorXd &z) { return z(n) < -1e-3 && max_constraint(p, z.head(n)) < 0.0; };
    const PathOutcome po = barrier_path(model, A_eq, x0, bp, feasible);
    const Eigen::VectorXd x = po.x.head(n);
    if (max_constraint(p, x) < 0.0 && std::isfinite(evaluate_objective(p, x)))
        return x;
    throw InfeasibleStart("no strictly feasible point found");
}

double convexity_violation(const SmoothFunction &f, const Eigen::VectorXd &x, double radius, int samples,
                           std::mt19937_64 &rng, bool concave)
{
    std::normal_distribution<double> g(0.0, 1.0);
    double worst = 0.0;
    const auto n = static_cast<Eigen::Index>(f.support.size());
    const Eigen::VectorXd xl = restrict(x, f.support);
    for (int s = 0; s < samples; ++s)
    {
        Eigen::VectorXd a(n), b(n);
        for (Eigen::Index i = 0; i < n; ++i)
        {
            a(i) = xl(i) + radius * g(rng);
            b(i) = xl(i) + radius * g(rng);
        }
        double fa, fb, fm;
        if (!f.eval(a, fa, nullptr, nullptr) || !f.eval(b, fb, nullptr, nullptr) ||
            !f.eval(0.5 * (a + b), fm, nullptr, nullptr))
            continue;
        const double v = concave ? 0.5 * (fa + fb) - fm : fm - 0.5 * (fa + fb);
        worst = std::max(worst, v);
    }
    return worst;
}

} // namespace uavirs
