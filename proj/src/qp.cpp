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

#include "uavirs/qp.hpp"
#include "uavirs/errors.hpp"
#include "uavirs/lp.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace uavirs
{

namespace
{

struct Bounds
{
    std::vector<int> lo_idx, up_idx;
    Eigen::VectorXd lo_val, up_val;
};

Bounds collect_bounds(const QuadraticProgram &qp, int n)
{
    Bounds bd;
    std::vector<double> lv, uv;
    for (int j = 0; j < n; ++j)
    {
        if (qp.lower.size() && std::isfinite(qp.lower(j)))
        {
            bd.lo_idx.push_back(j);
            lv.push_back(qp.lower(j));
        }
        if (qp.upper.size() && std::isfinite(qp.upper(j)))
        {
            bd.up_idx.push_back(j);
            uv.push_back(qp.upper(j));
        }
    }
    bd.lo_val = Eigen::Map<Eigen::VectorXd>(lv.data(), static_cast<Eigen::Index>(lv.size()));
    bd.up_val = Eigen::Map<Eigen::VectorXd>(uv.data(), static_cast<Eigen::Index>(uv.size()));
    return bd;
}

// Inequalities stacked as [A; -I_lo; I_up] x <= [b; -lo; up].
struct Stacked
{
    const QuadraticProgram &qp;
    const Bounds &bd;
    int m_a, m_lo, m_up;
    Eigen::SparseMatrix<double> A_sp;

    int rows() const { return m_a + m_lo + m_up; }

    Eigen::VectorXd apply(const Eigen::VectorXd &x) const
    {
        Eigen::VectorXd out(rows());
        if (m_a)
            out.head(m_a) = qp.A * x;
        for (int i = 0; i < m_lo; ++i)
            out(m_a + i) = -x(bd.lo_idx[i]);
        for (int i = 0; i < m_up; ++i)
            out(m_a + m_lo + i) = x(bd.up_idx[i]);
        return out;
    }

    Eigen::VectorXd rhs() const
    {
        Eigen::VectorXd h(rows());
        if (m_a)
            h.head(m_a) = qp.b;
        if (m_lo)
            h.segment(m_a, m_lo) = -bd.lo_val;
        if (m_up)
            h.tail(m_up) = bd.up_val;
        return h;
    }

    Eigen::VectorXd apply_t(const Eigen::VectorXd &v, int n) const
    {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
        if (m_a)
            out += qp.A.transpose() * v.head(m_a);
        for (int i = 0; i < m_lo; ++i)
            out(bd.lo_idx[i]) -= v(m_a + i);
        for (int i = 0; i < m_up; ++i)
            out(bd.up_idx[i]) += v(m_a + m_lo + i);
        return out;
    }

    // G' diag(d) G
    Eigen::MatrixXd gram(const Eigen::VectorXd &d, int n) const
    {
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
        if (m_a)
        {
            const Eigen::SparseMatrix<double> DA = d.head(m_a).asDiagonal() * A_sp;
            out += Eigen::MatrixXd(Eigen::SparseMatrix<double>(A_sp.transpose()) * DA);
        }
        for (int i = 0; i < m_lo; ++i)
            out(bd.lo_idx[i], bd.lo_idx[i]) += d(m_a + i);
        for (int i = 0; i < m_up; ++i)
            out(bd.up_idx[i], bd.up_idx[i]) += d(m_a + m_lo + i);
        return out;
    }
};

double objective_of(const QuadraticProgram &qp, const Eigen::VectorXd &x)
{
    return 0.5 * x.dot(qp.H * x) + qp.g.dot(x);
}

void split_multipliers(const Stacked &st, const Eigen::VectorXd &zs, int n, QpResult &r)
{
    r.z = zs.head(st.m_a);
    r.z_lower = Eigen::VectorXd::Zero(n);
    r.z_upper = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < st.m_lo; ++i)
        r.z_lower(st.bd.lo_idx[i]) = zs(st.m_a + i);
    for (int i = 0; i < st.m_up; ++i)
        r.z_upper(st.bd.up_idx[i]) = zs(st.m_a + st.m_lo + i);
}

// Primal active-set method warm-started from the interior-point estimate.
// Constraints the estimate identifies as active seed the working set; the
// point is projected onto them, then null-space steps with a ratio test and
// multiplier-sign drops run to an exact KKT point.
class ActiveSet
{
  public:
    ActiveSet(const QuadraticProgram &qp, const Stacked &st)
        : qp_(qp), st_(st), n_(static_cast<int>(qp.g.size())), m_(st.rows()), me_(static_cast<int>(qp.A_eq.rows()))
    {
        G_ = Eigen::MatrixXd::Zero(m_, n_);
        if (st.m_a)
            G_.topRows(st.m_a) = qp.A;
        for (int i = 0; i < st.m_lo; ++i)
            G_(st.m_a + i, st.bd.lo_idx[i]) = -1.0;
        for (int i = 0; i < st.m_up; ++i)
            G_(st.m_a + st.m_lo + i, st.bd.up_idx[i]) = 1.0;
        h_ = st.rhs();
        in_w_.assign(m_, 0);
        fixed_.assign(n_, -1);
        scale_ = 1.0 + std::max({qp.g.lpNorm<Eigen::Infinity>(), h_.size() ? h_.lpNorm<Eigen::Infinity>() : 0.0,
                                 qp.H.size() ? qp.H.lpNorm<Eigen::Infinity>() : 0.0});
    }

    bool run(const Eigen::VectorXd &x0, const Eigen::VectorXd &s, const Eigen::VectorXd &z, QpResult &out)
    {
        x_ = x0;
        seed(s, z);
        if (!restore_feasibility())
            return false;
        const int max_steps = 5 * (n_ + m_) + 50;
        for (int it = 0; it < max_steps; ++it)
        {
            const int status = step();
            if (status < 0)
                return false;
            if (status == 1)
            {
                finish(out);
                return true;
            }
        }
        return false;
    }

  private:
    const QuadraticProgram &qp_;
    const Stacked &st_;
    int n_, m_, me_;
    Eigen::MatrixXd G_;
    Eigen::VectorXd h_, x_, lambda_, y_;
    std::vector<int> general_; // working rows of A
    std::vector<int> fixed_;   // working bound row per variable, or -1
    std::vector<char> in_w_;
    double scale_;

    double feas_tol(int i) const { return 1e-12 * (1.0 + std::abs(h_(i))); }

    bool is_bound(int i) const { return i >= st_.m_a; }

    int variable(int i) const
    {
        const int r = i - st_.m_a;
        return r < st_.m_lo ? st_.bd.lo_idx[r] : st_.bd.up_idx[r - st_.m_lo];
    }

    std::vector<int> free_variables(int skip = -1) const
    {
        std::vector<int> f;
        for (int j = 0; j < n_; ++j)
            if (fixed_[j] < 0 && j != skip)
                f.push_back(j);
        return f;
    }

    // Equalities and working rows of A over all variables.
    Eigen::MatrixXd general_system(const Eigen::RowVectorXd *extra = nullptr) const
    {
        const int c = me_ + static_cast<int>(general_.size()) + (extra ? 1 : 0);
        Eigen::MatrixXd C(c, n_);
        if (me_)
            C.topRows(me_) = qp_.A_eq;
        for (std::size_t i = 0; i < general_.size(); ++i)
            C.row(me_ + static_cast<int>(i)) = G_.row(general_[i]);
        if (extra)
            C.row(c - 1) = *extra;
        return C;
    }

    Eigen::VectorXd general_rhs() const
    {
        Eigen::VectorXd r(me_ + static_cast<int>(general_.size()));
        if (me_)
            r.head(me_) = qp_.b_eq;
        for (std::size_t i = 0; i < general_.size(); ++i)
            r(me_ + static_cast<int>(i)) = h_(general_[i]);
        return r;
    }

    static bool full_row_rank(const Eigen::MatrixXd &C)
    {
        if (C.rows() == 0)
            return true;
        if (C.rows() > C.cols())
            return false;
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(C.transpose());
        qr.setThreshold(1e-10);
        return qr.rank() == C.rows();
    }

    bool independent(int i) const
    {
        if (is_bound(i))
        {
            const int j = variable(i);
            if (fixed_[j] >= 0)
                return false;
            return full_row_rank(general_system()(Eigen::all, free_variables(j)));
        }
        const Eigen::RowVectorXd row = G_.row(i);
        return full_row_rank(general_system(&row)(Eigen::all, free_variables()));
    }

    void add(int i)
    {
        in_w_[i] = 1;
        if (is_bound(i))
            fixed_[variable(i)] = i;
        else
            general_.push_back(i);
    }

    void remove(int i)
    {
        in_w_[i] = 0;
        if (is_bound(i))
            fixed_[variable(i)] = -1;
        else
            general_.erase(std::find(general_.begin(), general_.end(), i));
    }

    int working_count() const
    {
        int c = me_ + static_cast<int>(general_.size());
        for (int j = 0; j < n_; ++j)
            c += fixed_[j] >= 0;
        return c;
    }

    void seed(const Eigen::VectorXd &s, const Eigen::VectorXd &z)
    {
        std::vector<int> cand;
        for (int i = 0; i < m_; ++i)
            if (z(i) > s(i))
                cand.push_back(i);
        std::sort(cand.begin(), cand.end(), [&](int a, int b) { return s(a) * z(b) < s(b) * z(a); });
        for (int i : cand)
            if (working_count() < n_ && independent(i))
                add(i);
    }

    // Moves x minimally onto the working constraints and the equalities,
    // adding any constraint the move violates.
    bool restore_feasibility()
    {
        for (int round = 0; round < m_ + 1; ++round)
        {
            for (int j = 0; j < n_; ++j)
                if (fixed_[j] >= 0)
                    x_(j) = G_(fixed_[j], j) * h_(fixed_[j]);
            const Eigen::MatrixXd C = general_system();
            if (C.rows())
            {
                const std::vector<int> f = free_variables();
                const Eigen::VectorXd r = general_rhs() - C * x_;
                const Eigen::MatrixXd Cf = C(Eigen::all, f);
                const Eigen::VectorXd dx = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(Cf).solve(r);
                for (std::size_t t = 0; t < f.size(); ++t)
                    x_(f[t]) += dx(static_cast<Eigen::Index>(t));
            }
            const Eigen::VectorXd v = G_ * x_ - h_;
            int worst = -1;
            double wv = 0.0;
            for (int i = 0; i < m_; ++i)
                if (!in_w_[i] && v(i) > feas_tol(i) && v(i) > wv)
                {
                    wv = v(i);
                    worst = i;
                }
            if (worst < 0)
                return true;
            if (!independent(worst))
                return false;
            add(worst);
        }
        return false;
    }

    // One iteration: 1 optimal, 0 continue, -1 failure.
    int step()
    {
        const Eigen::VectorXd gx = qp_.H * x_ + qp_.g;
        const std::vector<int> f = free_variables();
        const int nf = static_cast<int>(f.size());
        const Eigen::MatrixXd C = general_system();
        const Eigen::MatrixXd Cf = C(Eigen::all, f);
        const int c = static_cast<int>(C.rows());
        const Eigen::VectorXd gf = gx(f);

        Eigen::MatrixXd Z;
        Eigen::HouseholderQR<Eigen::MatrixXd> qr;
        if (c > 0)
        {
            qr.compute(Cf.transpose());
            Z = qr.householderQ() * Eigen::MatrixXd::Identity(nf, nf).rightCols(nf - c);
        }
        else
            Z = Eigen::MatrixXd::Identity(nf, nf);

        Eigen::VectorXd pf = Eigen::VectorXd::Zero(nf);
        bool ray = false;
        if (Z.cols() > 0)
        {
            const Eigen::MatrixXd Hr = Z.transpose() * qp_.H(f, f) * Z;
            const Eigen::VectorXd gr = Z.transpose() * gf;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Hr);
            const Eigen::VectorXd &ev = eig.eigenvalues();
            const double curv_tol = 1e-12 * (1.0 + std::abs(ev.maxCoeff()));
            const double grad_tol = 1e-13 * scale_;
            Eigen::VectorXd pz = Eigen::VectorXd::Zero(Z.cols()), dz = Eigen::VectorXd::Zero(Z.cols());
            for (Eigen::Index i = 0; i < ev.size(); ++i)
            {
                const double comp = eig.eigenvectors().col(i).dot(gr);
                if (ev(i) > curv_tol)
                    pz -= (comp / ev(i)) * eig.eigenvectors().col(i);
                else if (std::abs(comp) > grad_tol)
                {
                    dz -= comp * eig.eigenvectors().col(i);
                    ray = true;
                }
            }
            pf = Z * (ray ? dz : pz);
        }
        Eigen::VectorXd p = Eigen::VectorXd::Zero(n_);
        p(f) = pf;

        if (!ray && p.lpNorm<Eigen::Infinity>() <= 1e-15 * (1.0 + x_.lpNorm<Eigen::Infinity>()))
        {
            // Multipliers of the general rows from Cf^T w = -gf, then of the bounds.
            Eigen::VectorXd w = Eigen::VectorXd::Zero(c);
            if (c > 0)
            {
                const Eigen::VectorXd qtg = qr.householderQ().transpose() * (-gf);
                w = qr.matrixQR().topLeftCorner(c, c).triangularView<Eigen::Upper>().solve(qtg.head(c));
            }
            const Eigen::VectorXd resid = gx + (c > 0 ? Eigen::VectorXd(C.transpose() * w) : Eigen::VectorXd::Zero(n_));
            y_ = w.head(me_);
            lambda_ = Eigen::VectorXd::Zero(m_);
            for (std::size_t i = 0; i < general_.size(); ++i)
                lambda_(general_[i]) = w(me_ + static_cast<int>(i));
            for (int j = 0; j < n_; ++j)
                if (fixed_[j] >= 0)
                    lambda_(fixed_[j]) = -G_(fixed_[j], j) * resid(j);
            int drop = -1;
            double most_negative = -1e-10 * scale_;
            for (int i = 0; i < m_; ++i)
                if (in_w_[i] && lambda_(i) < most_negative)
                {
                    most_negative = lambda_(i);
                    drop = i;
                }
            if (drop < 0)
                return 1;
            remove(drop);
            return 0;
        }

        // Ratio test against constraints outside the working set.
        double alpha = ray ? std::numeric_limits<double>::infinity() : 1.0;
        int block = -1;
        const Eigen::VectorXd gp = G_ * p;
        const Eigen::VectorXd slack = h_ - G_ * x_;
        const double pn = p.norm();
        for (int i = 0; i < m_; ++i)
        {
            if (in_w_[i] || gp(i) <= 1e-14 * G_.row(i).norm() * pn)
                continue;
            const double t = std::max(slack(i), 0.0) / gp(i);
            if (t < alpha)
            {
                alpha = t;
                block = i;
            }
        }
        if (!std::isfinite(alpha))
            return -1; // unbounded along a zero-curvature ray
        x_ += alpha * p;
        if (block >= 0)
            add(block);
        return 0;
    }

    void finish(QpResult &out) const
    {
        out.x = x_;
        out.z = lambda_.head(st_.m_a).cwiseMax(0.0);
        out.y = y_;
        out.z_lower = Eigen::VectorXd::Zero(n_);
        out.z_upper = Eigen::VectorXd::Zero(n_);
        for (int i = 0; i < st_.m_lo; ++i)
            out.z_lower(st_.bd.lo_idx[i]) = std::max(lambda_(st_.m_a + i), 0.0);
        for (int i = 0; i < st_.m_up; ++i)
            out.z_upper(st_.bd.up_idx[i]) = std::max(lambda_(st_.m_a + st_.m_lo + i), 0.0);
        out.objective = objective_of(qp_, x_);
        out.polished = true;
    }
};

} // namespace

void qp_residuals(const QuadraticProgram &qp, QpResult &r)
{
    const int n = static_cast<int>(qp.g.size());
    Eigen::VectorXd grad = qp.H * r.x + qp.g;
    if (qp.A.rows())
        grad += qp.A.transpose() * r.z;
    if (qp.A_eq.rows())
        grad += qp.A_eq.transpose() * r.y;
    if (r.z_lower.size() == n)
        grad -= r.z_lower;
    if (r.z_upper.size() == n)
        grad += r.z_upper;
    r.stationarity = grad.lpNorm<Eigen::Infinity>();
    double comp = 0.0, prim = 0.0;
    if (qp.A.rows())
    {
        const Eigen::VectorXd slack = qp.b - qp.A * r.x;
        comp = std::max(comp, (slack.array() * r.z.array()).abs().maxCoeff());
        prim = std::max(prim, (-slack).maxCoeff());
    }
    for (int j = 0; j < n; ++j)
    {
        if (qp.lower.size() && std::isfinite(qp.lower(j)))
        {
            comp = std::max(comp, std::abs((r.x(j) - qp.lower(j)) * r.z_lower(j)));
            prim = std::max(prim, qp.lower(j) - r.x(j));
        }
        if (qp.upper.size() && std::isfinite(qp.upper(j)))
        {
            comp = std::max(comp, std::abs((qp.upper(j) - r.x(j)) * r.z_upper(j)));
            prim = std::max(prim, r.x(j) - qp.upper(j));
        }
    }
    if (qp.A_eq.rows())
        prim = std::max(prim, (qp.A_eq * r.x - qp.b_eq).lpNorm<Eigen::Infinity>());
    r.complementarity = comp;
    r.primal_residual = std::max(prim, 0.0);
}

namespace
{

// Exact feasibility test of the constraint set by phase-one simplex.
bool feasible_region(const QuadraticProgram &qp)
{
    const int n = static_cast<int>(qp.g.size());
    LinearProgram lp;
    lp.c = Eigen::VectorXd::Zero(n);
    lp.A_ub = qp.A;
    lp.b_ub = qp.b;
    lp.A_eq = qp.A_eq;
    lp.b_eq = qp.b_eq;
    lp.lower = qp.lower.size() ? qp.lower : Eigen::VectorXd::Constant(n, -lp_inf);
    lp.upper = qp.upper.size() ? qp.upper : Eigen::VectorXd::Constant(n, lp_inf);
    return simplex(lp).status != LpStatus::Infeasible;
}

} // namespace

QpResult qp_interior_point(const QuadraticProgram &qp, const QpOptions &opt)
{
    const int n = static_cast<int>(qp.g.size());
    if (qp.H.rows() != n || qp.H.cols() != n || (qp.A.rows() && (qp.A.cols() != n || qp.b.size() != qp.A.rows())) ||
        (qp.A_eq.rows() && (qp.A_eq.cols() != n || qp.b_eq.size() != qp.A_eq.rows())) ||
        (qp.lower.size() && qp.lower.size() != n) || (qp.upper.size() && qp.upper.size() != n))
        throw DimensionMismatch("quadratic program dimensions are inconsistent");

    const Bounds bd = collect_bounds(qp, n);
    const Stacked st{qp, bd, static_cast<int>(qp.A.rows()), static_cast<int>(bd.lo_idx.size()),
                     static_cast<int>(bd.up_idx.size()), qp.A.sparseView()};
    const int m = st.rows();
    const int me = static_cast<int>(qp.A_eq.rows());
    const Eigen::VectorXd h = st.rhs();

    // Start at the box midpoint (or origin) with unit slacks and duals.
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < n; ++j)
    {
        const bool hl = qp.lower.size() && std::isfinite(qp.lower(j));
        const bool hu = qp.upper.size() && std::isfinite(qp.upper(j));
        if (hl && hu)
            x(j) = 0.5 * (qp.lower(j) + qp.upper(j));
        else if (hl)
            x(j) = qp.lower(j) + 1.0;
        else if (hu)
            x(j) = qp.upper(j) - 1.0;
    }
    Eigen::VectorXd s = (h - st.apply(x)).cwiseMax(1.0);
    Eigen::VectorXd z = Eigen::VectorXd::Ones(m);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(me);

    const double scale = 1.0 + std::max({qp.g.lpNorm<Eigen::Infinity>(), h.size() ? h.lpNorm<Eigen::Infinity>() : 0.0,
                                         qp.H.size() ? qp.H.lpNorm<Eigen::Infinity>() : 0.0});
    QpResult res;
    res.status = QpStatus::MaxIter;
    Eigen::VectorXd x_last = x, z_last = z;
    int it = 0;
    for (; it < opt.max_iter; ++it)
    {
        const Eigen::VectorXd Hx = qp.H * x;
        Eigen::VectorXd rd = Hx + qp.g + st.apply_t(z, n);
        if (me)
            rd += qp.A_eq.transpose() * y;
        const Eigen::VectorXd rp = st.apply(x) + s - h;
        const Eigen::VectorXd re = me ? Eigen::VectorXd(qp.A_eq * x - qp.b_eq) : Eigen::VectorXd();
        const double mu = m ? s.dot(z) / m : 0.0;
        const double rnorm = std::max({rd.lpNorm<Eigen::Infinity>(), m ? rp.lpNorm<Eigen::Infinity>() : 0.0,
                                       me ? re.lpNorm<Eigen::Infinity>() : 0.0});
        if (rnorm <= opt.tol * scale && mu <= opt.tol * scale)
        {
            res.status = QpStatus::Optimal;
            break;
        }
        // Infeasibility heuristic: duals explode while primal residual stays.
        if (it > 50 && z.lpNorm<Eigen::Infinity>() > 1e14 * scale &&
            std::max(m ? rp.lpNorm<Eigen::Infinity>() : 0.0, me ? re.lpNorm<Eigen::Infinity>() : 0.0) > 1e-6 * scale)
        {
            res.status = QpStatus::Infeasible;
            break;
        }

        const Eigen::VectorXd d = z.cwiseQuotient(s);
        Eigen::MatrixXd Kmat = Eigen::MatrixXd::Zero(n + me, n + me);
        Kmat.topLeftCorner(n, n) = qp.H + st.gram(d, n);
        Kmat.topLeftCorner(n, n).diagonal().array() += 1e-14 * scale;
        if (me)
        {
            Kmat.topRightCorner(n, me) = qp.A_eq.transpose();
            Kmat.bottomLeftCorner(me, n) = qp.A_eq;
            Kmat.bottomRightCorner(me, me).diagonal().setConstant(-1e-14 * scale);
        }
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(Kmat);

        auto direction = [&](const Eigen::VectorXd &rc, Eigen::VectorXd &dx, Eigen::VectorXd &dy, Eigen::VectorXd &ds,
                             Eigen::VectorXd &dz) {
            // dz = S^-1 Z (G dx + rp) - S^-1 rc
            const Eigen::VectorXd w = d.cwiseProduct(rp) - rc.cwiseQuotient(s);
            Eigen::VectorXd rhs(n + me);
            rhs.head(n) = -rd - st.apply_t(w, n);
            if (me)
                rhs.tail(me) = -re;
            const Eigen::VectorXd sol = lu.solve(rhs);
            dx = sol.head(n);
            dy = me ? Eigen::VectorXd(sol.tail(me)) : Eigen::VectorXd();
            const Eigen::VectorXd gdx = st.apply(dx);
            dz = d.cwiseProduct(gdx) + w;
            ds = -rp - gdx;
        };
        auto max_step = [](const Eigen::VectorXd &v, const Eigen::VectorXd &dv) {
            double a = 1.0;
            for (Eigen::Index i = 0; i < v.size(); ++i)
                if (dv(i) < 0.0)
                    a = std::min(a, -v(i) / dv(i));
            return a;
        };

        Eigen::VectorXd dx, dy, ds, dz;
        direction(s.cwiseProduct(z), dx, dy, ds, dz);
        const double a_aff = std::min(max_step(s, ds), max_step(z, dz));
        const double mu_aff = m ? (s + a_aff * ds).dot(z + a_aff * dz) / m : 0.0;
        const double sigma = mu > 0.0 ? std::pow(mu_aff / mu, 3) : 0.0;
        const Eigen::VectorXd rc = s.cwiseProduct(z) + ds.cwiseProduct(dz) - Eigen::VectorXd::Constant(m, sigma * mu);
        direction(rc, dx, dy, ds, dz);
        const double a = std::min(1.0, 0.995 * std::min(max_step(s, ds), max_step(z, dz)));
        x += a * dx;
        if (me)
            y += a * dy;
        s += a * ds;
        z += a * dz;
        s = s.cwiseMax(1e-300);
        z = z.cwiseMax(1e-300);
        if (!x.allFinite() || !z.allFinite())
        {
            x = x_last;
            z = z_last;
            break;
        }
        x_last = x;
        z_last = z;
    }
    res.iterations = it;
    res.x = x;
    res.y = y;
    split_multipliers(st, z, n, res);
    res.objective = objective_of(qp, x);

    if (opt.polish && res.status != QpStatus::Infeasible)
    {
        QpResult p = res;
        ActiveSet as(qp, st);
        if (as.run(x, s, z, p) && p.objective <= res.objective + 1e-9 * (1.0 + std::abs(res.objective)))
        {
            p.status = QpStatus::Optimal;
            res = p;
        }
    }
    qp_residuals(qp, res);
    if (res.status == QpStatus::MaxIter && !feasible_region(qp))
        res.status = QpStatus::Infeasible;
    return res;
}

QpResult solve_qp_linear(const QuadraticProgram &qp, const QpOptions &opt)
{
    QpResult r = qp_interior_point(qp, opt);
    if (r.status == QpStatus::Infeasible)
        throw InfeasibleError("quadratic program is infeasible");
    if (r.status == QpStatus::MaxIter && !(r.stationarity <= 1e-6))
        throw SolverError("quadratic program did not converge");
    return r;
}

} // namespace uavirs
