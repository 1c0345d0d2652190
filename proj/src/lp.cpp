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

#include "uavirs/lp.hpp"
#include "uavirs/errors.hpp"

#include <cmath>
#include <vector>

namespace uavirs
{

namespace
{

enum class RowKind
{
    Le,
    Ge,
    Eq
};

// Column transform x_j = shift + sign * x'_j, or x_j = x'_p - x'_m when free.
struct ColumnMap
{
    int plus = -1;
    int minus = -1;
    double shift = 0.0;
    double sign = 1.0;
};

class Tableau
{
public:
    Tableau(const Eigen::MatrixXd &A, const Eigen::VectorXd &b, const std::vector<RowKind> &kinds, double tol)
        : tol_(tol)
    {
        const int m = static_cast<int>(A.rows());
        const int n = static_cast<int>(A.cols());
        int slack = 0, art = 0;
        for (RowKind k : kinds)
        {
            if (k != RowKind::Eq)
                ++slack;
            if (k != RowKind::Le)
                ++art;
        }
        n_struct_ = n;
        n_art_begin_ = n + slack;
        cols_ = n + slack + art;
        T_ = Eigen::MatrixXd::Zero(m, cols_ + 1);
        basis_.assign(m, -1);
        int s_col = n, a_col = n_art_begin_;
        for (int i = 0; i < m; ++i)
        {
            T_.row(i).head(n) = A.row(i);
            T_(i, cols_) = b(i);
            if (kinds[i] == RowKind::Le)
            {
                T_(i, s_col) = 1.0;
                basis_[i] = s_col++;
            }
            else
            {
                if (kinds[i] == RowKind::Ge)
                    T_(i, s_col++) = -1.0;
                T_(i, a_col) = 1.0;
                basis_[i] = a_col++;
            }
        }
    }

    bool has_artificials() const { return n_art_begin_ < cols_; }

    // Minimizes cost'x over the current tableau. Returns false when unbounded.
    bool minimize(const Eigen::VectorXd &cost, bool allow_artificial)
    {
        const int m = static_cast<int>(T_.rows());
        const int limit = allow_artificial ? cols_ : n_art_begin_;
        for (int guard = 0; guard < 50000; ++guard)
        {
            Eigen::VectorXd red = cost.head(cols_);
            for (int i = 0; i < m; ++i)
                red -= cost(basis_[i]) * T_.row(i).head(cols_).transpose();
            int enter = -1;
            for (int j = 0; j < limit; ++j)
                if (red(j) < -tol_ * (1.0 + std::abs(cost(j))))
                {
                    enter = j;
                    break;
                }
            if (enter < 0)
                return true;
            int leave = -1;
            double best = 0.0;
            for (int i = 0; i < m; ++i)
            {
                const double a = T_(i, enter);
                if (a <= tol_)
                    continue;
                const double ratio = T_(i, cols_) / a;
                if (leave < 0 || ratio < best - tol_ ||
                    (std::abs(ratio - best) <= tol_ && basis_[i] < basis_[leave]))
                {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, enter);
        }
        throw SolverError("simplex iteration limit reached");
    }

    // Moves artificial variables out of the basis after phase one.
    void purge_artificials()
    {
        for (int i = 0; i < static_cast<int>(T_.rows()); ++i)
        {
            if (basis_[i] < n_art_begin_)
                continue;
            for (int j = 0; j < n_art_begin_; ++j)
                if (std::abs(T_(i, j)) > 1e3 * tol_)
                {
                    pivot(i, j);
                    break;
                }
        }
    }

    Eigen::VectorXd solution() const
    {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(cols_);
        for (int i = 0; i < static_cast<int>(T_.rows()); ++i)
            x(basis_[i]) = T_(i, cols_);
        return x;
    }

    int columns() const { return cols_; }
    int art_begin() const { return n_art_begin_; }
    int pivots() const { return pivots_; }

private:
    void pivot(int r, int c)
    {
        T_.row(r) /= T_(r, c);
        for (int i = 0; i < static_cast<int>(T_.rows()); ++i)
            if (i != r && T_(i, c) != 0.0)
                T_.row(i) -= T_(i, c) * T_.row(r);
        basis_[r] = c;
        ++pivots_;
    }

    double tol_;
    int n_struct_ = 0;
    int n_art_begin_ = 0;
    int cols_ = 0;
    int pivots_ = 0;
    Eigen::MatrixXd T_;
    std::vector<int> basis_;
};

} // namespace

LpResult simplex(const LinearProgram &lp, double tol)
{
    const int n = static_cast<int>(lp.c.size());
    const Eigen::Index m_ub = lp.A_ub.rows();
    const Eigen::Index m_eq = lp.A_eq.rows();
    if ((m_ub > 0 && (lp.A_ub.cols() != n || lp.b_ub.size() != m_ub)) ||
        (m_eq > 0 && (lp.A_eq.cols() != n || lp.b_eq.size() != m_eq)) ||
        (lp.lower.size() != 0 && lp.lower.size() != n) || (lp.upper.size() != 0 && lp.upper.size() != n))
        throw DimensionMismatch("linear program dimensions are inconsistent");

    const Eigen::VectorXd lo = lp.lower.size() ? lp.lower : Eigen::VectorXd::Zero(n);
    const Eigen::VectorXd hi = lp.upper.size() ? lp.upper : Eigen::VectorXd::Constant(n, lp_inf);

    // Map every variable onto nonnegative columns.
    std::vector<ColumnMap> map(n);
    int cols = 0;
    std::vector<int> ub_rows; // variables needing an explicit upper-bound row
    for (int j = 0; j < n; ++j)
    {
        ColumnMap &cm = map[j];
        if (std::isfinite(lo(j)))
        {
            cm.plus = cols++;
            cm.shift = lo(j);
            if (std::isfinite(hi(j)))
                ub_rows.push_back(j);
        }
        else if (std::isfinite(hi(j)))
        {
            cm.plus = cols++;
            cm.shift = hi(j);
            cm.sign = -1.0;
        }
        else
        {
            cm.plus = cols++;
            cm.minus = cols++;
        }
    }

    auto transform_row = [&](const Eigen::RowVectorXd &row, double rhs, Eigen::RowVectorXd &out, double &out_rhs) {
        out = Eigen::RowVectorXd::Zero(cols);
        out_rhs = rhs;
        for (int j = 0; j < n; ++j)
        {
            const ColumnMap &cm = map[j];
            out_rhs -= row(j) * cm.shift;
            out(cm.plus) += cm.sign * row(j);
            if (cm.minus >= 0)
                out(cm.minus) -= row(j);
        }
    };

    const int rows = static_cast<int>(m_ub + m_eq) + static_cast<int>(ub_rows.size());
    Eigen::MatrixXd A(rows, cols);
    Eigen::VectorXd b(rows);
    std::vector<RowKind> kinds(rows);
    int r = 0;
    for (Eigen::Index i = 0; i < m_ub; ++i, ++r)
    {
        Eigen::RowVectorXd row;
        double rhs;
        transform_row(lp.A_ub.row(i), lp.b_ub(i), row, rhs);
        A.row(r) = row;
        b(r) = rhs;
        kinds[r] = RowKind::Le;
    }
    for (Eigen::Index i = 0; i < m_eq; ++i, ++r)
    {
        Eigen::RowVectorXd row;
        double rhs;
        transform_row(lp.A_eq.row(i), lp.b_eq(i), row, rhs);
        A.row(r) = row;
        b(r) = rhs;
        kinds[r] = RowKind::Eq;
    }
    for (int j : ub_rows)
    {
        A.row(r).setZero();
        A(r, map[j].plus) = 1.0;
        b(r) = hi(j) - lo(j);
        kinds[r] = RowKind::Le;
        ++r;
    }
    for (int i = 0; i < rows; ++i)
        if (b(i) < 0.0)
        {
            A.row(i) *= -1.0;
            b(i) = -b(i);
            if (kinds[i] == RowKind::Le)
                kinds[i] = RowKind::Ge;
            else if (kinds[i] == RowKind::Ge)
                kinds[i] = RowKind::Le;
        }

    Tableau tab(A, b, kinds, tol);
    LpResult res;
    if (tab.has_artificials())
    {
        Eigen::VectorXd cost = Eigen::VectorXd::Zero(tab.columns());
        cost.tail(tab.columns() - tab.art_begin()).setOnes();
        tab.minimize(cost, true);
        const Eigen::VectorXd x1 = tab.solution();
        const double infeas = x1.tail(tab.columns() - tab.art_begin()).sum();
        if (infeas > tol * (1.0 + b.lpNorm<Eigen::Infinity>()))
        {
            res.status = LpStatus::Infeasible;
            res.pivots = tab.pivots();
            return res;
        }
        tab.purge_artificials();
    }

    Eigen::VectorXd cost = Eigen::VectorXd::Zero(tab.columns());
    const double sense = lp.maximize ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j)
    {
        cost(map[j].plus) += sense * map[j].sign * lp.c(j);
        if (map[j].minus >= 0)
            cost(map[j].minus) -= sense * lp.c(j);
    }
    if (!tab.minimize(cost, false))
    {
        res.status = LpStatus::Unbounded;
        res.pivots = tab.pivots();
        return res;
    }
    const Eigen::VectorXd xs = tab.solution();
    res.x.resize(n);
    for (int j = 0; j < n; ++j)
    {
        const ColumnMap &cm = map[j];
        res.x(j) = cm.shift + cm.sign * xs(cm.plus) - (cm.minus >= 0 ? xs(cm.minus) : 0.0);
    }
    res.objective = lp.c.dot(res.x);
    res.pivots = tab.pivots();
    return res;
}

LpResult solve_lp(const LinearProgram &lp, double tol)
{
    LpResult r = simplex(lp, tol);
    if (r.status == LpStatus::Infeasible)
        throw InfeasibleLP("linear program is infeasible");
    if (r.status == LpStatus::Unbounded)
        throw UnboundedLP("linear program is unbounded");
    return r;
}

namespace
{

bool slot_feasible(const Eigen::VectorXd &a, const Eigen::VectorXd &r, double R_th, double tol)
{
    if ((a.array() < -tol).any() || (a.array() > 1.0 + tol).any())
        return false;
    if (a.sum() > 1.0 + tol)
        return false;
    return r.dot(a) >= R_th - tol * (1.0 + std::abs(R_th));
}

template <class Visit>
void enumerate_slot_vertices(const Eigen::VectorXd &r, double R_th, double tol, Visit &&visit)
{
    const int K = static_cast<int>(r.size());
    Eigen::VectorXd a = Eigen::VectorXd::Zero(K);
    if (slot_feasible(a, r, R_th, tol))
        visit(a);
    for (int k = 0; k < K; ++k)
    {
        a.setZero();
        a(k) = 1.0;
        if (slot_feasible(a, r, R_th, tol))
            visit(a);
    }
    for (int k = 0; k < K; ++k)
    {
        if (r(k) <= 0.0)
            continue;
        const double t = R_th / r(k);
        if (!(t > tol && t < 1.0 - tol))
            continue;
        a.setZero();
        a(k) = t;
        if (slot_feasible(a, r, R_th, tol))
            visit(a);
    }
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j)
        {
            const double den = r(i) - r(j);
            if (std::abs(den) <= tol * (1.0 + std::abs(r(i))))
                continue;
            const double ai = (R_th - r(j)) / den;
            if (!(ai > tol && ai < 1.0 - tol))
                continue;
            a.setZero();
            a(i) = ai;
            a(j) = 1.0 - ai;
            if (slot_feasible(a, r, R_th, tol))
                visit(a);
        }
}

} // namespace

bool solve_slot_lp(const Eigen::VectorXd &u, const Eigen::VectorXd &r, double R_th, Eigen::VectorXd &a, double tol)
{
    if (u.size() != r.size())
        throw DimensionMismatch("utility and rate vectors differ in length");
    bool found = false;
    double best = 0.0;
    enumerate_slot_vertices(r, R_th, tol, [&](const Eigen::VectorXd &v) {
        const double val = u.dot(v);
        if (!found || val > best + 1e-12 * (1.0 + std::abs(best)))
        {
            found = true;
            best = val;
            a = v;
        }
    });
    return found;
}

Eigen::MatrixXd slot_lp_vertices(const Eigen::VectorXd &r, double R_th, double tol)
{
    std::vector<Eigen::VectorXd> vs;
    enumerate_slot_vertices(r, R_th, tol, [&](const Eigen::VectorXd &v) { vs.push_back(v); });
    Eigen::MatrixXd out(r.size(), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        out.col(static_cast<Eigen::Index>(i)) = vs[i];
    return out;
}

} // namespace uavirs
