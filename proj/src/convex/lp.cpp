// uavcovert - covert link planning for UAV-assisted satellite downlinks
// Copyright (C) 2026 The uavcovert authors
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

#include "uavcovert/convex/lp.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace uavcovert::convex
{

void LinearProgram::validate() const
{
    const auto n = num_vars();
    if (n == 0)
        throw std::invalid_argument("linear program has no variables");
    if (a_ineq.rows() != b_ineq.size() || (a_ineq.rows() > 0 && a_ineq.cols() != n))
        throw std::invalid_argument("inequality block has inconsistent dimensions");
    if (a_eq.rows() != b_eq.size() || (a_eq.rows() > 0 && a_eq.cols() != n))
        throw std::invalid_argument("equality block has inconsistent dimensions");
    if (lower.size() != n)
        throw std::invalid_argument("lower bound vector has wrong size");
}

std::string_view to_string(LpStatus s)
{
    switch (s)
    {
    case LpStatus::optimal:
        return "optimal";
    case LpStatus::infeasible:
        return "infeasible";
    case LpStatus::unbounded:
        return "unbounded";
    case LpStatus::iteration_limit:
        return "iteration_limit";
    }
    return "unknown";
}

namespace
{

constexpr int kMaxPivots = 50'000;

// Dense tableau in the standard form  M x' = r, x' >= 0, r >= 0.
// Columns: [structural | slacks | artificials | rhs]; the last row holds reduced costs.
class Tableau
{
  public:
    Tableau(const LinearProgram &lp, double tol) : tol_(tol)
    {
        n_ = lp.num_vars();
        mi_ = lp.a_ineq.rows();
        me_ = lp.a_eq.rows();
        m_ = mi_ + me_;
        cols_ = n_ + mi_ + m_;
        t_ = Eigen::MatrixXd::Zero(m_ + 1, cols_ + 1);
        sign_.assign(static_cast<std::size_t>(m_), 1.0);
        init_col_.assign(static_cast<std::size_t>(m_), 0);
        basis_.assign(static_cast<std::size_t>(m_), 0);

        for (Eigen::Index i = 0; i < m_; ++i)
        {
            const bool is_ineq = i < mi_;
            Eigen::RowVectorXd row = is_ineq ? Eigen::RowVectorXd(lp.a_ineq.row(i)) : Eigen::RowVectorXd(lp.a_eq.row(i - mi_));
            double rhs = is_ineq ? lp.b_ineq(i) : lp.b_eq(i - mi_);
            rhs -= row.dot(lp.lower);

            const double s = rhs < 0.0 ? -1.0 : 1.0;
            sign_[idx(i)] = s;
            t_.block(i, 0, 1, n_) = s * row;
            if (is_ineq)
                t_(i, n_ + i) = s;
            t_(i, cols_) = s * rhs;

            const bool slack_basis = is_ineq && s > 0.0;
            init_col_[idx(i)] = slack_basis ? n_ + i : n_ + mi_ + i;
            if (!slack_basis)
                t_(i, n_ + mi_ + i) = 1.0;
            basis_[idx(i)] = init_col_[idx(i)];
        }
    }

    bool is_artificial(Eigen::Index j) const { return j >= n_ + mi_ && j < cols_; }

    void set_costs(const Eigen::VectorXd &cost)
    {
        cost_ = cost;
        t_.row(m_).head(cols_) = cost.transpose();
        t_(m_, cols_) = 0.0;
        for (Eigen::Index i = 0; i < m_; ++i)
        {
            const double cb = cost(basis_[idx(i)]);
            if (cb != 0.0)
                t_.row(m_) -= cb * t_.row(i);
        }
    }

    // Returns optimal / unbounded / iteration_limit.
    LpStatus run(int &pivots)
    {
        while (true)
        {
            if (pivots >= kMaxPivots)
                return LpStatus::iteration_limit;

            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < cols_; ++j)
            {
                if (is_artificial(j))
                    continue;
                if (t_(m_, j) < -tol_)
                {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return LpStatus::optimal;

            Eigen::Index leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < m_; ++i)
            {
                const double a = t_(i, enter);
                if (a <= tol_)
                    continue;
                const double ratio = t_(i, cols_) / a;
                if (leave < 0)
                {
                    best = ratio;
                    leave = i;
                    continue;
                }
                const double slack = tol_ * (1.0 + std::abs(best));
                if (ratio < best - slack || (ratio <= best + slack && basis_[idx(i)] < basis_[idx(leave)]))
                {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0)
                return LpStatus::unbounded;

            pivot(leave, enter);
            ++pivots;
        }
    }

    void pivot(Eigen::Index r, Eigen::Index c)
    {
        t_.row(r) /= t_(r, c);
        for (Eigen::Index i = 0; i <= m_; ++i)
        {
            if (i == r)
                continue;
            const double f = t_(i, c);
            if (f != 0.0)
                t_.row(i) -= f * t_.row(r);
        }
        basis_[idx(r)] = c;
    }

    // Pivots zero-level artificials out of the basis where a structural/slack pivot exists.
    void expel_artificials()
    {
        for (Eigen::Index i = 0; i < m_; ++i)
        {
            if (!is_artificial(basis_[idx(i)]))
                continue;
            for (Eigen::Index j = 0; j < n_ + mi_; ++j)
            {
                if (std::abs(t_(i, j)) > tol_)
                {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    double objective_value() const { return -t_(m_, cols_); }

    Eigen::VectorXd structural_solution() const
    {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
        for (Eigen::Index i = 0; i < m_; ++i)
            if (basis_[idx(i)] < n_)
                x(basis_[idx(i)]) = t_(i, cols_);
        return x;
    }

    // Row multipliers of the original constraints, -sign_i * pi_i with pi = c_B^T B^-1.
    void row_multipliers(Eigen::VectorXd &ineq, Eigen::VectorXd &eq) const
    {
        ineq.resize(mi_);
        eq.resize(me_);
        for (Eigen::Index i = 0; i < m_; ++i)
        {
            const Eigen::Index col = init_col_[idx(i)];
            const double pi = cost_(col) - t_(m_, col);
            const double v = -sign_[idx(i)] * pi;
            if (i < mi_)
                ineq(i) = v;
            else
                eq(i - mi_) = v;
        }
    }

    Eigen::Index rows() const { return m_; }
    Eigen::Index cols() const { return cols_; }
    Eigen::Index structural() const { return n_; }
    Eigen::Index artificial_begin() const { return n_ + mi_; }
    double rhs_norm() const { return m_ > 0 ? t_.col(cols_).head(m_).cwiseAbs().maxCoeff() : 0.0; }

  private:
    static std::size_t idx(Eigen::Index i) { return static_cast<std::size_t>(i); }

    double tol_;
    Eigen::Index n_ = 0, mi_ = 0, me_ = 0, m_ = 0, cols_ = 0;
    Eigen::MatrixXd t_;
    Eigen::VectorXd cost_;
    std::vector<double> sign_;
    std::vector<Eigen::Index> init_col_;
    std::vector<Eigen::Index> basis_;
};

} // namespace

LpResult solve_lp(const LinearProgram &lp, double tol)
{
    lp.validate();
    LpResult res;
    Tableau tab(lp, tol);

    // Phase 1: minimize the sum of artificials.
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(tab.cols());
    bool any_artificial = false;
    for (Eigen::Index j = tab.artificial_begin(); j < tab.cols(); ++j)
    {
        // Artificials of rows that start on a slack stay zero columns and never enter.
        phase1(j) = 1.0;
        any_artificial = true;
    }
    if (any_artificial)
    {
        tab.set_costs(phase1);
        const LpStatus s1 = tab.run(res.iterations);
        if (s1 == LpStatus::iteration_limit)
        {
            res.status = s1;
            return res;
        }
        if (tab.objective_value() > tol * std::max(1.0, tab.rhs_norm()))
        {
            res.status = LpStatus::infeasible;
            tab.row_multipliers(res.dual_ineq, res.dual_eq);
            return res;
        }
        tab.expel_artificials();
    }

    // Phase 2: minimize -c^T x'.
    Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(tab.cols());
    phase2.head(tab.structural()) = -lp.objective;
    tab.set_costs(phase2);
    res.status = tab.run(res.iterations);
    if (res.status != LpStatus::optimal)
        return res;

    res.x = lp.lower + tab.structural_solution();
    res.objective = lp.objective.dot(res.x);
    tab.row_multipliers(res.dual_ineq, res.dual_eq);
    return res;
}

} // namespace uavcovert::convex
