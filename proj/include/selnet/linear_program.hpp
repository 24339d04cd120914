#pragma once

#include <cstddef>
#include <vector>

#include "selnet/error.hpp"
#include "selnet/rational.hpp"

namespace selnet {

// Exact two-phase primal simplex over the rationals with Bland's rule, for
// the small dense programs the geometric predicates generate. Standard form:
// minimize c.x subject to A x = b, x >= 0.
class SimplexSolver {
public:
    enum class Status { Optimal, Infeasible, Unbounded };

    struct Result {
        Status status;
        Rational objective;
        std::vector<Rational> x;
    };

    static Result minimize(const std::vector<std::vector<Rational>>& A,
                           const std::vector<Rational>& b,
                           const std::vector<Rational>& c) {
        SimplexSolver s(A, b, c);
        return s.run();
    }

private:
    SimplexSolver(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                  const std::vector<Rational>& c)
        : m_(A.size()), n_(c.size()), cost_(c) {
        if (b.size() != m_) throw Error(ErrorCode::SizeMismatch, "lp rhs size");
        tableau_.assign(m_, std::vector<Rational>(n_ + m_ + 1, Rational(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (A[i].size() != n_) throw Error(ErrorCode::SizeMismatch, "lp row size");
            bool flip = sgn(b[i]) < 0;
            for (std::size_t j = 0; j < n_; ++j) tableau_[i][j] = flip ? -A[i][j] : A[i][j];
            tableau_[i][n_ + i] = 1;
            tableau_[i].back() = flip ? -b[i] : b[i];
            basis_[i] = static_cast<int>(n_ + i);
        }
    }

    Result run() {
        // Phase 1: minimize the sum of artificials.
        std::vector<Rational> phase1_cost(n_ + m_, Rational(0));
        for (std::size_t j = n_; j < n_ + m_; ++j) phase1_cost[j] = 1;
        price_out(phase1_cost, n_ + m_);
        if (!iterate(n_ + m_)) throw Error(ErrorCode::InternalFailure, "phase-1 unbounded");
        if (sgn(objective_) != 0) return {Status::Infeasible, Rational(0), {}};
        drive_out_artificials();

        std::vector<Rational> phase2_cost = cost_;
        phase2_cost.resize(n_ + m_, Rational(0));
        price_out(phase2_cost, n_);
        if (!iterate(n_)) return {Status::Unbounded, Rational(0), {}};

        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= 0 && basis_[i] < static_cast<int>(n_)) x[basis_[i]] = tableau_[i].back();
        return {Status::Optimal, objective_, std::move(x)};
    }

    void price_out(const std::vector<Rational>& cost, std::size_t active_cols) {
        reduced_.assign(n_ + m_, Rational(0));
        for (std::size_t j = 0; j < active_cols; ++j) reduced_[j] = cost[j];
        objective_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < 0) continue;
            const Rational& cb = cost[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j < active_cols; ++j) reduced_[j] -= cb * tableau_[i][j];
            objective_ += cb * tableau_[i].back();
        }
    }

    // Bland's rule on both the entering and the leaving choice guarantees
    // termination; exactness makes zero tests reliable.
    bool iterate(std::size_t active_cols) {
        for (;;) {
            int enter = -1;
            for (std::size_t j = 0; j < active_cols; ++j) {
                if (sgn(reduced_[j]) < 0) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(tableau_[i][enter]) <= 0) continue;
                Rational ratio = tableau_[i].back() / tableau_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& pr = tableau_[row];
        Rational inv = 1 / pr[col];
        for (auto& v : pr) v *= inv;
        pr[col] = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || sgn(tableau_[i][col]) == 0) continue;
            Rational f = tableau_[i][col];
            auto& ri = tableau_[i];
            for (std::size_t j = 0; j < ri.size(); ++j) ri[j] -= f * pr[j];
            ri[col] = 0;
        }
        if (sgn(reduced_[col]) != 0) {
            Rational f = reduced_[col];
            for (std::size_t j = 0; j < reduced_.size(); ++j) reduced_[j] -= f * pr[j];
            objective_ += f * pr.back();
            reduced_[col] = 0;
        }
        basis_[row] = static_cast<int>(col);
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < static_cast<int>(n_)) continue;
            std::size_t j = 0;
            for (; j < n_; ++j)
                if (sgn(tableau_[i][j]) != 0) break;
            if (j < n_) {
                pivot(i, j);
            } else {
                // Redundant constraint; the artificial stays basic at zero and
                // its row can never change any original variable again.
                basis_[i] = -1;
                for (auto& v : tableau_[i]) v = 0;
            }
        }
    }

    std::size_t m_, n_;
    std::vector<Rational> cost_;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> reduced_;
    std::vector<int> basis_;
    Rational objective_;
};

} // namespace selnet
