#pragma once

#include "symtoric/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace symtoric {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rat value;             // optimal objective (minimization), when optimal
    std::vector<Rat> x;    // optimal point, when optimal
    std::vector<Rat> farkas;  // y with y^T A <= 0, y^T b > 0, when infeasible
};

/// Exact two-phase primal simplex with Bland's anti-cycling rule.
///   minimize c^T x  subject to  A x = b, x >= 0.
/// All arithmetic is rational, so the answer is exact and deterministic.
class SimplexSolver {
public:
    LpResult solve(const RatMatrix& a, const std::vector<Rat>& b, const std::vector<Rat>& c) {
        if (b.size() != a.rows() || c.size() != a.cols())
            throw input_error("lp: dimension mismatch");
        m_ = a.rows();
        n_ = a.cols();

        // tableau columns: n structural, m artificial, 1 rhs
        tab_ = RatMatrix(m_, n_ + m_ + 1);
        for (std::size_t i = 0; i < m_; ++i) {
            bool neg = b[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) tab_(i, j) = neg ? Rat(-a(i, j)) : a(i, j);
            tab_(i, n_ + i) = 1;
            tab_(i, n_ + m_) = neg ? Rat(-b[i]) : b[i];
        }
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;

        LpResult res;

        // phase 1: minimize the sum of artificials
        std::vector<Rat> phase1(n_ + m_);
        for (std::size_t j = 0; j < m_; ++j) phase1[n_ + j] = 1;
        run(phase1, n_ + m_);
        Rat art_sum = objective(phase1);
        if (art_sum != 0) {
            res.status = LpStatus::infeasible;
            // y^T = c_B^T B^{-1}; the artificial block of the tableau is B^{-1}
            // (up to the sign flips applied to rows with b_i < 0)
            res.farkas.assign(m_, Rat(0));
            for (std::size_t i = 0; i < m_; ++i) {
                Rat yi = 0;
                for (std::size_t r = 0; r < m_; ++r)
                    if (phase1[basis_[r]] != 0) yi += phase1[basis_[r]] * tab_(r, n_ + i);
                res.farkas[i] = b[i] < 0 ? Rat(-yi) : yi;
            }
            return res;
        }

        // drive any artificial still basic (at zero) out of the basis
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            std::size_t j = 0;
            while (j < n_ && tab_(r, j) == 0) ++j;
            if (j < n_)
                pivot(r, j);
            else
                redundant_.push_back(r);  // zero row, constraint was dependent
        }

        // phase 2 on the original objective, artificial columns barred
        std::vector<Rat> cost(n_ + m_);
        for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
        bool bounded = run(cost, n_);
        if (!bounded) {
            res.status = LpStatus::unbounded;
            return res;
        }
        res.status = LpStatus::optimal;
        res.x.assign(n_, Rat(0));
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < n_) res.x[basis_[r]] = tab_(r, n_ + m_);
        res.value = objective(cost);
        return res;
    }

private:
    Rat objective(const std::vector<Rat>& cost) const {
        Rat v = 0;
        for (std::size_t r = 0; r < m_; ++r)
            if (cost[basis_[r]] != 0) v += cost[basis_[r]] * tab_(r, n_ + m_);
        return v;
    }

    // reduced cost of column j: c_j - c_B^T B^{-1} A_j
    Rat reduced_cost(const std::vector<Rat>& cost, std::size_t j) const {
        Rat v = cost[j];
        for (std::size_t r = 0; r < m_; ++r)
            if (cost[basis_[r]] != 0) v -= cost[basis_[r]] * tab_(r, j);
        return v;
    }

    void pivot(std::size_t row, std::size_t col) {
        Rat inv = Rat(1) / tab_(row, col);
        if (inv != 1) tab_.scale_row(row, inv);
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row) continue;
            Rat f = tab_(i, col);
            if (f != 0) tab_.add_row(i, row, Rat(-f));
        }
        basis_[row] = col;
    }

    bool is_redundant(std::size_t r) const {
        for (auto rr : redundant_)
            if (rr == r) return true;
        return false;
    }

    // Bland's rule iteration until optimal (true) or unbounded (false).
    // Columns with index >= limit are not eligible to enter.
    bool run(const std::vector<Rat>& cost, std::size_t limit) {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                bool basic = false;
                for (std::size_t r = 0; r < m_; ++r)
                    if (basis_[r] == j) { basic = true; break; }
                if (basic) continue;
                if (reduced_cost(cost, j) < 0) { enter = j; break; }
            }
            if (enter == limit) return true;

            std::size_t leave = m_;
            Rat best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (is_redundant(r)) continue;
                if (tab_(r, enter) <= 0) continue;
                Rat ratio = tab_(r, n_ + m_) / tab_(r, enter);
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    std::size_t m_ = 0, n_ = 0;
    RatMatrix tab_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> redundant_;
};

inline LpResult lp_solve(const RatMatrix& a, const std::vector<Rat>& b, const std::vector<Rat>& c) {
    return SimplexSolver().solve(a, b, c);
}

/// Feasibility of {x >= 0 : A x = b} with a point or a Farkas separator.
inline LpResult lp_feasible(const RatMatrix& a, const std::vector<Rat>& b) {
    return lp_solve(a, b, std::vector<Rat>(a.cols()));
}

/// Exact min (or max) of coordinate x_k over {x >= 0 : A x = b}.
inline LpResult lp_extremize_coord(const RatMatrix& a, const std::vector<Rat>& b, std::size_t k,
                                   bool maximize) {
    std::vector<Rat> c(a.cols());
    c[k] = maximize ? -1 : 1;
    LpResult r = lp_solve(a, b, c);
    if (r.status == LpStatus::optimal && maximize) r.value = -r.value;
    return r;
}

/// A rational polyhedral cone given by its generators (not required to be
/// extreme or distinct).
struct RationalCone {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<Rat>> generators;  // each of length ambient_dim
};

struct ConeMembership {
    bool contains = false;
    std::vector<Rat> witness;    // coefficients >= 0 with sum_i w_i g_i = v
    std::vector<Rat> separator;  // y with <y, g_i> <= 0 for all i, <y, v> > 0
};

/// Exact test whether v lies in the cone spanned by the generators, with a
/// nonnegative-combination witness on success and a separating functional on
/// failure (both exact, both checkable by the caller).
inline ConeMembership cone_contains(const RationalCone& cone, const std::vector<Rat>& v) {
    if (v.size() != cone.ambient_dim) throw input_error("cone_contains: dimension mismatch");
    for (const auto& g : cone.generators)
        if (g.size() != cone.ambient_dim)
            throw input_error("cone_contains: generator dimension mismatch");

    std::size_t d = cone.ambient_dim, k = cone.generators.size();
    RatMatrix a(d, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < d; ++i) a(i, j) = cone.generators[j][i];
    LpResult r = lp_feasible(a, v);
    ConeMembership out;
    if (r.status == LpStatus::optimal) {
        out.contains = true;
        out.witness = std::move(r.x);
    } else {
        out.contains = false;
        out.separator = std::move(r.farkas);
    }
    return out;
}

/// Whether v lies in the relative interior of the cone spanned by the
/// generators, i.e. v = sum_i lambda_i g_i with every lambda_i > 0.
/// (For an empty generator list the cone is {0} and relint{0} = {0}.)
inline bool relint_cone_contains(const RationalCone& cone, const std::vector<Rat>& v) {
    if (v.size() != cone.ambient_dim) throw input_error("relint_cone_contains: dimension mismatch");
    std::size_t d = cone.ambient_dim, k = cone.generators.size();
    if (k == 0) {
        for (const auto& q : v)
            if (q != 0) return false;
        return true;
    }
    // vars: lambda (k), t (1), slack s (k); maximize t subject to
    //   sum lambda_i g_i = v,  lambda_i - t - s_i = 0
    std::size_t nv = 2 * k + 1;
    RatMatrix a(d + k, nv);
    std::vector<Rat> b(d + k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < d; ++i) a(i, j) = cone.generators[j][i];
    for (std::size_t i = 0; i < d; ++i) b[i] = v[i];
    for (std::size_t j = 0; j < k; ++j) {
        a(d + j, j) = 1;
        a(d + j, k) = -1;
        a(d + j, k + 1 + j) = -1;
    }
    std::vector<Rat> c(nv);
    c[k] = -1;  // maximize t
    LpResult r = lp_solve(a, b, c);
    if (r.status == LpStatus::unbounded) return true;
    return r.status == LpStatus::optimal && r.value < 0;
}

}  // namespace symtoric
