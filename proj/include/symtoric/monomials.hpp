#pragma once

#include "symtoric/cox.hpp"
#include "symtoric/fan.hpp"
#include "symtoric/simplex.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace symtoric {

/// A torus-invariant monomial x^{I'} y^I (scheme R) or x^{I'} w^I
/// (scheme Rprime). Both exponent vectors are indexed by ray; in scheme R
/// the fiber exponents are supported on sigma1.
struct InvariantMonomial {
    std::vector<int> s_exp;
    std::vector<int> t_exp;

    bool operator==(const InvariantMonomial& o) const = default;
    bool operator<(const InvariantMonomial& o) const {
        if (t_exp != o.t_exp) return t_exp < o.t_exp;
        return s_exp < o.s_exp;
    }

    int fiber_degree() const {
        int d = 0;
        for (int e : t_exp) d += e;
        return d;
    }
};

namespace detail {

/// Transport of fiber exponents to antipodal rays: out[tau] = in[-tau] when
/// -tau is a ray, else 0.
inline std::vector<int> antipodal_transport(const SignedRayPairing& pairing,
                                            const std::vector<int>& t_exp) {
    std::vector<int> out(t_exp.size(), 0);
    for (std::size_t r = 0; r < t_exp.size(); ++r)
        if (pairing.opposite[r]) out[r] = t_exp[*pairing.opposite[r]];
    return out;
}

}  // namespace detail

/// The class-balance vector of a monomial: the element of Z^N whose image
/// under A must vanish for invariance. Scheme R: I' - I - cI (with cI the
/// antipodal transport of I); scheme Rprime: I' - I.
inline std::vector<Int> balance_vector(const SignedRayPairing& pairing, PresentationKind scheme,
                                       const std::vector<int>& s_exp,
                                       const std::vector<int>& t_exp) {
    std::vector<Int> v(s_exp.size());
    for (std::size_t r = 0; r < s_exp.size(); ++r) v[r] = s_exp[r] - t_exp[r];
    if (scheme == PresentationKind::R) {
        std::vector<int> c = detail::antipodal_transport(pairing, t_exp);
        for (std::size_t r = 0; r < v.size(); ++r) v[r] -= c[r];
    } else if (scheme != PresentationKind::Rprime) {
        throw input_error("balance_vector: scheme must be R or Rprime");
    }
    return v;
}

/// Invariance predicate via the kernel of A: the balance vector maps to zero.
inline bool invariant_by_kernel(const ExactSequenceData& esd, const SignedRayPairing& pairing,
                                PresentationKind scheme, const std::vector<int>& s_exp,
                                const std::vector<int>& t_exp) {
    std::vector<Int> image = esd.a.apply(balance_vector(pairing, scheme, s_exp, t_exp));
    for (const Int& x : image)
        if (x != 0) return false;
    return true;
}

/// Invariance predicate via bidegrees: the total divisor class, accumulated
/// variable by variable from deg x_rho = a_rho and deg of the fiber variable
/// at rho (-a_rho - a_{-rho} in scheme R, -a_rho in scheme Rprime), vanishes.
inline bool invariant_by_weights(const ExactSequenceData& esd, const SignedRayPairing& pairing,
                                 PresentationKind scheme, const std::vector<int>& s_exp,
                                 const std::vector<int>& t_exp) {
    if (scheme != PresentationKind::R && scheme != PresentationKind::Rprime)
        throw input_error("invariant_by_weights: scheme must be R or Rprime");
    std::vector<Int> total(esd.pic_rank(), Int(0));
    for (std::size_t r = 0; r < s_exp.size(); ++r) {
        if (s_exp[r])
            for (std::size_t j = 0; j < total.size(); ++j) total[j] += s_exp[r] * esd.a(j, r);
        if (t_exp[r]) {
            for (std::size_t j = 0; j < total.size(); ++j) total[j] -= t_exp[r] * esd.a(j, r);
            if (scheme == PresentationKind::R && pairing.opposite[r]) {
                std::size_t opp = *pairing.opposite[r];
                for (std::size_t j = 0; j < total.size(); ++j) total[j] -= t_exp[r] * esd.a(j, opp);
            }
        }
    }
    for (const Int& x : total)
        if (x != 0) return false;
    return true;
}

/// Enumerates invariant monomials of a given fiber degree. The base-exponent
/// fibers {I' >= 0 : A I' = c} are finite because the kernel of A meets the
/// nonnegative orthant only at zero; a strictly positive functional in the
/// row space of A certifies this and bounds the search. Fiber solution sets
/// are memoized per class (thread safe, shared between schemes).
class MonomialEnumerator {
public:
    MonomialEnumerator(ExactSequenceData esd, SignedRayPairing pairing)
        : esd_(std::move(esd)), pairing_(std::move(pairing)) {
        init_positive_functional();
        init_nonpivot_block();
    }

    const ExactSequenceData& exact_sequence() const { return esd_; }
    const SignedRayPairing& pairing() const { return pairing_; }

    /// All I' >= 0 with A I' = cls, in lexicographic order.
    std::shared_ptr<const std::vector<std::vector<int>>> fiber_solutions(
        const std::vector<Int>& cls) {
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(cls);
            if (it != cache_.end()) return it->second;
        }
        auto computed = std::make_shared<const std::vector<std::vector<int>>>(solve_fiber(cls));
        std::unique_lock lock(mutex_);
        auto [it, inserted] = cache_.emplace(cls, computed);
        return it->second;  // keep the first insertion if another thread won
    }

    /// All invariant monomials of the given fiber degree, grouped by fiber
    /// exponent vector (compositions in lexicographic-by-position order,
    /// largest leading exponent first), base exponents in lexicographic
    /// order within each group.
    std::vector<InvariantMonomial> of_degree(PresentationKind scheme, int degree) {
        if (scheme != PresentationKind::R && scheme != PresentationKind::Rprime)
            throw input_error("of_degree: scheme must be R or Rprime");
        if (degree < 0) throw input_error("of_degree: negative degree");
        std::size_t bign = esd_.ray_count();
        const std::vector<std::size_t>* t_set = nullptr;
        std::vector<std::size_t> all_rays;
        if (scheme == PresentationKind::R) {
            t_set = &pairing_.sigma1;
        } else {
            all_rays.resize(bign);
            for (std::size_t r = 0; r < bign; ++r) all_rays[r] = r;
            t_set = &all_rays;
        }

        std::vector<InvariantMonomial> out;
        std::vector<int> t_exp(bign, 0);
        enumerate_compositions(*t_set, 0, degree, t_exp, [&](const std::vector<int>& t) {
            std::vector<Int> cls(esd_.pic_rank(), Int(0));
            std::vector<int> weights = t;
            if (scheme == PresentationKind::R) {
                std::vector<int> c = detail::antipodal_transport(pairing_, t);
                for (std::size_t r = 0; r < bign; ++r) weights[r] += c[r];
            }
            for (std::size_t r = 0; r < bign; ++r)
                if (weights[r])
                    for (std::size_t j = 0; j < cls.size(); ++j) cls[j] += weights[r] * esd_.a(j, r);
            auto sols = fiber_solutions(cls);
            for (const auto& s : *sols) out.push_back({s, t});
        });
        return out;
    }

private:
    ExactSequenceData esd_;
    SignedRayPairing pairing_;
    std::vector<Rat> positive_functional_;  // pi = y^t A, entrywise >= 1
    std::vector<Rat> functional_multiplier_;  // y
    std::vector<std::size_t> nonpivots_;
    IntMatrix nonpivot_inverse_;  // inverse of A restricted to non-pivot columns
    std::map<std::vector<Int>, std::shared_ptr<const std::vector<std::vector<int>>>> cache_;
    mutable std::shared_mutex mutex_;

    void init_positive_functional() {
        std::size_t bign = esd_.ray_count();
        std::size_t k = esd_.pic_rank();
        // find y with y^t A >= 1 entrywise; variables y split into u - v
        RatMatrix cons(bign, 2 * k);
        std::vector<Rat> rhs(bign, Rat(1));
        for (std::size_t r = 0; r < bign; ++r)
            for (std::size_t j = 0; j < k; ++j) {
                cons(r, j) = Rat(esd_.a(j, r));
                cons(r, k + j) = -Rat(esd_.a(j, r));
            }
        // rows are >= constraints: add surplus variables
        RatMatrix full(bign, 2 * k + bign);
        for (std::size_t r = 0; r < bign; ++r) {
            for (std::size_t j = 0; j < 2 * k; ++j) full(r, j) = cons(r, j);
            full(r, 2 * k + r) = Rat(-1);
        }
        LpResult res = lp_solve(full, rhs, std::vector<Rat>(2 * k + bign, Rat(0)));
        if (res.status != LpStatus::optimal)
            throw precondition_error(
                "no strictly positive functional in the row space of A; "
                "base-exponent fibers would be infinite");
        functional_multiplier_.resize(k);
        for (std::size_t j = 0; j < k; ++j)
            functional_multiplier_[j] = res.x[j] - res.x[k + j];
        positive_functional_.assign(bign, Rat(0));
        for (std::size_t r = 0; r < bign; ++r)
            for (std::size_t j = 0; j < k; ++j)
                positive_functional_[r] += functional_multiplier_[j] * Rat(esd_.a(j, r));
    }

    // A restricted to the columns complementary to the pivot rays is
    // invertible over the integers (its determinant pairs with the unit
    // determinant of the pivot ray block). Precompute its inverse so fiber
    // solving works for any matrix presenting the class group, not only the
    // pivot form where this block is the identity.
    void init_nonpivot_block() {
        std::size_t bign = esd_.ray_count();
        std::size_t k = esd_.pic_rank();
        std::vector<bool> is_pivot(bign, false);
        for (std::size_t p : esd_.pivot_rays) is_pivot[p] = true;
        for (std::size_t r = 0; r < bign; ++r)
            if (!is_pivot[r]) nonpivots_.push_back(r);
        RatMatrix aug(k, 2 * k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) aug(i, j) = Rat(esd_.a(i, nonpivots_[j]));
            aug(i, k + i) = Rat(1);
        }
        auto piv = rref(aug);
        for (std::size_t i = 0; i < k; ++i)
            if (i >= piv.size() || piv[i] != i)
                throw precondition_error("class matrix block on non-pivot rays is singular");
        nonpivot_inverse_ = IntMatrix(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Rat v = aug(i, k + j);
                if (boost::multiprecision::denominator(v) != 1)
                    throw precondition_error("class matrix block on non-pivot rays is not unimodular");
                nonpivot_inverse_(i, j) = boost::multiprecision::numerator(v);
            }
    }

    template <typename F>
    void enumerate_compositions(const std::vector<std::size_t>& slots, std::size_t pos,
                                int remaining, std::vector<int>& t_exp, F&& emit) {
        if (pos == slots.size()) {
            if (remaining == 0) emit(t_exp);
            return;
        }
        if (pos + 1 == slots.size()) {
            t_exp[slots[pos]] = remaining;
            emit(t_exp);
            t_exp[slots[pos]] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            t_exp[slots[pos]] = e;
            enumerate_compositions(slots, pos + 1, remaining - e, t_exp, emit);
        }
        t_exp[slots[pos]] = 0;
    }

    std::vector<std::vector<int>> solve_fiber(const std::vector<Int>& cls) const {
        std::size_t n = esd_.dim();
        // total budget: pi . x = y . cls for every solution x
        Rat budget(0);
        for (std::size_t j = 0; j < cls.size(); ++j)
            budget += functional_multiplier_[j] * Rat(cls[j]);

        std::vector<std::vector<int>> out;
        std::vector<int> pivot_vals(n, 0);
        dfs_pivots(cls, 0, budget, pivot_vals, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    void dfs_pivots(const std::vector<Int>& cls, std::size_t level, const Rat& budget_left,
                    std::vector<int>& pivot_vals, std::vector<std::vector<int>>& out) const {
        if (budget_left < 0) return;
        std::size_t n = esd_.dim();
        std::size_t bign = esd_.ray_count();
        if (level == n) {
            std::vector<int> sol(bign, 0);
            for (std::size_t i = 0; i < n; ++i) sol[esd_.pivot_rays[i]] = pivot_vals[i];
            // once the pivot-ray exponents are fixed, the rest are forced:
            // x_nonpivot = (A on non-pivot columns)^{-1} (cls - A_pivot x_pivot)
            std::vector<Int> residue(cls);
            for (std::size_t j = 0; j < residue.size(); ++j)
                for (std::size_t i = 0; i < n; ++i)
                    if (pivot_vals[i]) residue[j] -= Int(pivot_vals[i]) * esd_.a(j, esd_.pivot_rays[i]);
            std::vector<Int> forced = nonpivot_inverse_.apply(residue);
            for (std::size_t j = 0; j < nonpivots_.size(); ++j) {
                if (forced[j] < 0) return;
                if (forced[j] > 1000000000) throw input_error("fiber solution exponent overflow");
                sol[nonpivots_[j]] = static_cast<int>(forced[j]);
            }
            out.push_back(std::move(sol));
            return;
        }
        const Rat& price = positive_functional_[esd_.pivot_rays[level]];
        Rat max_rat = budget_left / price;  // budget_left >= 0, price > 0
        Int max_e = boost::multiprecision::numerator(max_rat) /
                    boost::multiprecision::denominator(max_rat);
        if (max_e > 1000000000) throw input_error("fiber search bound overflow");
        int bound = static_cast<int>(max_e);
        for (int e = 0; e <= bound; ++e) {
            pivot_vals[level] = e;
            dfs_pivots(cls, level + 1, budget_left - price * e, pivot_vals, out);
        }
        pivot_vals[level] = 0;
    }
};

}  // namespace symtoric
