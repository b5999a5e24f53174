#pragma once

#include "symtoric/generators.hpp"
#include "symtoric/matrix.hpp"
#include "symtoric/monomials.hpp"
#include "symtoric/simplex.hpp"
#include "symtoric/smith.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace symtoric {

/// GIT datum for the hyperkaehler quotient: weight matrix A (full row rank,
/// trivial Smith invariants), stability parameter theta, moment level xi.
struct HypertoricProblem {
    IntMatrix a;
    std::vector<Rat> theta;
    std::vector<Rat> xi;

    std::size_t ambient() const { return a.cols(); }
    std::size_t torus_rank() const { return a.rows(); }
};

struct PhasePoint {
    std::vector<Rat> z;
    std::vector<Rat> w;
};

struct SupportPattern {
    std::vector<std::size_t> z_support;
    std::vector<std::size_t> w_support;

    bool operator==(const SupportPattern& o) const = default;
};

inline HypertoricProblem hypertoric_problem(const IntMatrix& a, std::vector<Rat> theta,
                                            std::vector<Rat> xi) {
    if (theta.size() != a.rows() || xi.size() != a.rows())
        throw input_error("hypertoric_problem: theta and xi must match the row count of A");
    if (rational_rank(a) != a.rows())
        throw precondition_error("hypertoric_problem: A must have full row rank");
    if (!has_saturated_column_lattice(a))
        throw precondition_error("hypertoric_problem: A must have trivial Smith invariants");
    return {a, std::move(theta), std::move(xi)};
}

/// Moment map value: the vector with j-th entry sum_i A(j,i) z_i w_i.
inline std::vector<Rat> moment_eval(const HypertoricProblem& h, const PhasePoint& pt) {
    if (pt.z.size() != h.ambient() || pt.w.size() != h.ambient())
        throw input_error("moment_eval: point has wrong dimension");
    std::vector<Rat> out(h.torus_rank(), Rat(0));
    for (std::size_t i = 0; i < h.ambient(); ++i) {
        if (pt.z[i] == 0 || pt.w[i] == 0) continue;
        Rat prod = pt.z[i] * pt.w[i];
        for (std::size_t j = 0; j < h.torus_rank(); ++j)
            if (h.a(j, i) != 0) out[j] += Rat(h.a(j, i)) * prod;
    }
    return out;
}

namespace detail {

inline RationalCone support_weight_cone(const IntMatrix& a, const SupportPattern& sp) {
    RationalCone cone;
    cone.ambient_dim = a.rows();
    for (std::size_t i : sp.z_support) {
        std::vector<Rat> g(a.rows());
        for (std::size_t j = 0; j < a.rows(); ++j) g[j] = Rat(a(j, i));
        cone.generators.push_back(std::move(g));
    }
    for (std::size_t i : sp.w_support) {
        std::vector<Rat> g(a.rows());
        for (std::size_t j = 0; j < a.rows(); ++j) g[j] = -Rat(a(j, i));
        cone.generators.push_back(std::move(g));
    }
    return cone;
}

inline SupportPattern support_of(const PhasePoint& pt) {
    SupportPattern sp;
    for (std::size_t i = 0; i < pt.z.size(); ++i)
        if (pt.z[i] != 0) sp.z_support.push_back(i);
    for (std::size_t i = 0; i < pt.w.size(); ++i)
        if (pt.w[i] != 0) sp.w_support.push_back(i);
    return sp;
}

/// Primitive integer normals of the wall hyperplanes, one per (k-1)-subset
/// of columns of A that spans a hyperplane (duplicates are harmless).
inline std::vector<std::vector<Int>> wall_normals(const IntMatrix& a) {
    std::size_t k = a.rows();
    std::vector<std::vector<Int>> normals;
    if (k == 0) return normals;
    std::size_t need = k - 1;
    if (need > a.cols()) return normals;
    std::vector<std::size_t> cs(need);
    for (std::size_t i = 0; i < need; ++i) cs[i] = i;
    for (;;) {
        IntMatrix rows(need, k);
        for (std::size_t r = 0; r < need; ++r)
            for (std::size_t j = 0; j < k; ++j) rows(r, j) = a(j, cs[r]);
        IntMatrix ker = rational_kernel_basis(rows);
        if (ker.cols() == 1) {
            std::vector<Int> h(k);
            for (std::size_t j = 0; j < k; ++j) h[j] = ker(j, 0);
            normals.push_back(std::move(h));
        }
        if (need == 0) break;
        if (!next_subset(cs, a.cols())) break;
    }
    return normals;
}

}  // namespace detail

/// theta-semistability of a point depends only on its support: theta must lie
/// in the cone spanned by {a_i : z_i != 0} and {-a_j : w_j != 0}.
inline bool is_semistable(const HypertoricProblem& h, const PhasePoint& pt) {
    if (pt.z.size() != h.ambient() || pt.w.size() != h.ambient())
        throw input_error("is_semistable: point has wrong dimension");
    RationalCone cone = detail::support_weight_cone(h.a, detail::support_of(pt));
    return cone_contains(cone, h.theta).contains;
}

/// Unimodularity of the weight matrix: every maximal minor in {-1, 0, 1}.
/// This is the combinatorial criterion for the generic GIT quotient to be a
/// symplectic resolution.
inline bool is_unimodular(const IntMatrix& a) {
    if (rational_rank(a) != a.rows())
        throw precondition_error("is_unimodular: A must have full row rank");
    std::size_t k = a.rows();
    if (k == 0) return true;
    std::vector<std::size_t> cs(k);
    for (std::size_t i = 0; i < k; ++i) cs[i] = i;
    bool more = true;
    while (more) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(i, cs[j]);
        Int d = determinant(sub);
        if (d < -1 || d > 1) return false;
        more = detail::next_subset(cs, a.cols());
    }
    return true;
}

struct GenericityReport {
    bool generic = false;
    std::vector<std::vector<std::size_t>> walls;  // violated column subsets
};

/// theta is generic when it lies on no hyperplane spanned by N-n-1 columns
/// of A. Violated walls are returned as the offending column index subsets.
inline GenericityReport is_generic(const IntMatrix& a, const std::vector<Rat>& theta) {
    if (theta.size() != a.rows()) throw input_error("is_generic: theta has wrong dimension");
    GenericityReport rep;
    std::size_t k = a.rows();
    if (k == 0) {
        rep.generic = true;
        return rep;
    }
    std::size_t need = k - 1;
    std::vector<std::size_t> cs(need);
    for (std::size_t i = 0; i < need; ++i) cs[i] = i;
    bool more = need <= a.cols();
    if (need == 0) more = true;
    while (more) {
        RatMatrix span(k, need + 1);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < need; ++j) span(i, j) = Rat(a(i, cs[j]));
            span(i, need) = theta[i];
        }
        RatMatrix cols_only(k, need);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < need; ++j) cols_only(i, j) = Rat(a(i, cs[j]));
        std::size_t r = rational_rank(cols_only);
        if (r == need && rational_rank(span) == need) rep.walls.push_back(cs);
        if (need == 0) break;
        more = detail::next_subset(cs, a.cols());
    }
    rep.generic = rep.walls.empty();
    return rep;
}

struct FiberComponent {
    SupportPattern pattern;
    long long dim = 0;
};

struct CentralFiberReport {
    std::vector<FiberComponent> components;
    std::vector<Rat> theta_effective;
    bool perturbed = false;
};

/// Components of the central fiber of the morphism from the stable quotient
/// to the affine one, found by scanning coordinate-support patterns. A
/// pattern survives when (a) its subspace lies inside the zero moment fiber,
/// (b) every invariant generator vanishes on it, and (d) the effective
/// stability parameter lies in the relative interior of its support-weight
/// cone; inclusion-maximal survivors are returned.
///
/// When theta is nonzero but lies on a wall, the quotient the case analysis
/// describes is the one from the adjacent chamber: theta is perturbed along
/// the negated column sum (the canonical-class direction for fan-derived
/// data) by a rational epsilon shrunk until the wall test passes. At a
/// generic parameter the relative-interior test agrees with plain
/// semistability, because support-cone boundaries lie inside walls.
inline CentralFiberReport central_fiber_components(const HypertoricProblem& h,
                                                   const GeneratorReport& gens) {
    for (const Rat& c : h.xi)
        if (c != 0)
            throw precondition_error("central_fiber_components: moment level xi must be zero");
    std::size_t bign = h.ambient();
    std::size_t k = h.torus_rank();

    CentralFiberReport rep;
    rep.theta_effective = h.theta;
    bool theta_zero = true;
    for (const Rat& c : h.theta)
        if (c != 0) theta_zero = false;
    if (!theta_zero && !is_generic(h.a, h.theta).generic) {
        // direction: the negated column sum (for fan-derived data this is the
        // canonical-class direction, which selects the chamber the blow-up
        // case analysis refers to); fall back to a nonzero column if the sum
        // vanishes
        std::vector<Rat> direction(k, Rat(0));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < bign; ++i) direction[j] -= Rat(h.a(j, i));
        bool direction_zero = true;
        for (const Rat& c : direction)
            if (c != 0) direction_zero = false;
        if (direction_zero) {
            for (std::size_t i = 0; i < bign && direction_zero; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (h.a(j, i) != 0) {
                        for (std::size_t jj = 0; jj < k; ++jj) direction[jj] = Rat(h.a(jj, i));
                        direction_zero = false;
                        break;
                    }
            if (direction_zero)
                throw precondition_error("central_fiber_components: weight matrix is zero");
        }

        // step must stay strictly inside the chamber adjacent to theta along
        // the direction, so cap it by half the first positive wall crossing
        Rat eps(1);
        for (const auto& hn : detail::wall_normals(h.a)) {
            Rat ht(0), hd(0);
            for (std::size_t j = 0; j < k; ++j) {
                ht += Rat(hn[j]) * h.theta[j];
                hd += Rat(hn[j]) * direction[j];
            }
            if (ht == 0) {
                if (hd == 0)
                    throw precondition_error(
                        "central_fiber_components: perturbation direction lies inside a wall "
                        "through theta");
                continue;
            }
            if (hd == 0) continue;
            Rat t = -ht / hd;
            if (t > 0) {
                Rat half = t / 2;
                if (half < eps) eps = half;
            }
        }

        std::vector<Rat> candidate(k);
        for (std::size_t j = 0; j < k; ++j) candidate[j] = h.theta[j] + eps * direction[j];
        if (!is_generic(h.a, candidate).generic)
            throw precondition_error("central_fiber_components: perturbed theta is still on a wall");
        rep.theta_effective = std::move(candidate);
        rep.perturbed = true;
    }

    // support patterns as state vectors: 0 = absent, 1 = z-side, 2 = w-side,
    // 3 = both (only when the column vanishes, else the moment restriction
    // keeps a bilinear term)
    std::vector<bool> column_zero(bign, true);
    for (std::size_t i = 0; i < bign; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (h.a(j, i) != 0) column_zero[i] = false;

    std::vector<SupportPattern> candidates;
    std::vector<int> state(bign, 0);
    auto emit = [&]() {
        SupportPattern sp;
        for (std::size_t i = 0; i < bign; ++i) {
            if (state[i] == 1 || state[i] == 3) sp.z_support.push_back(i);
            if (state[i] == 2 || state[i] == 3) sp.w_support.push_back(i);
        }
        candidates.push_back(std::move(sp));
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == bign) {
            emit();
            return;
        }
        for (int s = 0; s < 4; ++s) {
            if (s == 3 && !column_zero[i]) continue;
            state[i] = s;
            self(self, i + 1);
        }
        state[i] = 0;
    };
    rec(rec, 0);

    std::sort(candidates.begin(), candidates.end(), [](const SupportPattern& a, const SupportPattern& b) {
        std::size_t sa = a.z_support.size() + a.w_support.size();
        std::size_t sb = b.z_support.size() + b.w_support.size();
        if (sa != sb) return sa > sb;
        if (a.z_support != b.z_support) return a.z_support < b.z_support;
        return a.w_support < b.w_support;
    });

    auto contained = [](const SupportPattern& inner, const SupportPattern& outer) {
        return std::includes(outer.z_support.begin(), outer.z_support.end(),
                             inner.z_support.begin(), inner.z_support.end()) &&
               std::includes(outer.w_support.begin(), outer.w_support.end(),
                             inner.w_support.begin(), inner.w_support.end());
    };

    auto all_generators_vanish = [&](const SupportPattern& sp) {
        for (const auto& g : gens.generators) {
            bool z_inside = true, w_inside = true;
            for (std::size_t i = 0; i < bign && z_inside; ++i)
                if (g.mono.s_exp[i] > 0 &&
                    !std::binary_search(sp.z_support.begin(), sp.z_support.end(), i))
                    z_inside = false;
            for (std::size_t i = 0; i < bign && w_inside; ++i)
                if (g.mono.t_exp[i] > 0 &&
                    !std::binary_search(sp.w_support.begin(), sp.w_support.end(), i))
                    w_inside = false;
            if (z_inside && w_inside) return false;  // generator survives on the subspace
        }
        return true;
    };

    for (const auto& sp : candidates) {
        bool skip = false;
        for (const auto& comp : rep.components)
            if (contained(sp, comp.pattern)) {
                skip = true;
                break;
            }
        if (skip) continue;
        if (!all_generators_vanish(sp)) continue;
        RationalCone cone = detail::support_weight_cone(h.a, sp);
        if (!relint_cone_contains(cone, rep.theta_effective)) continue;

        RatMatrix weights(k, cone.generators.size());
        for (std::size_t c = 0; c < cone.generators.size(); ++c)
            for (std::size_t j = 0; j < k; ++j) weights(j, c) = cone.generators[c][j];
        long long dim = static_cast<long long>(cone.generators.size()) -
                        static_cast<long long>(rational_rank(weights));
        rep.components.push_back({sp, dim});
    }
    return rep;
}

/// The hypertoric problem attached to a fan's exact sequence: weight matrix
/// A, the given stability parameter, zero moment level.
inline HypertoricProblem fan_hypertoric_problem(const ExactSequenceData& esd,
                                                std::vector<Rat> theta) {
    std::vector<Rat> xi(esd.pic_rank(), Rat(0));
    return hypertoric_problem(esd.a, std::move(theta), std::move(xi));
}

}  // namespace symtoric
