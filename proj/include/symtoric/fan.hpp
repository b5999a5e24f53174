#pragma once

#include "symtoric/matrix.hpp"
#include "symtoric/simplex.hpp"
#include "symtoric/smith.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace symtoric {

/// A rational polyhedral fan given by its rays (primitive integer vectors)
/// and its maximal cones (lists of ray indices, 0-based).
struct Fan {
    std::size_t dim = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<std::size_t>> max_cones;

    std::size_t ray_count() const { return rays.size(); }
};

struct FanValidation {
    bool primitive = false;
    bool distinct = false;
    bool smooth = false;
    bool complete = false;
    bool spanning = false;
    std::vector<std::string> problems;

    bool ok() const { return primitive && distinct && smooth && complete && spanning; }
};

/// Check that the input describes a smooth complete fan: primitive distinct
/// rays, every maximal cone unimodular of full dimension, facets shared by
/// exactly two maximal cones, and rays positively spanning the ambient space.
inline FanValidation validate_fan(const Fan& f) {
    FanValidation v;
    auto complain = [&](const std::string& msg) { v.problems.push_back(msg); };

    if (f.dim == 0) {
        complain("fan dimension must be positive");
        return v;
    }

    v.primitive = true;
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
        if (f.rays[r].size() != f.dim) {
            v.primitive = false;
            complain("ray " + std::to_string(r) + " has wrong length");
            continue;
        }
        Int g = content(f.rays[r]);
        if (g == 0) {
            v.primitive = false;
            complain("ray " + std::to_string(r) + " is zero");
        } else if (g != 1) {
            v.primitive = false;
            complain("ray " + std::to_string(r) + " is not primitive");
        }
    }

    v.distinct = true;
    std::set<std::vector<Int>> seen;
    for (std::size_t r = 0; r < f.rays.size(); ++r)
        if (!seen.insert(f.rays[r]).second) {
            v.distinct = false;
            complain("ray " + std::to_string(r) + " duplicates an earlier ray");
        }

    if (!v.primitive || !v.distinct) return v;

    v.smooth = true;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& cone = f.max_cones[c];
        std::set<std::size_t> uniq(cone.begin(), cone.end());
        bool in_range = true;
        for (auto idx : cone)
            if (idx >= f.rays.size()) in_range = false;
        if (!in_range || uniq.size() != f.dim || cone.size() != f.dim) {
            v.smooth = false;
            complain("max cone " + std::to_string(c) + " must list dim distinct valid ray indices");
            continue;
        }
        IntMatrix m(f.dim, f.dim);
        std::size_t col = 0;
        for (auto idx : cone) {
            for (std::size_t i = 0; i < f.dim; ++i) m(i, col) = f.rays[idx][i];
            ++col;
        }
        Int det = determinant(m);
        if (det != 1 && det != -1) {
            v.smooth = false;
            complain("max cone " + std::to_string(c) + " is not unimodular (det " + det.str() + ")");
        }
    }
    if (!v.smooth) return v;

    // completeness: every facet (n-1 subset of a maximal cone) belongs to
    // exactly two maximal cones, and every ray is used
    v.complete = true;
    if (f.max_cones.empty()) {
        v.complete = false;
        complain("fan has no maximal cones");
    }
    std::map<std::vector<std::size_t>, int> facet_count;
    for (const auto& cone : f.max_cones) {
        std::vector<std::size_t> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t skip = 0; skip < sorted.size(); ++skip) {
            std::vector<std::size_t> facet;
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (i != skip) facet.push_back(sorted[i]);
            ++facet_count[facet];
        }
    }
    for (const auto& [facet, count] : facet_count)
        if (count != 2) {
            v.complete = false;
            std::ostringstream os;
            os << "facet {";
            for (std::size_t i = 0; i < facet.size(); ++i) os << (i ? "," : "") << facet[i];
            os << "} lies in " << count << " maximal cones, expected 2";
            complain(os.str());
        }
    std::vector<bool> used(f.rays.size(), false);
    for (const auto& cone : f.max_cones)
        for (auto idx : cone) used[idx] = true;
    for (std::size_t r = 0; r < f.rays.size(); ++r)
        if (!used[r]) {
            v.complete = false;
            complain("ray " + std::to_string(r) + " is not used by any maximal cone");
        }

    v.spanning = true;
    RationalCone all;
    all.ambient_dim = f.dim;
    for (const auto& ray : f.rays) {
        std::vector<Rat> g(f.dim);
        for (std::size_t i = 0; i < f.dim; ++i) g[i] = Rat(ray[i]);
        all.generators.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < f.dim && v.spanning; ++i) {
        for (int sign : {1, -1}) {
            std::vector<Rat> e(f.dim);
            e[i] = sign;
            if (!cone_contains(all, e).contains) {
                v.spanning = false;
                complain("rays do not positively span the ambient space");
                break;
            }
        }
    }
    return v;
}

inline void require_valid(const Fan& f) {
    FanValidation v = validate_fan(f);
    if (v.ok()) return;
    std::string msg = "fan is not smooth and complete";
    for (const auto& p : v.problems) msg += "; " + p;
    throw precondition_error(msg);
}

/// The two exact-sequence matrices of a smooth complete fan:
///   B (N x n), row rho = the ray v_rho, so B maps m to (<v_rho, m>)_rho;
///   A ((N-n) x N) with A B = 0, surjective over Z.
/// A is canonical: rows are indexed by the rays outside the lexicographically
/// first unimodular ray subset S, and the columns outside S form an identity
/// block, which pins A down uniquely and reproducibly.
struct ExactSequenceData {
    IntMatrix b;
    IntMatrix a;
    std::vector<std::size_t> pivot_rays;  // the subset S

    std::size_t ray_count() const { return b.rows(); }
    std::size_t dim() const { return b.cols(); }
    std::size_t pic_rank() const { return a.rows(); }

    /// Column of A at a ray: the class of the corresponding divisor.
    std::vector<Int> divisor_class(std::size_t ray) const { return a.col(ray); }
};

namespace detail {

inline bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k = s.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (s[i] != i + n - k) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

inline ExactSequenceData build_exact_sequence(const Fan& f) {
    require_valid(f);
    std::size_t n = f.dim, bign = f.rays.size();

    ExactSequenceData esd;
    esd.b = IntMatrix(bign, n);
    for (std::size_t r = 0; r < bign; ++r)
        for (std::size_t j = 0; j < n; ++j) esd.b(r, j) = f.rays[r][j];

    // lexicographically first n-subset of rays forming a lattice basis;
    // any maximal cone provides one, so the search always succeeds
    std::vector<std::size_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = i;
    std::optional<std::vector<std::size_t>> found;
    do {
        IntMatrix bs(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) bs(i, j) = f.rays[s[i]][j];
        Int det = determinant(bs);
        if (det == 1 || det == -1) {
            found = s;
            break;
        }
    } while (detail::next_subset(s, bign));
    if (!found) throw precondition_error("no unimodular ray subset found");
    esd.pivot_rays = *found;

    // invert B_S over the rationals; entries are integral since det = +-1
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rat(f.rays[esd.pivot_rays[i]][j]);
        aug(i, n + i) = 1;
    }
    rref(aug);
    IntMatrix bs_inv(n, n);  // inverse of the n x n matrix with rows v_{S_i}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat q = aug(i, n + j);
            if (boost::multiprecision::denominator(q) != 1)
                throw precondition_error("pivot ray subset was not unimodular");
            bs_inv(i, j) = boost::multiprecision::numerator(q);
        }

    std::vector<bool> in_s(bign, false);
    for (auto idx : esd.pivot_rays) in_s[idx] = true;

    esd.a = IntMatrix(bign - n, bign);
    std::size_t row = 0;
    for (std::size_t j = 0; j < bign; ++j) {
        if (in_s[j]) continue;
        // coefficients of v_j in the basis {v_s}: v_j = sum_i coeff_i v_{S_i}
        std::vector<Int> coeff(n);
        for (std::size_t i = 0; i < n; ++i) {
            Int sum = 0;
            for (std::size_t k = 0; k < n; ++k) sum += f.rays[j][k] * bs_inv(k, i);
            coeff[i] = sum;
        }
        esd.a(row, j) = 1;
        for (std::size_t i = 0; i < n; ++i) esd.a(row, esd.pivot_rays[i]) = -coeff[i];
        ++row;
    }
    return esd;
}

/// Antipodal structure on the rays: opposite[rho] is the index of -v_rho when
/// that is also a ray; sigma1 keeps every unpaired ray plus the smaller index
/// of each antipodal pair.
struct SignedRayPairing {
    std::vector<std::size_t> sigma1;
    std::vector<std::optional<std::size_t>> opposite;

    bool in_sigma1(std::size_t ray) const {
        return std::find(sigma1.begin(), sigma1.end(), ray) != sigma1.end();
    }
};

inline SignedRayPairing select_sigma1(const Fan& f) {
    SignedRayPairing p;
    p.opposite.resize(f.rays.size());
    std::map<std::vector<Int>, std::size_t> index;
    for (std::size_t r = 0; r < f.rays.size(); ++r) index[f.rays[r]] = r;
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
        std::vector<Int> neg = f.rays[r];
        for (auto& x : neg) x = -x;
        auto it = index.find(neg);
        if (it != index.end()) p.opposite[r] = it->second;
        if (!p.opposite[r] || r < *p.opposite[r]) p.sigma1.push_back(r);
    }
    return p;
}

/// Perpendicular spaces of the ray configurations:
///   sigma1_perp: basis (rows) of {u in Q^sigma1 : sum u_rho v_rho = 0},
///     coordinates indexed by position within sigma1;
///   full_perp: same for all rays, a basis of the row space of A;
///   pair_vectors: for each antipodal pair, the vector in Z^N with ones at
///     the two paired positions.
/// Bases come from reduced row echelon form scaled to primitive integer rows,
/// so they are deterministic.
struct PerpSpaces {
    IntMatrix sigma1_perp;
    IntMatrix full_perp;
    std::vector<std::vector<Int>> pair_vectors;
};

namespace detail {

inline IntMatrix perp_of_columns(const std::vector<std::vector<Int>>& cols, std::size_t dim) {
    IntMatrix m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
    IntMatrix ker = rational_kernel_basis(m);  // columns span the kernel
    IntMatrix rows(ker.cols(), ker.rows());
    for (std::size_t i = 0; i < ker.cols(); ++i)
        for (std::size_t j = 0; j < ker.rows(); ++j) rows(i, j) = ker(j, i);
    return rows;
}

}  // namespace detail

inline PerpSpaces perp_spaces(const Fan& f, const SignedRayPairing& pairing) {
    PerpSpaces out;
    std::vector<std::vector<Int>> sigma1_cols;
    for (auto r : pairing.sigma1) sigma1_cols.push_back(f.rays[r]);
    out.sigma1_perp = detail::perp_of_columns(sigma1_cols, f.dim);
    out.full_perp = detail::perp_of_columns(f.rays, f.dim);
    for (auto r : pairing.sigma1) {
        if (!pairing.opposite[r]) continue;
        std::vector<Int> v(f.rays.size());
        v[r] = 1;
        v[*pairing.opposite[r]] = 1;
        out.pair_vectors.push_back(std::move(v));
    }
    return out;
}

/// Exact certificate that ker A meets the nonnegative orthant only in 0
/// (equivalent to completeness of the fan; guarantees every enumeration over
/// a divisor class is finite).
inline bool kernel_meets_positive_orthant(const IntMatrix& a) {
    // feasibility of {x >= 0 : A x = 0, sum x = 1}
    RatMatrix m(a.rows() + 1, a.cols());
    std::vector<Rat> b(a.rows() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
    for (std::size_t j = 0; j < a.cols(); ++j) m(a.rows(), j) = 1;
    b[a.rows()] = 1;
    return lp_feasible(m, b).status == LpStatus::optimal;
}

}  // namespace symtoric
