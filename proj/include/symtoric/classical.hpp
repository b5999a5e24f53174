#pragma once

#include "symtoric/matrix.hpp"
#include "symtoric/numeric.hpp"

#include <cstddef>
#include <vector>

namespace symtoric {

/// Rank <= 1 test by vanishing of every 2x2 minor.
inline bool rank_at_most_one(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = i + 1; k < m.rows(); ++k)
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (std::size_t l = j + 1; l < m.cols(); ++l)
                    if (m(i, j) * m(k, l) - m(i, l) * m(k, j) != 0) return false;
    return true;
}

inline Rat trace(const RatMatrix& m) {
    Rat t(0);
    for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) t += m(i, i);
    return t;
}

/// Springer-type map for projective n-space: (x, y) with sum x_i y_i = 0
/// goes to the rank <= 1 traceless matrix (x_i y_j).
inline RatMatrix springer_eval_pn(std::size_t n, const std::vector<Rat>& x,
                                  const std::vector<Rat>& y) {
    if (x.size() != n + 1 || y.size() != n + 1)
        throw input_error("springer_eval_pn: vectors must have length n+1");
    Rat pairing(0);
    for (std::size_t i = 0; i <= n; ++i) pairing += x[i] * y[i];
    if (pairing != 0)
        throw precondition_error("springer_eval_pn: point is off the incidence hypersurface");
    RatMatrix z(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) z(i, j) = x[i] * y[j];
    return z;
}

/// The birational modification for the one-point blow-up: entries unchanged
/// except the last column, whose first n rows are scaled by -z_{n+1,n+1}.
inline RatMatrix nu_eval_blowup(std::size_t n, const RatMatrix& z) {
    if (z.rows() != n + 1 || z.cols() != n + 1)
        throw input_error("nu_eval_blowup: matrix must be (n+1)x(n+1)");
    if (trace(z) != 0) throw precondition_error("nu_eval_blowup: input must be traceless");
    if (!rank_at_most_one(z)) throw precondition_error("nu_eval_blowup: input must have rank <= 1");
    RatMatrix out = z;
    Rat corner = z(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, n) = -corner * z(i, n);
    return out;
}

/// Determinantal model membership for the blow-up of projective n-space at
/// n+1-k torus-fixed points: trace zero, and the matrix with diagonal
/// entries z_jj replaced by -z_jj^2 for j > k (1-based) has rank <= 1.
inline bool determinantal_membership(std::size_t n, std::size_t k, const RatMatrix& z) {
    if (k < 1 || k > n + 1) throw input_error("determinantal_membership: need 1 <= k <= n+1");
    if (z.rows() != n + 1 || z.cols() != n + 1)
        throw input_error("determinantal_membership: matrix must be (n+1)x(n+1)");
    if (trace(z) != 0) return false;
    RatMatrix m = z;
    for (std::size_t j = k; j <= n; ++j) m(j, j) = -z(j, j) * z(j, j);
    return rank_at_most_one(m);
}

/// Evaluate the determinantal-model coordinates z_ab on a point of the
/// moment fiber for the blow-up of projective n-space at the last n+1-k
/// torus-fixed points. Base coordinates x and fiber coordinates w are listed
/// per ray: rays 0..n are the projective-space rays, ray n+1+t is the
/// exceptional ray over blown-up center k+t (0-based centers k..n). For
/// a != b: z_ab = x_a w_b, times w'_a when a is blown up, times x'_b when b
/// is blown up (primes denote exceptional-ray coordinates). Diagonal:
/// z_aa = x_a w_a for every a.
inline RatMatrix blowup_model_matrix(std::size_t n, std::size_t k, const std::vector<Rat>& x,
                                     const std::vector<Rat>& w) {
    if (k < 1 || k > n + 1) throw input_error("blowup_model_matrix: need 1 <= k <= n+1");
    std::size_t m = n + 1 - k;  // number of blown-up points
    std::size_t bign = n + 1 + m;
    if (x.size() != bign || w.size() != bign)
        throw input_error("blowup_model_matrix: coordinate vectors must have one entry per ray");
    auto exceptional = [&](std::size_t center) {
        return n + 1 + (center - k);  // ray index of the exceptional ray over `center`
    };
    auto blown = [&](std::size_t a) { return a >= k; };
    RatMatrix z(n + 1, n + 1);
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; b <= n; ++b) {
            Rat v = x[a] * w[b];
            if (a != b) {
                if (blown(a)) v *= w[exceptional(a)];
                if (blown(b)) v *= x[exceptional(b)];
            }
            z(a, b) = v;
        }
    return z;
}

}  // namespace symtoric
