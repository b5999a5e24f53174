#pragma once

#include "symtoric/matrix.hpp"

#include <cstddef>
#include <tuple>

namespace symtoric {

/// Smith normal form decomposition U * A * V = D with U, V unimodular and
/// D diagonal, nonnegative, each entry dividing the next.
struct SmithForm {
    IntMatrix u;  // rows x rows
    IntMatrix d;  // rows x cols
    IntMatrix v;  // cols x cols
};

/// Compute the Smith normal form. Pivot selection is the nonzero entry of
/// smallest absolute value in the remaining block, ties broken by (row, col),
/// which makes the sequence of elementary operations (and U, V) reproducible.
inline SmithForm smith_normal_form(const IntMatrix& m) {
    std::size_t r = m.rows(), c = m.cols();
    SmithForm f{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& d = f.d;

    auto find_pivot = [&](std::size_t t) -> std::pair<std::size_t, std::size_t> {
        std::size_t bi = r, bj = c;
        Int best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (d(i, j) == 0) continue;
                Int a = abs(d(i, j));
                if (bi == r || a < best) {
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        return {bi, bj};
    };

    std::size_t t = 0;
    std::size_t steps = r < c ? r : c;
    for (; t < steps; ++t) {
        auto [pi, pj] = find_pivot(t);
        if (pi == r) break;  // remaining block is zero
        d.swap_rows(t, pi);
        f.u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        f.v.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                if (q != 0) {
                    d.add_row(i, t, -q);
                    f.u.add_row(i, t, -q);
                }
                if (d(i, t) != 0) {
                    // remainder is a smaller pivot, promote it
                    d.swap_rows(t, i);
                    f.u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                if (q != 0) {
                    d.add_col(j, t, -q);
                    f.v.add_col(j, t, -q);
                }
                if (d(t, j) != 0) {
                    d.swap_cols(t, j);
                    f.v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
    }

    // Enforce the divisibility chain d_i | d_{i+1} with the classical 2x2 fix:
    // fold d(j,j) into column i, run Euclid on rows (i, j), clear the fill-in.
    // The pair (d_i, d_j) becomes (gcd, +-lcm).
    for (std::size_t i = 0; i + 1 < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            if (d(j, j) % d(i, i) == 0) continue;
            d.add_col(i, j, Int(1));
            f.v.add_col(i, j, Int(1));
            while (d(j, i) != 0) {
                Int q = d(i, i) / d(j, i);
                d.add_row(i, j, -q);
                f.u.add_row(i, j, -q);
                d.swap_rows(i, j);
                f.u.swap_rows(i, j);
            }
            // gcd divides b, so it divides the fill-in d(i,j) (a multiple of b)
            if (d(i, j) != 0) {
                Int q = d(i, j) / d(i, i);
                d.add_col(j, i, -q);
                f.v.add_col(j, i, -q);
            }
        }
    }

    for (std::size_t i = 0; i < t; ++i)
        if (d(i, i) < 0) {
            d.scale_col(i, Int(-1));
            f.v.scale_col(i, Int(-1));
        }
    return f;
}

/// Rank of an integer matrix via its Smith form diagonal.
inline std::size_t smith_rank(const SmithForm& f) {
    std::size_t n = f.d.rows() < f.d.cols() ? f.d.rows() : f.d.cols();
    std::size_t rk = 0;
    while (rk < n && f.d(rk, rk) != 0) ++rk;
    return rk;
}

/// Z-basis of the integer kernel {x in Z^cols : m x = 0} as matrix columns.
/// The basis spans a saturated sublattice (it is a sub-basis of the
/// unimodular V from the Smith form). Zero columns when the kernel is trivial.
inline IntMatrix integer_kernel(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    std::size_t rk = smith_rank(f);
    std::size_t k = m.cols() - rk;
    IntMatrix ker(m.cols(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) ker(i, j) = f.v(i, rk + j);
    return ker;
}

/// True when the column lattice of m is saturated in Z^rows (the quotient is
/// torsion free), i.e. all Smith invariants are 1.
inline bool has_saturated_column_lattice(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    std::size_t rk = smith_rank(f);
    for (std::size_t i = 0; i < rk; ++i)
        if (f.d(i, i) != 1) return false;
    return true;
}

}  // namespace symtoric
