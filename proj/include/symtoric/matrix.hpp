#pragma once

#include "symtoric/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace symtoric {

/// Dense matrix over an exact scalar (Int or Rat). Row-major.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw input_error("matrix: ragged initializer");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    /// row i += c * row j
    void add_row(std::size_t i, std::size_t j, const T& c) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
    }
    /// col i += c * col j
    void add_col(std::size_t i, std::size_t j, const T& c) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
    }
    void scale_row(std::size_t i, const T& c) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) *= c;
    }
    void scale_col(std::size_t j, const T& c) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) *= c;
    }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw input_error("matrix product: inner dimension mismatch");
        Matrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw input_error("matrix apply: dimension mismatch");
        std::vector<T> w(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T s = 0;
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
            w[i] = std::move(s);
        }
        return w;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return q;
}

/// Exact determinant of a square integer matrix, Bareiss fraction-free
/// elimination (all intermediate values stay integral).
inline Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("determinant: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Reduced row echelon form over the rationals. Returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        Rat inv = Rat(1) / m(r, c);
        m.scale_row(r, inv);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m(i, c) != 0) m.add_row(i, r, Rat(-m(i, c)));
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Rank over the rationals, exact.
inline std::size_t rational_rank(const IntMatrix& m) {
    RatMatrix q = to_rational(m);
    return rref(q).size();
}

inline std::size_t rational_rank(const RatMatrix& m) {
    RatMatrix q = m;
    return rref(q).size();
}

///// Basis of the rational kernel {x : m x = 0}, each vector scaled to a
/// primitive integer vector. Columns of the returned matrix, deterministic
/// (derived from the RREF free variables in increasing column order).
inline IntMatrix rational_kernel_basis(const IntMatrix& m) {
    RatMatrix q = to_rational(m);
    std::vector<std::size_t> pivots = rref(q);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t k = m.cols() - pivots.size();
    IntMatrix ker(m.cols(), k);
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -q(r, free);
        std::vector<Int> w = primitive(v);
        for (std::size_t i = 0; i < m.cols(); ++i) ker(i, out) = w[i];
        ++out;
    }
    return ker;
}

}  // namespace symtoric
