#pragma once

// Small dense matrices over exact scalars.

#include <algorithm>
#include <optional>
#include <vector>

#include "vgit/lattice.hpp"

namespace vgit {

template <class T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows = init.size();
        cols = rows ? init.begin()->size() : 0;
        for (const auto& row : init)
            for (const auto& v : row) a.push_back(v);
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    Matrix transpose() const {
        Matrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix m(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                if ((*this)(i, k) == T(0)) continue;
                for (std::size_t j = 0; j < o.cols; ++j) m(i, j) += (*this)(i, k) * o(k, j);
            }
        return m;
    }
    Matrix operator+(const Matrix& o) const {
        Matrix m = *this;
        for (std::size_t i = 0; i < a.size(); ++i) m.a[i] += o.a[i];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix m = *this;
        for (std::size_t i = 0; i < a.size(); ++i) m.a[i] -= o.a[i];
        return m;
    }
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    bool isZero() const {
        for (const auto& v : a)
            if (v != T(0)) return false;
        return true;
    }

    // columns listed in idx
    Matrix columnsOf(const std::vector<std::size_t>& idx) const {
        Matrix m(rows, idx.size());
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }
    Matrix rowsOf(const std::vector<std::size_t>& idx) const {
        Matrix m(idx.size(), cols);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }
};

using IntMatrix = Matrix<i64>;
using QMatrix = Matrix<Rational>;

inline QMatrix toRational(const IntMatrix& m) {
    QMatrix q(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rational(m.a[i]);
    return q;
}

inline bool isIntegral(const QMatrix& m) {
    for (const auto& v : m.a)
        if (boost::multiprecision::denominator(v) != 1) return false;
    return true;
}

inline QMatrix hconcat(const QMatrix& x, const QMatrix& y) {
    QMatrix m(x.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) m(i, j) = x(i, j);
        for (std::size_t j = 0; j < y.cols; ++j) m(i, x.cols + j) = y(i, j);
    }
    return m;
}

inline Rational determinant(QMatrix m) {
    const std::size_t n = m.rows;
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rational f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

// X with A X = B for square A; nullopt when A is singular
inline std::optional<QMatrix> solve(QMatrix A, QMatrix B) {
    const std::size_t n = A.rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && A(p, c) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(p, j), A(c, j));
            for (std::size_t j = 0; j < B.cols; ++j) std::swap(B(p, j), B(c, j));
        }
        Rational inv = Rational(1) / A(c, c);
        for (std::size_t j = 0; j < n; ++j) A(c, j) *= inv;
        for (std::size_t j = 0; j < B.cols; ++j) B(c, j) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || A(r, c) == 0) continue;
            Rational f = A(r, c);
            for (std::size_t j = 0; j < n; ++j) A(r, j) -= f * A(c, j);
            for (std::size_t j = 0; j < B.cols; ++j) B(r, j) -= f * B(c, j);
        }
    }
    return B;
}

// basis of {x : M x = 0}, one column per free variable
inline QMatrix nullspace(QMatrix M) {
    const std::size_t r = M.rows, n = M.cols;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < r; ++c) {
        std::size_t p = row;
        while (p < r && M(p, c) == 0) ++p;
        if (p == r) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(row, j));
        Rational inv = Rational(1) / M(row, c);
        for (std::size_t j = 0; j < n; ++j) M(row, j) *= inv;
        for (std::size_t k = 0; k < r; ++k) {
            if (k == row || M(k, c) == 0) continue;
            Rational f = M(k, c);
            for (std::size_t j = 0; j < n; ++j) M(k, j) -= f * M(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    std::vector<std::size_t> freeCols;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) freeCols.push_back(c);
    QMatrix basis(n, freeCols.size());
    for (std::size_t k = 0; k < freeCols.size(); ++k) {
        basis(freeCols[k], k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -M(i, freeCols[k]);
    }
    return basis;
}

} // namespace vgit
