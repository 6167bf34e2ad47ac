#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bisetkit/rational.hpp"

namespace bisetkit {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c, T init = T()) : rows_(r), cols_(c), a_(r * c, init) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += aik * o(k, j);
            }
        return out;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

/// Rank over the rationals by exact Gaussian elimination.  Pivot selection:
/// among nonzero candidates take the one of largest |num * den|, which keeps
/// intermediate entries from ballooning on the structured matrices seen here.
inline std::size_t rank_exact(Matrix<BRational> m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t best = m.rows();
        Int best_mag = 0;
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            Int mag = m(i, col).pivot_magnitude();
            if (best == m.rows() || mag > best_mag) { best = i; best_mag = mag; }
        }
        if (best == m.rows()) continue;
        m.swap_rows(r, best);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            BRational f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Fraction-free determinant (Bareiss).  Exact over the integers.
inline Int det_bareiss(Matrix<Int> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { piv = i; break; }
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t / prev;  // exact by Sylvester's identity
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

/// Characteristic polynomial coefficients, lowest degree first, leading
/// coefficient 1.  Faddeev-LeVerrier recurrence; the division by the step
/// index is exact for integer input, which we assert.
inline std::vector<Int> char_poly(const Matrix<Int>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: square matrix required");
    const std::size_t n = a.rows();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    Matrix<Int> m(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A * M_{k-1} + c_{n-k+1} * I
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        Int tr = 0;
        Matrix<Int> am = a * m;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        Int q, r;
        boost::multiprecision::divide_qr(Int(-tr), Int(k), q, r);
        if (r != 0) throw std::logic_error("char_poly: inexact division");
        c[n - k] = q;
    }
    return c;
}

/// Expand prod (x - root)^mult into coefficients, lowest degree first.
inline std::vector<Int> poly_from_roots(const std::vector<std::pair<Int, std::size_t>>& roots) {
    std::vector<Int> p{1};
    for (const auto& [root, mult] : roots)
        for (std::size_t k = 0; k < mult; ++k) {
            std::vector<Int> q(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                q[i + 1] += p[i];
                q[i] -= root * p[i];
            }
            p = std::move(q);
        }
    return p;
}

/// Z-basis of { x : A x = 0 } via unimodular column reduction.  The returned
/// vectors generate the full integer kernel (a saturated sublattice), not just
/// a finite-index subgroup of it.
inline std::vector<std::vector<Int>> integer_kernel(const Matrix<Int>& a) {
    const std::size_t m = a.rows(), n = a.cols();
    Matrix<Int> w = a;
    Matrix<Int> u = Matrix<Int>::identity(n);
    std::size_t r = 0;
    auto add_col = [&](Matrix<Int>& mat, std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < mat.rows(); ++i) mat(i, dst) -= q * mat(i, src);
    };
    for (std::size_t row = 0; row < m && r < n; ++row) {
        while (true) {
            std::size_t piv = n;
            Int piv_abs = 0;
            for (std::size_t j = r; j < n; ++j) {
                if (w(row, j) == 0) continue;
                Int mag = boost::multiprecision::abs(w(row, j));
                if (piv == n || mag < piv_abs) { piv = j; piv_abs = mag; }
            }
            if (piv == n) break;  // nothing left in this row
            if (piv != r) { w.swap_cols(piv, r); u.swap_cols(piv, r); }
            bool clean = true;
            for (std::size_t j = r + 1; j < n; ++j) {
                if (w(row, j) == 0) continue;
                Int q = w(row, j) / w(row, r);
                if (q != 0) { add_col(w, j, r, q); add_col(u, j, r, q); }
                if (w(row, j) != 0) clean = false;
            }
            if (clean) { ++r; break; }
        }
    }
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = r; j < n; ++j) {
        std::vector<Int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = u(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace bisetkit
