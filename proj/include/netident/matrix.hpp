#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "netident/ratfunc.hpp"

namespace netident {

namespace detail {
inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const RatFunc& x) { return x.is_zero(); }
template <class F> F field_zero() { return F(Rational(0)); }
template <class F> F field_one() { return F(Rational(1)); }
template <> inline Rational field_zero<Rational>() { return Rational(0); }
template <> inline Rational field_one<Rational>() { return Rational(1); }
} // namespace detail

/// Dense matrix over an exact field (Rational or RatFunc). All algorithms are
/// plain Gaussian elimination with first-nonzero pivoting; every step is exact,
/// so there is no notion of numerical rank or conditioning here.
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, detail::field_zero<F>()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = detail::field_one<F>();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw precondition_error("matrix product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (detail::is_zero_value(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw precondition_error("matrix difference dimension mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const {
        Matrix m(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                m(i, j) = (*this)(row_idx[i], col_idx[j]);
        return m;
    }

    bool is_zero() const {
        for (const F& x : data_)
            if (!detail::is_zero_value(x)) return false;
        return true;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<F> data_;
};

using RatMatrix = Matrix<RatFunc>;
using QMatrix = Matrix<Rational>;

/// Rank over the field, by exact forward elimination.
template <class F>
std::size_t rank(Matrix<F> m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < c && rk < r; ++col) {
        std::size_t pivot = rk;
        while (pivot < r && detail::is_zero_value(m(pivot, col))) ++pivot;
        if (pivot == r) continue;
        if (pivot != rk)
            for (std::size_t j = col; j < c; ++j) std::swap(m(pivot, j), m(rk, j));
        const F inv = detail::field_one<F>() / m(rk, col);
        for (std::size_t i = rk + 1; i < r; ++i) {
            if (detail::is_zero_value(m(i, col))) continue;
            const F factor = m(i, col) * inv;
            for (std::size_t j = col; j < c; ++j) m(i, j) -= factor * m(rk, j);
        }
        ++rk;
    }
    return rk;
}

template <class F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw precondition_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    F det = detail::field_one<F>();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && detail::is_zero_value(m(pivot, col))) ++pivot;
        if (pivot == n) return detail::field_zero<F>();
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const F inv = detail::field_one<F>() / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (detail::is_zero_value(m(i, col))) continue;
            const F factor = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

/// Exact inverse via Gauss-Jordan elimination over the field.
template <class F>
Matrix<F> inverse(Matrix<F> m) {
    if (m.rows() != m.cols()) throw precondition_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> inv = Matrix<F>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && detail::is_zero_value(m(pivot, col))) ++pivot;
        if (pivot == n) throw singular_matrix_error("matrix is singular over the function field");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const F scale = detail::field_one<F>() / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || detail::is_zero_value(m(i, col))) continue;
            const F factor = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= factor * m(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

/// Solves A X = B exactly by Gauss-Jordan elimination on [A | B].
template <class F>
Matrix<F> solve(Matrix<F> a, Matrix<F> b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw precondition_error("solve dimension mismatch");
    const std::size_t n = a.rows(), k = b.cols();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && detail::is_zero_value(a(pivot, col))) ++pivot;
        if (pivot == n) throw singular_matrix_error("matrix is singular over the function field");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            for (std::size_t j = 0; j < k; ++j) std::swap(b(pivot, j), b(col, j));
        }
        const F scale = detail::field_one<F>() / a(col, col);
        for (std::size_t j = 0; j < n; ++j) a(col, j) *= scale;
        for (std::size_t j = 0; j < k; ++j) b(col, j) *= scale;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || detail::is_zero_value(a(i, col))) continue;
            const F factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= factor * a(col, j);
            for (std::size_t j = 0; j < k; ++j) b(i, j) -= factor * b(col, j);
        }
    }
    return b;
}

/// adj(M) with adj(M) * M = det(M) * I, defined for singular matrices too.
/// Cofactor expansion for n <= 6, det(M) * M^-1 when invertible otherwise.
template <class F>
Matrix<F> adjugate(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw precondition_error("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    if (n == 1) {
        Matrix<F> a(1, 1);
        a(0, 0) = detail::field_one<F>();
        return a;
    }
    if (n > 6) {
        const F det = determinant(m);
        if (!detail::is_zero_value(det)) {
            Matrix<F> a = inverse(m);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) a(i, j) *= det;
            return a;
        }
        // singular and large: fall through to cofactors
    }
    Matrix<F> a(n, n);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> rows;
        for (std::size_t r = 0; r < n; ++r)
            if (r != i) rows.push_back(r);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> cols;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) cols.push_back(c);
            F cof = determinant(m.submatrix(rows, cols));
            if ((i + j) % 2 == 1) cof = -cof;
            a(j, i) = std::move(cof); // transposed cofactor
        }
    }
    return a;
}

/// Evaluate a rational matrix at a point; empty if any entry has a pole there.
inline std::optional<QMatrix> evaluate(const RatMatrix& m, const Rational& x) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto v = m(i, j).eval(x);
            if (!v) return std::nullopt;
            out(i, j) = std::move(*v);
        }
    return out;
}

/// Draws pole-free random rational evaluation points a/b with a, b in [1, 10^6].
inline Rational random_eval_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(1, 1000000);
    return Rational(dist(rng), dist(rng));
}

/// Normal rank: rank over the rational-function field. A pre-pass evaluates at
/// a few random rational points; evaluation rank never exceeds the normal rank,
/// so a full-rank evaluation is conclusive. Otherwise exact elimination decides.
inline std::size_t normal_rank(const RatMatrix& m, std::uint64_t seed = 0x6e657469) {
    const std::size_t full = std::min(m.rows(), m.cols());
    if (full == 0) return 0;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 3; ++attempt) {
        auto at = evaluate(m, random_eval_point(rng));
        if (at && rank(*at) == full) return full;
    }
    return rank(m);
}

} // namespace netident
