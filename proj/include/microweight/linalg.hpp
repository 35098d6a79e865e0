#pragma once

// Dense exact linear algebra over a field. Only what the geometry needs:
// row reduction, rank, solving, inversion and null spaces. Matrices are
// small (at most a few hundred rows, ambient dimension <= ~16).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace microweight {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < m.rows_; ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols)
    {
        return from_rows(cols).transposed();
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const
    {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

    std::vector<T> column(std::size_t c) const
    {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    std::vector<T> operator*(const std::vector<T>& v) const
    {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix-matrix size mismatch");
        Matrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(r, k) == 0) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += (*this)(r, k) * o(k, c);
            }
        return out;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
        const T inv = T(1) / m(lead_row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c) == 0) continue;
            const T f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead_row, k);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m)
{
    return row_reduce(m).size();
}

/// Rank of a list of vectors (as rows).
template <class T>
std::size_t rank_of(const std::vector<std::vector<T>>& vectors)
{
    if (vectors.empty()) return 0;
    return rank(Matrix<T>::from_rows(vectors));
}

/// Some solution x of A x = b, or nullopt when inconsistent. Free variables
/// are set to zero.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b)
{
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<T> x(a.cols(), T(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

/// Inverse of a square matrix; throws PreconditionError when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = a.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = T(1);
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
    Matrix<T> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

/// Basis of { x : A x = 0 }.
template <class T>
std::vector<std::vector<T>> null_space(Matrix<T> a)
{
    const auto pivots = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(a.cols(), T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Indices of a greedy maximal linearly independent subsequence.
template <class T>
std::vector<std::size_t> independent_subset(const std::vector<std::vector<T>>& vectors)
{
    std::vector<std::size_t> picked;
    std::vector<std::vector<T>> echelon; // kept reduced against its own pivots
    std::vector<std::size_t> pivot_cols;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        std::vector<T> v = vectors[i];
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const T f = v[pivot_cols[k]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * echelon[k][c];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) continue;
        const T inv = T(1) / v[p];
        for (auto& x : v) x *= inv;
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const T f = echelon[k][p];
            if (f == 0) continue;
            for (std::size_t c = 0; c < v.size(); ++c) echelon[k][c] -= f * v[c];
        }
        echelon.push_back(std::move(v));
        pivot_cols.push_back(p);
        picked.push_back(i);
    }
    return picked;
}

} // namespace microweight
