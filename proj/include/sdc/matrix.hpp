#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sdc/field.hpp"

namespace sdc {

/// Dense row-major matrix over an exact field context F.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero())
    {
    }

    static Matrix identity(F field, std::size_t n)
    {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = field.one();
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (const Elem& x : a_)
            if (!field_.is_zero(x))
                return false;
        return true;
    }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<Elem> col(std::size_t j) const
    {
        std::vector<Elem> v(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = at(i, j);
        return v;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots; // strictly increasing pivot column indices
    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

// Pivot choice shared by the serial and OpenMP paths: first nonzero entry
// scanning down the current column, so both reduce identically.
template <class F>
std::size_t find_pivot(const Matrix<F>& m, std::size_t r, std::size_t c)
{
    for (std::size_t i = r; i < m.rows(); ++i)
        if (!m.field().is_zero(m.at(i, c)))
            return i;
    return m.rows();
}

template <class F>
void swap_normalize_row(Matrix<F>& m, std::size_t r, std::size_t pivot, std::size_t c)
{
    const F& k = m.field();
    if (pivot != r)
        for (std::size_t j = c; j < m.cols(); ++j)
            std::swap(m.at(r, j), m.at(pivot, j));
    typename F::Elem piv_inv = k.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j)
        m.at(r, j) = k.mul(m.at(r, j), piv_inv);
}

} // namespace detail

/// Serial reference Gauss-Jordan elimination, kept for testing and benchmarks.
template <class F>
RrefResult<F> rref_serial(Matrix<F> m)
{
    const F& k = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = detail::find_pivot(m, r, c);
        if (pivot == m.rows())
            continue;
        detail::swap_normalize_row(m, r, pivot, c);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r)
                continue;
            const typename F::Elem f = m.at(i, c);
            if (k.is_zero(f))
                continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult<F>{std::move(m), std::move(pivots)};
}

/// Gauss-Jordan elimination with the row-update loop under OpenMP.
template <class F>
RrefResult<F> rref(Matrix<F> m)
{
    const F& k = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = detail::find_pivot(m, r, c);
        if (pivot == rows)
            continue;
        detail::swap_normalize_row(m, r, pivot, c);
        const long long nrows = static_cast<long long>(rows);
#pragma omp parallel for schedule(static) if (rows * cols >= 4096)
        for (long long ii = 0; ii < nrows; ++ii) {
            const std::size_t i = static_cast<std::size_t>(ii);
            if (i == r)
                continue;
            const typename F::Elem f = m.at(i, c);
            if (k.is_zero(f))
                continue;
            for (std::size_t j = c; j < cols; ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult<F>{std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m)
{
    return rref(m).pivots.size();
}

/// Serial reference matrix product.
template <class F>
Matrix<F> matmul_serial(const Matrix<F>& a, const Matrix<F>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree");
    const F& k = a.field();
    Matrix<F> c(k, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const typename F::Elem& x = a.at(i, l);
            if (k.is_zero(x))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!k.is_zero(b.at(l, j)))
                    c.at(i, j) = k.add(c.at(i, j), k.mul(x, b.at(l, j)));
        }
    return c;
}

/// Matrix product with the outer row loop under OpenMP.
template <class F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree");
    const F& k = a.field();
    Matrix<F> c(k, a.rows(), b.cols());
    const long long nrows = static_cast<long long>(a.rows());
#pragma omp parallel for schedule(static) if (a.rows() * b.cols() >= 4096)
    for (long long ii = 0; ii < nrows; ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const typename F::Elem& x = a.at(i, l);
            if (k.is_zero(x))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!k.is_zero(b.at(l, j)))
                    c.at(i, j) = k.add(c.at(i, j), k.mul(x, b.at(l, j)));
        }
    }
    return c;
}

/// Columns form a basis of the right null space: M * K = 0,
/// with cols(K) = cols(M) - rank(M).
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m)
{
    const F& k = m.field();
    RrefResult<F> rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix<F> ker(k, cols, free_cols.size());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        ker.at(fc, fi) = k.one();
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            ker.at(rr.pivots[r], fi) = k.neg(rr.reduced.at(r, fc));
    }
    return ker;
}

/// Solve M * X = B. Returns nullopt when inconsistent. A row-count mismatch
/// is a usage error, reported as an exception rather than "no solution".
template <class F>
std::optional<Matrix<F>> solve_right(const Matrix<F>& m, const Matrix<F>& b)
{
    if (m.rows() != b.rows())
        throw std::invalid_argument("solve_right: row counts disagree");
    const F& k = m.field();
    Matrix<F> aug(k, m.rows(), m.cols() + b.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            aug.at(i, m.cols() + j) = b.at(i, j);
    }
    RrefResult<F> rr = rref(std::move(aug));
    for (std::size_t c : rr.pivots)
        if (c >= m.cols())
            return std::nullopt;
    Matrix<F> x(k, m.cols(), b.cols());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(rr.pivots[r], j) = rr.reduced.at(r, m.cols() + j);
    return x;
}

/// Incrementally maintained reduced row basis of a subspace of k^width.
/// Rows are kept in echelon form with unit pivots and back-substituted tails,
/// ordered by pivot column.
template <class F>
class RowBasis {
public:
    using Elem = typename F::Elem;

    RowBasis(F field, std::size_t width) : field_(field), width_(width) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<Elem>& row(std::size_t i) const { return rows_[i]; }

    /// Residue of v after eliminating against the basis; zero iff v is in the span.
    std::vector<Elem> reduce(std::vector<Elem> v) const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Elem f = v[pivots_[i]];
            if (field_.is_zero(f))
                continue;
            const std::vector<Elem>& r = rows_[i];
            for (std::size_t j = pivots_[i]; j < width_; ++j)
                if (!field_.is_zero(r[j]))
                    v[j] = field_.sub(v[j], field_.mul(f, r[j]));
        }
        return v;
    }

    bool contains(const std::vector<Elem>& v) const
    {
        std::vector<Elem> r = reduce(v);
        for (const Elem& x : r)
            if (!field_.is_zero(x))
                return false;
        return true;
    }

    /// Insert v; returns true when the span grew.
    bool insert(std::vector<Elem> v)
    {
        if (v.size() != width_)
            throw std::invalid_argument("RowBasis::insert: width mismatch");
        v = reduce(std::move(v));
        std::size_t p = width_;
        for (std::size_t j = 0; j < width_; ++j) {
            if (!field_.is_zero(v[j])) {
                p = j;
                break;
            }
        }
        if (p == width_)
            return false;
        Elem inv = field_.inv(v[p]);
        for (std::size_t j = p; j < width_; ++j)
            v[j] = field_.mul(v[j], inv);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Elem c = rows_[i][p];
            if (field_.is_zero(c))
                continue;
            for (std::size_t j = p; j < width_; ++j)
                rows_[i][j] = field_.sub(rows_[i][j], field_.mul(c, v[j]));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p)
            ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    void insert_matrix_cols(const Matrix<F>& m)
    {
        for (std::size_t j = 0; j < m.cols(); ++j)
            insert(m.col(j));
    }

    /// Coordinates not used as pivots; their classes form a basis of the quotient.
    std::vector<std::size_t> complement() const
    {
        std::vector<bool> is_pivot(width_, false);
        for (std::size_t p : pivots_)
            is_pivot[p] = true;
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < width_; ++j)
            if (!is_pivot[j])
                out.push_back(j);
        return out;
    }

private:
    F field_;
    std::size_t width_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace sdc
