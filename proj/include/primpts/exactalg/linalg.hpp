#ifndef PRIMPTS_EXACTALG_LINALG_HPP
#define PRIMPTS_EXACTALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "primpts/exactalg/rational.hpp"

namespace primpts {

using RatVector = std::vector<Rational>;

/// Row-major dense matrix over the rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void append_row(const RatVector& row)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = row.size();
        if (row.size() != cols_)
            fail(ErrorKind::InvalidInput, "row length mismatch");
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

    static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t height)
    {
        RatMatrix m(height, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < height && r < cols[c].size(); ++r)
                m(r, c) = cols[c][r];
        return m;
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && sgn(m(piv, col)) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        m.swap_rows(row, piv);
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0)
                continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RatMatrix m) { return rref(m).size(); }

/// Basis of the right null space {v : M v = 0}; one vector per free column,
/// with a 1 in that column.
inline std::vector<RatVector> kernel(RatMatrix m)
{
    const std::size_t n = m.cols();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        RatVector v(n);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution of M x = b, if one exists.
inline std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b)
{
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto pivots = rref(aug);
    RatVector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols())
            return std::nullopt;
        x[pivots[r]] = aug(r, m.cols());
    }
    return x;
}

/// Canonical echelon basis of the span of the given vectors.
inline std::vector<RatVector> echelon_basis(const std::vector<RatVector>& vs)
{
    if (vs.empty())
        return {};
    RatMatrix m(vs.size(), vs[0].size());
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t c = 0; c < vs[r].size(); ++c)
            m(r, c) = vs[r][c];
    auto pivots = rref(m);
    std::vector<RatVector> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        RatVector v(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c)
            v[c] = m(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace primpts

#endif // PRIMPTS_EXACTALG_LINALG_HPP
