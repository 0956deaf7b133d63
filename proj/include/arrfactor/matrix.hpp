#pragma once

#include "arrfactor/cyclotomic.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arrfactor {

using CycVector = std::vector<CycNum>;

inline CycNum dot(const CycVector& a, const CycVector& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: length mismatch");
    }
    if (a.empty()) {
        throw std::invalid_argument("dot: empty vectors carry no field");
    }
    CycNum acc(a.front().field());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a[k].is_zero() && !b[k].is_zero()) {
            acc += a[k] * b[k];
        }
    }
    return acc;
}

/// Dense rectangular matrix over one cyclotomic field.
class CycMatrix {
public:
    CycMatrix(const CycField& field, std::size_t rows, std::size_t cols)
        : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, CycNum(field))
    {
    }

    static CycMatrix from_rows(const CycField& field, const std::vector<CycVector>& rows, std::size_t cols)
    {
        CycMatrix m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) {
                throw std::invalid_argument("CycMatrix::from_rows: ragged rows");
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (&rows[i][j].field() != &field) {
                    throw std::invalid_argument("CycMatrix::from_rows: entries must share one conductor");
                }
                m.at(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static CycMatrix identity(const CycField& field, std::size_t n)
    {
        CycMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, i) = CycNum(field, 1);
        }
        return m;
    }

    const CycField& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    CycNum& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycNum& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CycVector row(std::size_t i) const
    {
        return CycVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap(at(a, j), at(b, j));
        }
    }

private:
    const CycField* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<CycNum> data_;
};

struct RowReduction {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    CycMatrix rref; ///< reduced row echelon form; rows >= rank are zero
};

/// Gauss-Jordan elimination. In each column the pivot is the candidate entry
/// with the smallest representation (fewest nonzero coefficients, then fewest
/// bits) to keep coefficient growth down. The resulting RREF is canonical.
inline RowReduction row_reduce(CycMatrix m)
{
    RowReduction out{0, {}, m};
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        std::pair<std::size_t, std::size_t> best_size{};
        for (std::size_t i = row; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) {
                continue;
            }
            auto sz = m.at(i, col).representation_size();
            if (best == m.rows() || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == m.rows()) {
            continue;
        }
        m.swap_rows(row, best);
        if (!m.at(row, col).is_one()) {
            const CycNum inv = m.at(row, col).inverse();
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m.at(row, j).is_zero()) {
                    m.at(row, j) = m.at(row, j) * inv;
                }
            }
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) {
                continue;
            }
            const CycNum factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m.at(row, j).is_zero()) {
                    m.at(i, j) -= factor * m.at(row, j);
                }
            }
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    out.rref = std::move(m);
    return out;
}

inline std::size_t rank(const CycMatrix& m) { return row_reduce(m).rank; }

/// Basis of the right kernel {v : M v = 0}, read off the RREF: one vector per
/// free column, with a 1 in that column.
inline std::vector<CycVector> kernel_basis(const RowReduction& rr)
{
    const CycMatrix& r = rr.rref;
    std::vector<bool> is_pivot(r.cols(), false);
    for (auto c : rr.pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<CycVector> basis;
    for (std::size_t f = 0; f < r.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        CycVector v(r.cols(), CycNum(r.field()));
        v[f] = CycNum(r.field(), 1);
        for (std::size_t i = 0; i < rr.rank; ++i) {
            v[rr.pivot_cols[i]] = -r.at(i, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<CycVector> kernel_basis(const CycMatrix& m) { return kernel_basis(row_reduce(m)); }

} // namespace arrfactor
