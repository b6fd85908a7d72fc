/*
   Copyright 2026 The recip Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file linalg.hpp
 * @brief Small dense matrices over a Field with exact Gaussian elimination.
 */

#ifndef RECIP_LINALG_HPP
#define RECIP_LINALG_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ff.hpp"

namespace recip {

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    static Matrix from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
        }
        return m;
    }

    /// Columns given as vectors of equal length.
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<std::vector<Element>>& cols) {
        Matrix m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Element& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Element> column(std::size_t j) const {
        std::vector<Element> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix m(field_, rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix m(field_, idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }

    /// [this | other].
    Matrix hcat(const Matrix& other) const {
        if (other.rows_ != rows_) throw std::invalid_argument("hcat: row mismatch");
        Matrix m(field_, rows_, cols_ + other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
        }
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        Matrix m(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
            }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::size_t rank() const { return echelon().rank; }

    Element det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
        auto e = echelon();
        return e.rank == rows_ ? e.det : field_.zero();
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    Matrix inverse() const {
        if (!is_invertible()) throw FieldError("matrix is not invertible");
        Matrix aug = hcat(identity(field_, rows_));
        aug.echelon_in_place(true);
        Matrix inv(field_, rows_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j) inv(i, j) = aug(i, rows_ + j);
        return inv;
    }

    /// Basis of {x : A x = 0}, as columns.
    Matrix nullspace() const {
        Matrix r = *this;
        const auto pivots = r.echelon_in_place(true).pivots;
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Element>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Element> v(cols_, field_.zero());
            v[free] = field_.one();
            for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
            basis.push_back(std::move(v));
        }
        return from_columns(field_, cols_, basis);
    }

    Matrix transpose() const {
        Matrix m(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    /// Indices of the pivot columns: the greedy ascending choice of a
    /// maximal independent set of columns.
    std::vector<std::size_t> pivot_columns() const { return echelon().pivots; }

    /// Greedy ascending choice of a maximal independent set of rows.
    std::vector<std::size_t> independent_rows() const { return transpose().pivot_columns(); }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).to_string();
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    struct Echelon {
        std::size_t rank = 0;
        Element det;
        std::vector<std::size_t> pivots;
    };

    Echelon echelon() const {
        Matrix copy = *this;
        return copy.echelon_in_place(false);
    }

    // Row reduction; `reduced` clears above pivots and normalizes them to 1.
    // det tracks the product of pivots and row swaps (meaningful when square).
    Echelon echelon_in_place(bool reduced) {
        Echelon e;
        e.det = field_.one();
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && (*this)(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            if (piv != row) {
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(row, j));
                e.det = -e.det;
            }
            const Element p = (*this)(row, col);
            e.det *= p;
            const Element pinv = p.inv();
            if (reduced) {
                for (std::size_t j = 0; j < cols_; ++j) (*this)(row, j) *= pinv;
            }
            for (std::size_t i = reduced ? 0 : row + 1; i < rows_; ++i) {
                if (i == row || (*this)(i, col).is_zero()) continue;
                const Element s = reduced ? (*this)(i, col) : (*this)(i, col) * pinv;
                for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= s * (*this)(row, j);
            }
            e.pivots.push_back(col);
            ++row;
        }
        e.rank = row;
        return e;
    }

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> a_;
};

}  // namespace recip

#endif  // RECIP_LINALG_HPP
