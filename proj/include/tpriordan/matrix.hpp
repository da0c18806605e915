#pragma once

#include "tpriordan/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tpr {

/// Dense exact-rational matrix, row-major. Truncations of the infinite
/// arrays are square; production-matrix slices and minors need not be.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Square zero matrix.
    explicit Matrix(std::size_t size) : Matrix(size, size) {}
    /// From explicit rows; short rows are padded with zeros to the longest.
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix identity(std::size_t size);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const Rational> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    /// Rows [first, first + count) and columns [0, cols).
    Matrix block(std::size_t first_row, std::size_t row_count, std::size_t first_col,
                 std::size_t col_count) const;
    Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    bool is_lower_triangular() const;
    /// Smallest u with entry(i, j) = 0 whenever j > i + u (0 for lower triangular).
    std::size_t upper_bandwidth() const;
    /// Smallest l with entry(i, j) = 0 whenever i > j + l.
    std::size_t lower_bandwidth() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Block-diagonal [a 0; 0 b].
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Exact determinant of a square matrix: cofactor expansion through order 4,
/// fraction-free (Bareiss) elimination above.
Rational determinant(const Matrix& m);

/// Determinant of a k-by-k row-major buffer; the buffer is used as scratch.
Rational determinant_in_place(std::span<Rational> buffer, std::size_t k);

} // namespace tpr
