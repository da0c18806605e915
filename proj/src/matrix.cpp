#include "tpriordan/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace tpr {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t width = 0;
    for (const auto& r : rows) {
        width = std::max(width, r.size());
    }
    Matrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::identity(std::size_t size) {
    Matrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::block(std::size_t first_row, std::size_t row_count, std::size_t first_col,
                     std::size_t col_count) const {
    if (first_row + row_count > rows_ || first_col + col_count > cols_) {
        throw Error("block out of range");
    }
    Matrix out(row_count, col_count);
    for (std::size_t i = 0; i < row_count; ++i) {
        for (std::size_t j = 0; j < col_count; ++j) {
            out(i, j) = (*this)(first_row + i, first_col + j);
        }
    }
    return out;
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out(i, j) = (*this)(rows[i], cols[j]);
        }
    }
    return out;
}

bool Matrix::is_lower_triangular() const {
    return upper_bandwidth() == 0;
}

std::size_t Matrix::upper_bandwidth() const {
    std::size_t u = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != 0) {
                u = std::max(u, j - i);
            }
        }
    }
    return u;
}

std::size_t Matrix::lower_bandwidth() const {
    std::size_t l = 0;
    for (std::size_t i = 1; i < rows_; ++i) {
        for (std::size_t j = 0; j < std::min(i, cols_); ++j) {
            if ((*this)(i, j) != 0) {
                l = std::max(l, i - j);
            }
        }
    }
    return l;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw Error("matrix shape mismatch: " + std::to_string(a.cols()) + " columns times " +
                    std::to_string(b.rows()) + " rows");
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            out(a.rows() + i, a.cols() + j) = b(i, j);
        }
    }
    return out;
}

namespace {

using Span = std::span<const Rational>;

Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return a * d - b * c;
}

Rational det3(Span m) {
    return m[0] * det2(m[4], m[5], m[7], m[8]) - m[1] * det2(m[3], m[5], m[6], m[8]) +
           m[2] * det2(m[3], m[4], m[6], m[7]);
}

Rational det4(Span m) {
    // Laplace expansion along the first two rows.
    const Rational s0 = det2(m[0], m[1], m[4], m[5]);
    const Rational s1 = det2(m[0], m[2], m[4], m[6]);
    const Rational s2 = det2(m[0], m[3], m[4], m[7]);
    const Rational s3 = det2(m[1], m[2], m[5], m[6]);
    const Rational s4 = det2(m[1], m[3], m[5], m[7]);
    const Rational s5 = det2(m[2], m[3], m[6], m[7]);
    const Rational c5 = det2(m[8], m[9], m[12], m[13]);
    const Rational c4 = det2(m[8], m[10], m[12], m[14]);
    const Rational c3 = det2(m[8], m[11], m[12], m[15]);
    const Rational c2 = det2(m[9], m[10], m[13], m[14]);
    const Rational c1 = det2(m[9], m[11], m[13], m[15]);
    const Rational c0 = det2(m[10], m[11], m[14], m[15]);
    return s0 * c0 - s1 * c1 + s2 * c2 + s3 * c3 - s4 * c4 + s5 * c5;
}

Rational bareiss(std::span<Rational> a, std::size_t n) {
    int sign_flip = 1;
    Rational prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[k * n + j], a[p * n + j]);
            }
            sign_flip = -sign_flip;
        }
        const Rational pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = (pivot * a[i * n + j] - a[i * n + k] * a[k * n + j]) / prev;
            }
        }
        prev = pivot;
    }
    Rational det = a[n * n - 1];
    return sign_flip < 0 ? Rational(-det) : det;
}

} // namespace

Rational determinant_in_place(std::span<Rational> buffer, std::size_t k) {
    if (buffer.size() < k * k) {
        throw Error("determinant buffer too small");
    }
    switch (k) {
    case 0:
        return 1;
    case 1:
        return buffer[0];
    case 2:
        return det2(buffer[0], buffer[1], buffer[2], buffer[3]);
    case 3:
        return det3(buffer);
    case 4:
        return det4(buffer);
    default:
        return bareiss(buffer, k);
    }
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) {
        throw Error("determinant of a non-square matrix");
    }
    std::vector<Rational> buffer(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            buffer[i * m.cols() + j] = m(i, j);
        }
    }
    return determinant_in_place(buffer, m.rows());
}

} // namespace tpr
