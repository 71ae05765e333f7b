#include "hermite/matrix.hpp"

#include "hermite/errors.hpp"

namespace hermite {

FieldMatrix FieldMatrix::identity(const FieldSpec& spec, std::size_t n) {
    FieldMatrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(spec);
    return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatchError("matrix product shape mismatch");
    FieldMatrix r(spec_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const FieldElement& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += aik * b;
            }
        }
    return r;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix r(spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && spec_ == o.spec_ && a_ == o.a_;
}

FieldMatrix FieldMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
    FieldMatrix m = *this;
    if (pivot_cols) pivot_cols->clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = rows_;
        for (std::size_t r = row; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
        FieldElement inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            FieldElement f = m.at(r, col);
            for (std::size_t j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return m;
}

std::size_t FieldMatrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

FieldElement FieldMatrix::determinant() const {
    if (rows_ != cols_) throw ShapeMismatchError("determinant of non-square matrix");
    FieldMatrix m = *this;
    FieldElement det = FieldElement::one(spec_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t piv = rows_;
        for (std::size_t r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv == rows_) return FieldElement::zero(spec_);
        if (piv != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        FieldElement inv = m.at(col, col).inverse();
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            FieldElement f = m.at(r, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return det;
}

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_) throw ShapeMismatchError("inverse of non-square matrix");
    FieldMatrix aug(spec_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = FieldElement::one(spec_);
    }
    std::vector<std::size_t> pivots;
    FieldMatrix red = aug.rref(&pivots);
    if (pivots.size() != rows_ || pivots.back() >= cols_)
        throw SingularMatrixError("matrix is singular");
    FieldMatrix inv(spec_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = red.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<FieldElement>> FieldMatrix::nullspace() const {
    std::vector<std::size_t> pivots;
    FieldMatrix red = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(cols_, FieldElement::zero(spec_));
        v[free] = FieldElement::one(spec_);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -red.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hermite
