#pragma once

#include <cstddef>
#include <vector>

#include "hermite/field.hpp"

namespace hermite {

// Dense matrix of exact field elements. Pivoting always picks the first
// nonzero entry in column order, so every elimination result is
// deterministic.
class FieldMatrix {
public:
    FieldMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
        : spec_(spec), rows_(rows), cols_(cols),
          a_(rows * cols, FieldElement::zero(spec)) {}

    static FieldMatrix identity(const FieldSpec& spec, std::size_t n);

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix transposed() const;
    bool operator==(const FieldMatrix& o) const;

    // Row echelon by Gaussian elimination (copy); returns pivot columns.
    FieldMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
    std::size_t rank() const;
    FieldElement determinant() const;          // square only
    FieldMatrix inverse() const;               // throws SingularMatrixError
    // Basis of the right nullspace, canonicalized (each vector is a column).
    std::vector<std::vector<FieldElement>> nullspace() const;

private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

} // namespace hermite
