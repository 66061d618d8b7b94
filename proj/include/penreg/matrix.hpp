#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "penreg/field.hpp"

namespace penreg {

/// Dense row-major matrix over a single field. Zero-dimension shapes
/// (0 x n, m x 0) are first-class values; they carry their field and act as
/// the matrices of the maps to or from the zero space.
class Matrix {
public:
    Matrix(const FieldSpec& fs, int rows, int cols); // zero-filled
    static Matrix identity(const FieldSpec& fs, int n);
    /// Builds an m x n matrix from integer entries, row major.
    static Matrix from_ints(const FieldSpec& fs, int rows, int cols,
                            const std::vector<std::vector<std::int64_t>>& e);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const FieldElement& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }
    FieldElement& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b); // UsageError on shape/field mismatch
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// M . v for a vector of length cols().
    std::vector<FieldElement> apply(std::span<const FieldElement> v) const;
    std::vector<FieldElement> column(int c) const;

    static Matrix hstack(const Matrix& a, const Matrix& b); // same rows
    static Matrix vstack(const Matrix& a, const Matrix& b); // same cols
    /// Columns of this matrix selected by index, in order.
    Matrix select_columns(const std::vector<int>& idx) const;

private:
    FieldSpec field_;
    int rows_, cols_;
    std::vector<FieldElement> e_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots; // strictly increasing pivot column indices
    int rank() const { return static_cast<int>(pivots.size()); }
};

/// Reduced row echelon form with deterministic first-nonzero pivoting.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Exact inverse. Throws SingularMatrixError (and UsageError when not square).
Matrix invert(const Matrix& m);

} // namespace penreg
