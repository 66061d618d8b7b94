#include "penreg/matrix.hpp"

#include "penreg/errors.hpp"

namespace penreg {

Matrix::Matrix(const FieldSpec& fs, int rows, int cols)
    : field_(fs), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw UsageError("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * cols, FieldElement::zero(fs));
}

Matrix Matrix::identity(const FieldSpec& fs, int n) {
    Matrix m(fs, n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = FieldElement::one(fs);
    return m;
}

Matrix Matrix::from_ints(const FieldSpec& fs, int rows, int cols,
                         const std::vector<std::vector<std::int64_t>>& e) {
    if (static_cast<int>(e.size()) != rows)
        throw UsageError("row count mismatch in from_ints");
    Matrix m(fs, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(e[i].size()) != cols)
            throw UsageError("column count mismatch in from_ints");
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = FieldElement::from_int(fs, e[i][j]);
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const FieldElement& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_))
        throw UsageError("matrix product over mixed fields");
    if (a.cols_ != b.rows_)
        throw UsageError("matrix product shape mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const FieldElement& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j) {
                const FieldElement& bkj = b.at(k, j);
                if (!bkj.is_zero())
                    r.at(i, j) = r.at(i, j) + aik * bkj;
            }
        }
    }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    return a.e_ == b.e_;
}

std::vector<FieldElement> Matrix::apply(std::span<const FieldElement> v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw UsageError("vector length mismatch in apply");
    std::vector<FieldElement> r(rows_, FieldElement::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                r[i] = r[i] + at(i, j) * v[j];
    return r;
}

std::vector<FieldElement> Matrix::column(int c) const {
    std::vector<FieldElement> r;
    r.reserve(rows_);
    for (int i = 0; i < rows_; ++i)
        r.push_back(at(i, c));
    return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()) || a.rows() != b.rows())
        throw UsageError("hstack shape/field mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j)
            r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()) || a.cols() != b.cols())
        throw UsageError("vstack shape/field mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i)
            r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i)
            r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::select_columns(const std::vector<int>& idx) const {
    Matrix r(field_, rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < r.cols(); ++j) {
        assert(idx[j] >= 0 && idx[j] < cols_);
        for (int i = 0; i < rows_; ++i)
            r.at(i, j) = at(i, idx[j]);
    }
    return r;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int pivot_row = -1;
        for (int i = row; i < r.rows(); ++i) {
            if (!r.at(i, col).is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0)
            continue;
        if (pivot_row != row)
            for (int j = col; j < r.cols(); ++j)
                std::swap(r.at(row, j), r.at(pivot_row, j));
        FieldElement inv_p = r.at(row, col).inv();
        for (int j = col; j < r.cols(); ++j)
            r.at(row, j) = r.at(row, j) * inv_p;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero())
                continue;
            FieldElement f = r.at(i, col);
            for (int j = col; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - f * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(r), std::move(pivots)};
}

int rank(const Matrix& m) { return rref(m).rank(); }

Matrix invert(const Matrix& m) {
    if (!m.is_square())
        throw UsageError("invert on a non-square matrix");
    int n = m.rows();
    RrefResult rr = rref(Matrix::hstack(m, Matrix::identity(m.field(), n)));
    if (rr.rank() < n || (n > 0 && rr.pivots.back() >= n))
        throw SingularMatrixError();
    Matrix inv(m.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = rr.reduced.at(i, n + j);
#ifndef NDEBUG
    assert(m * inv == Matrix::identity(m.field(), n));
#endif
    return inv;
}

} // namespace penreg
