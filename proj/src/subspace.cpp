#include "penreg/subspace.hpp"

#include "penreg/errors.hpp"

namespace penreg {

SubspaceBasis SubspaceBasis::zero(const FieldSpec& fs, int ambient) {
    return SubspaceBasis(Matrix(fs, ambient, 0), {});
}

SubspaceBasis SubspaceBasis::full(const FieldSpec& fs, int ambient) {
    std::vector<int> pivots(ambient);
    for (int i = 0; i < ambient; ++i)
        pivots[i] = i;
    return SubspaceBasis(Matrix::identity(fs, ambient), std::move(pivots));
}

SubspaceBasis SubspaceBasis::span_of_columns(const Matrix& vectors) {
    RrefResult rr = rref(vectors.transpose());
    int d = rr.rank();
    Matrix basis(vectors.field(), vectors.rows(), d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < vectors.rows(); ++j)
            basis.at(j, i) = rr.reduced.at(i, j);
    return SubspaceBasis(std::move(basis), std::move(rr.pivots));
}

bool SubspaceBasis::contains(std::span<const FieldElement> v) const {
    if (static_cast<int>(v.size()) != ambient_dim())
        throw UsageError("vector length mismatch in contains");
    // Coefficients read off at the leading positions; v is in the span iff
    // the residual vanishes.
    std::vector<FieldElement> residual(v.begin(), v.end());
    for (int i = 0; i < dim(); ++i) {
        const FieldElement& c = residual[pivots_[i]];
        if (c.is_zero())
            continue;
        FieldElement f = c;
        for (int j = 0; j < ambient_dim(); ++j)
            residual[j] = residual[j] - f * basis_.at(j, i);
    }
    for (const FieldElement& x : residual)
        if (!x.is_zero())
            return false;
    return true;
}

SubspaceBasis image_basis(const Matrix& m) { return SubspaceBasis::span_of_columns(m); }

SubspaceBasis kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<int> free_cols;
    {
        std::size_t p = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (p < rr.pivots.size() && rr.pivots[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    Matrix vectors(m.field(), m.cols(), static_cast<int>(free_cols.size()));
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        int f = free_cols[j];
        vectors.at(f, j) = FieldElement::one(m.field());
        for (int i = 0; i < rr.rank(); ++i)
            vectors.at(rr.pivots[i], j) = -rr.reduced.at(i, f);
    }
    SubspaceBasis k = SubspaceBasis::span_of_columns(vectors);
    if (k.dim() + rr.rank() != m.cols())
        throw InternalError("rank-nullity violated in kernel_basis");
    return k;
}

SubspaceBasis preimage(const Matrix& m, const SubspaceBasis& w) {
    if (w.ambient_dim() != m.rows() || !(w.field() == m.field()))
        throw UsageError("preimage: subspace does not live in the codomain");
    Matrix neg_w(m.field(), w.ambient_dim(), w.dim());
    for (int i = 0; i < w.ambient_dim(); ++i)
        for (int j = 0; j < w.dim(); ++j)
            neg_w.at(i, j) = -w.basis().at(i, j);
    SubspaceBasis stacked_kernel = kernel_basis(Matrix::hstack(m, neg_w));
    // Project kernel vectors onto the first block (the domain of m).
    Matrix proj(m.field(), m.cols(), stacked_kernel.dim());
    for (int i = 0; i < m.cols(); ++i)
        for (int j = 0; j < stacked_kernel.dim(); ++j)
            proj.at(i, j) = stacked_kernel.basis().at(i, j);
    return SubspaceBasis::span_of_columns(proj);
}

std::vector<FieldElement> coords_in_basis(const SubspaceBasis& w,
                                          std::span<const FieldElement> v) {
    if (static_cast<int>(v.size()) != w.ambient_dim())
        throw UsageError("vector length mismatch in coords_in_basis");
    std::vector<FieldElement> coords;
    coords.reserve(w.dim());
    std::vector<FieldElement> residual(v.begin(), v.end());
    for (int i = 0; i < w.dim(); ++i) {
        FieldElement c = residual[w.leading_positions()[i]];
        coords.push_back(c);
        if (c.is_zero())
            continue;
        for (int j = 0; j < w.ambient_dim(); ++j)
            residual[j] = residual[j] - c * w.basis().at(j, i);
    }
    for (const FieldElement& x : residual)
        if (!x.is_zero())
            throw InternalError("coords_in_basis: vector outside the subspace");
    return coords;
}

SubspaceBasis extend_to_complement(const SubspaceBasis& w) {
    Matrix vectors(w.field(), w.ambient_dim(), w.ambient_dim() - w.dim());
    int j = 0;
    std::size_t p = 0;
    for (int i = 0; i < w.ambient_dim(); ++i) {
        if (p < w.leading_positions().size() && w.leading_positions()[p] == i) {
            ++p;
            continue;
        }
        vectors.at(i, j++) = FieldElement::one(w.field());
    }
    return SubspaceBasis::span_of_columns(vectors);
}

Matrix quotient_coords_batch(const SubspaceBasis& w, const SubspaceBasis& c, const Matrix& vs) {
    const int n = w.ambient_dim();
    if (c.ambient_dim() != n || !(w.field() == c.field()))
        throw UsageError("quotient_coords: mismatched ambient spaces");
    if (vs.rows() != n || !(vs.field() == w.field()))
        throw UsageError("quotient_coords: vector length mismatch");
    if (w.dim() + c.dim() != n)
        throw UsageError("quotient_coords: subspaces are not complementary (dimensions)");
    Matrix combined = Matrix::hstack(w.basis(), c.basis());
    RrefResult rr = rref(Matrix::hstack(combined, vs));
    if (rr.rank() != n)
        throw UsageError("quotient_coords: subspaces are not complementary");
    for (int i = 0; i < n; ++i)
        if (rr.pivots[i] != i)
            throw UsageError("quotient_coords: subspaces are not complementary");
    Matrix out(w.field(), c.dim(), vs.cols());
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < vs.cols(); ++j)
            out.at(i, j) = rr.reduced.at(w.dim() + i, n + j);
    return out;
}

std::vector<FieldElement> quotient_coords(const SubspaceBasis& w, const SubspaceBasis& c,
                                          std::span<const FieldElement> v) {
    Matrix vs(w.field(), w.ambient_dim(), 1);
    if (static_cast<int>(v.size()) != w.ambient_dim())
        throw UsageError("quotient_coords: vector length mismatch");
    for (int i = 0; i < w.ambient_dim(); ++i)
        vs.at(i, 0) = v[i];
    Matrix out = quotient_coords_batch(w, c, vs);
    return out.column(0);
}

} // namespace penreg
