#pragma once

#include <span>
#include <vector>

#include "penreg/matrix.hpp"

namespace penreg {

/// A subspace of F^ambient held as an ambient x d basis matrix whose
/// transpose is in reduced row echelon form. The canonical form makes
/// subspace equality plain representation equality: two spans are equal
/// iff their SubspaceBasis values compare equal.
class SubspaceBasis {
public:
    static SubspaceBasis zero(const FieldSpec& fs, int ambient);
    static SubspaceBasis full(const FieldSpec& fs, int ambient);
    /// Canonical basis of the span of the given column vectors.
    static SubspaceBasis span_of_columns(const Matrix& vectors);

    int ambient_dim() const { return basis_.rows(); }
    int dim() const { return basis_.cols(); }
    const FieldSpec& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    /// Leading nonzero index of each basis vector, strictly increasing.
    const std::vector<int>& leading_positions() const { return pivots_; }

    bool contains(std::span<const FieldElement> v) const;

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.basis_ == b.basis_;
    }

private:
    SubspaceBasis(Matrix basis, std::vector<int> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;            // ambient x d, canonical
    std::vector<int> pivots_; // length d
};

/// Canonical basis of the column space.
SubspaceBasis image_basis(const Matrix& m);

/// Canonical basis of { x : Mx = 0 }. Dimension is cols - rank by
/// rank-nullity, which is verified.
SubspaceBasis kernel_basis(const Matrix& m);

/// Canonical basis of { u : Mu in span(W) }, computed from the kernel of
/// the stacked matrix [M | -W.basis]. Throws UsageError when W does not
/// live in the codomain of M.
SubspaceBasis preimage(const Matrix& m, const SubspaceBasis& w);

/// The unique coefficients c with W.basis . c = v. A vector outside the
/// span is a contract violation (InternalError): callers are expected to
/// pass members of the subspace.
std::vector<FieldElement> coords_in_basis(const SubspaceBasis& w,
                                          std::span<const FieldElement> v);

/// Deterministic complement: the standard basis vectors at the non-leading
/// positions of W. span(W) (+) span(result) = F^ambient.
SubspaceBasis extend_to_complement(const SubspaceBasis& w);

/// The C-component of v in the decomposition v = w + c with w in span(W)
/// and c in span(C); i.e. coordinates of the coset v + span(W). Throws
/// UsageError when (W, C) is not a complementary pair.
std::vector<FieldElement> quotient_coords(const SubspaceBasis& w, const SubspaceBasis& c,
                                          std::span<const FieldElement> v);

/// Column-batched quotient_coords: column j of the result holds the
/// quotient coordinates of column j of vs.
Matrix quotient_coords_batch(const SubspaceBasis& w, const SubspaceBasis& c, const Matrix& vs);

} // namespace penreg
