#pragma once

#include "penreg/pencil.hpp"
#include "penreg/poly.hpp"

namespace penreg {

/// Dense matrix with polynomial entries, the carrier for xI - D and its
/// Smith reduction.
struct PolyMatrix {
    FieldSpec field;
    int rows, cols;
    std::vector<Poly> e;

    PolyMatrix(const FieldSpec& fs, int r, int c)
        : field(fs), rows(r), cols(c), e(static_cast<std::size_t>(r) * c, Poly(fs)) {}

    Poly& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    const Poly& at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
};

/// xI - D for a square matrix D.
PolyMatrix characteristic_matrix(const Matrix& d);

/// Diagonal of the Smith normal form over F[x]: monic polynomials forming
/// a divisibility chain d1 | d2 | ...; zero diagonal entries are trimmed.
std::vector<Poly> smith_form(const PolyMatrix& p);

/// The invariant-factor list of xI - D. Equal lists characterize
/// similarity over any field.
struct SimilarityClass {
    std::vector<Poly> invariant_factors; // monic, f1 | f2 | ... | fs

    friend bool operator==(const SimilarityClass& a, const SimilarityClass& b) = default;
};

SimilarityClass invariant_factors(const Matrix& d); // UsageError when not square

/// True iff the matrices have equal size and equal invariant factors of
/// xI - D, i.e. are similar.
bool similar(const Matrix& d1, const Matrix& d2);

/// Canonical pencil of a decomposition: the regular part (I_r, D) followed
/// by every singular block, sorted by kind then size.
Pencil reconstruct(const Decomposition& d);

/// Decides strict equivalence by decomposing both pencils and comparing
/// block multisets and the similarity class of the regular parts.
bool strictly_equivalent(const Pencil& p, const Pencil& q);

} // namespace penreg
