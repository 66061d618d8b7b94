#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "penreg/matrix.hpp"
#include "penreg/prng.hpp"

namespace penreg {

/// The four singular block families. Enumerator order is the canonical
/// sort order used everywhere blocks are listed.
enum class BlockKind {
    IJ,   // (I_k, J_k(0)),      k x k
    JI,   // (J_k(0), I_k),      k x k
    LR,   // (L_k, R_k),     (k-1) x k
    LTRT, // (L_k^T, R_k^T),  k x (k-1)
};

const char* block_kind_name(BlockKind k); // "I_J", "J_I", "L_R", "LT_RT"
std::optional<BlockKind> block_kind_from_name(std::string_view s);
int block_rows(BlockKind kind, int k);
int block_cols(BlockKind kind, int k);

/// Multiset of singular blocks keyed by (kind, size). Stored keys always
/// carry multiplicity >= 1; an absent key means zero copies.
class BlockMultiset {
public:
    using Key = std::pair<BlockKind, int>;

    void add(BlockKind kind, int k, std::int64_t count = 1);
    std::int64_t count(BlockKind kind, int k) const;
    bool empty() const { return counts_.empty(); }
    const std::map<Key, std::int64_t>& entries() const { return counts_; }

    std::int64_t total_rows() const;
    std::int64_t total_cols() const;

    friend bool operator==(const BlockMultiset& a, const BlockMultiset& b) = default;

private:
    std::map<Key, std::int64_t> counts_;
};

/// An ordered pair (A, B) of equal-size matrices over one field.
struct Pencil {
    Matrix A, B;

    Pencil(Matrix a, Matrix b); // UsageError on shape or field mismatch

    int rows() const { return A.rows(); }
    int cols() const { return A.cols(); }
    const FieldSpec& field() const { return A.field(); }

    friend bool operator==(const Pencil& a, const Pencil& b) {
        return a.A == b.A && a.B == b.B;
    }
};

/// Canonical pair for one singular block family member; k >= 1.
/// block(LR, 1) is the 0 x 1 pair, block(LTRT, 1) the 1 x 0 pair.
Pencil block(const FieldSpec& fs, BlockKind kind, int k);

/// The regular pair (I_r, D); D must be square and nonsingular.
Pencil regular_block(const Matrix& d);

/// Block-diagonal direct sum; the empty list gives the 0 x 0 pencil.
Pencil direct_sum(const FieldSpec& fs, const std::vector<Pencil>& parts);

Pencil transpose(const Pencil& p); // (A^T, B^T)
Pencil swap(const Pencil& p);      // (B, A)

/// (S.A.R, S.B.R) for given nonsingular S, R.
Pencil apply_equivalence(const Pencil& p, const Matrix& s, const Matrix& r);

struct ScrambleResult {
    Pencil pencil;
    Matrix S, R;
};

/// Strict-equivalence scramble: draws nonsingular S (m x m) and R (n x n)
/// from the seeded generator by rejection sampling and applies them.
ScrambleResult scramble(const Pencil& p, std::uint64_t seed);

/// Uniform random matrix; rational entries are integers in [-bound, bound].
Matrix random_matrix(const FieldSpec& fs, int rows, int cols, SplitMix64& rng, int bound = 3);

/// Random nonsingular matrix by rejection sampling on exact rank.
Matrix random_nonsingular_matrix(const FieldSpec& fs, int n, SplitMix64& rng, int bound = 3);

/// Per-step dimension record (dim U, dim V).
struct DimPair {
    int u = 0, v = 0;
    friend bool operator==(const DimPair&, const DimPair&) = default;
};
using DimSequence = std::vector<DimPair>;

/// Result of a full regularizing decomposition: the singular block
/// multiset, the regular part D (up to similarity), and the per-phase
/// dimension sequences that the block counts were read from.
struct Decomposition {
    BlockMultiset blocks;
    Matrix D;
    DimSequence dims_phase1, dims_phase2, dims_phase3;

    int regular_size() const { return D.rows(); }
};

} // namespace penreg
