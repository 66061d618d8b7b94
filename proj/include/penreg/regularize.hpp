#pragma once

#include "penreg/pencil.hpp"
#include "penreg/subspace.hpp"

namespace penreg {

/// A pair of linear maps U -> V written in the current bases: A and B are
/// v_dim x u_dim matrices over one field.
struct PairPresentation {
    Matrix A, B;

    PairPresentation(Matrix a, Matrix b); // UsageError on shape or field mismatch

    int u_dim() const { return A.cols(); }
    int v_dim() const { return A.rows(); }
    const FieldSpec& field() const { return A.field(); }

    bool a_surjective() const;
    bool b_surjective() const;
    bool b_bijective() const;

    friend bool operator==(const PairPresentation& a, const PairPresentation& b) {
        return a.A == b.A && a.B == b.B;
    }
};

/// Dimension sequence of one phase: one (dim U, dim V) entry per pair in
/// the phase, from the input pair through the first pair passing the
/// phase's termination test, followed by two stationary repeats so the
/// j+1 and j+2 indices in the counting formulas are always defined.
struct PhaseTrace {
    DimSequence dims;

    int recorded_steps() const { return static_cast<int>(dims.size()) - 2; }
};

/// Restriction to (A^-1(im B), im B); A and B become the induced maps.
PairPresentation transform1(const PairPresentation& p);

/// Restriction to (B^-1(im A), im A). Requires B surjective (UsageError).
PairPresentation transform2(const PairPresentation& p);

/// Quotient by (ker B, A(ker B)). Requires A and B surjective (UsageError).
PairPresentation transform3(const PairPresentation& p);

struct PhaseResult {
    PairPresentation final;
    PhaseTrace trace;
};

/// Iterates the phase's transformation until its termination test holds:
/// B surjective (phase 1), A surjective (phase 2), B bijective (phase 3).
/// Records dimensions at every pair including the first and last.
PhaseResult run_phase(const PairPresentation& start, int phase);

/// The four counting formulas evaluated on the recorded dimension
/// sequences. Every count must come out nonnegative (InternalError).
///
/// For 1 <= j < l_i, with (u_i[j], v_i[j]) the phase-i dimensions:
///   phase 1:  (v1[j]-v1[j+1]) - (u1[j]-u1[j+1])    copies of (L_j^T, R_j^T)
///             (u1[j]-u1[j+1]) - (v1[j+1]-v1[j+2])  copies of (I_j, J_j(0))
///   phase 2:  v2[j] - 2 v2[j+1] + v2[j+2]          copies of (J_j(0), I_j)
///   phase 3:  u3[j] - 2 u3[j+1] + u3[j+2]          copies of (L_j, R_j)
BlockMultiset count_blocks(const PhaseTrace& phase1, const PhaseTrace& phase2,
                           const PhaseTrace& phase3);

/// Normalizes the final regular pair (A, B) to D = A^-1 B, so that the
/// pair is equivalent to (I_r, D). InternalError if the pair is not a
/// pair of bijections.
Matrix extract_regular(const PairPresentation& final);

/// Full regularizing decomposition of an arbitrary pencil: runs the three
/// phases in order, reads the block multiset off the dimension sequences,
/// and extracts the regular part.
Decomposition decompose(const Pencil& p);

} // namespace penreg
