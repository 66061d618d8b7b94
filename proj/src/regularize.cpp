#include "penreg/regularize.hpp"

#include <algorithm>

#include "penreg/errors.hpp"

namespace penreg {

PairPresentation::PairPresentation(Matrix a, Matrix b) : A(std::move(a)), B(std::move(b)) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw UsageError("pair presentation matrices must have identical dimensions");
    if (!(A.field() == B.field()))
        throw UsageError("pair presentation matrices must share one field");
}

bool PairPresentation::a_surjective() const { return rank(A) == v_dim(); }
bool PairPresentation::b_surjective() const { return rank(B) == v_dim(); }
bool PairPresentation::b_bijective() const { return u_dim() == v_dim() && rank(B) == v_dim(); }

namespace {

// Restriction of (A, B) to domain basis U2 and codomain basis V2. Both
// maps must send span(U2) into span(V2); coords_in_basis raises an
// InternalError otherwise, which is exactly the well-definedness assertion.
PairPresentation restrict_to(const Matrix& a, const Matrix& b, const SubspaceBasis& u2,
                             const SubspaceBasis& v2) {
    Matrix new_a(a.field(), v2.dim(), u2.dim());
    Matrix new_b(a.field(), v2.dim(), u2.dim());
    for (int j = 0; j < u2.dim(); ++j) {
        std::vector<FieldElement> w = u2.basis().column(j);
        std::vector<FieldElement> au = coords_in_basis(v2, a.apply(w));
        std::vector<FieldElement> bu = coords_in_basis(v2, b.apply(w));
        for (int i = 0; i < v2.dim(); ++i) {
            new_a.at(i, j) = au[i];
            new_b.at(i, j) = bu[i];
        }
    }
    return PairPresentation(std::move(new_a), std::move(new_b));
}

} // namespace

PairPresentation transform1(const PairPresentation& p) {
    SubspaceBasis v2 = image_basis(p.B);
    SubspaceBasis u2 = preimage(p.A, v2);
    return restrict_to(p.A, p.B, u2, v2);
}

PairPresentation transform2(const PairPresentation& p) {
    if (!p.b_surjective())
        throw UsageError("transform2 requires B surjective");
    SubspaceBasis v2 = image_basis(p.A);
    SubspaceBasis u2 = preimage(p.B, v2);
    return restrict_to(p.A, p.B, u2, v2);
}

PairPresentation transform3(const PairPresentation& p) {
    if (!p.a_surjective() || !p.b_surjective())
        throw UsageError("transform3 requires A and B surjective");
    SubspaceBasis ker_b = kernel_basis(p.B);
    SubspaceBasis domain = extend_to_complement(ker_b);
    SubspaceBasis a_ker = image_basis(p.A * ker_b.basis());
    SubspaceBasis codomain = extend_to_complement(a_ker);
    // The induced maps are well defined because B kills ker B and A maps it
    // into the subspace being quotiented out; both facts are checked.
    for (int j = 0; j < ker_b.dim(); ++j) {
        std::vector<FieldElement> kv = ker_b.basis().column(j);
        for (const FieldElement& x : p.B.apply(kv))
            if (!x.is_zero())
                throw InternalError("transform3: B does not vanish on ker B");
        if (!a_ker.contains(p.A.apply(kv)))
            throw InternalError("transform3: A(ker B) escapes its own span");
    }
    Matrix new_a = quotient_coords_batch(a_ker, codomain, p.A * domain.basis());
    Matrix new_b = quotient_coords_batch(a_ker, codomain, p.B * domain.basis());
    return PairPresentation(std::move(new_a), std::move(new_b));
}

namespace {

bool phase_done(const PairPresentation& p, int phase) {
    switch (phase) {
    case 1:
        return p.b_surjective();
    case 2:
        return p.a_surjective();
    case 3:
        return p.b_bijective();
    default:
        throw UsageError("phase must be 1, 2 or 3");
    }
}

PairPresentation phase_step(const PairPresentation& p, int phase) {
    switch (phase) {
    case 1:
        return transform1(p);
    case 2:
        return transform2(p);
    default:
        return transform3(p);
    }
}

} // namespace

PhaseResult run_phase(const PairPresentation& start, int phase) {
    if (phase < 1 || phase > 3)
        throw UsageError("phase must be 1, 2 or 3");
    const int max_steps = std::max(start.u_dim(), start.v_dim()) + 2;
    PairPresentation cur = start;
    PhaseTrace trace;
    trace.dims.push_back({cur.u_dim(), cur.v_dim()});
    while (!phase_done(cur, phase)) {
        cur = phase_step(cur, phase);
        trace.dims.push_back({cur.u_dim(), cur.v_dim()});
        if (static_cast<int>(trace.dims.size()) > max_steps)
            throw InternalError("phase failed to terminate within the dimension bound");
    }
    // Strict decrease until termination: V shrinks in phases 1 and 2, U in
    // phase 3. Anything else breaks the termination argument.
    for (std::size_t i = 0; i + 1 < trace.dims.size(); ++i) {
        bool strict = phase == 3 ? trace.dims[i].u > trace.dims[i + 1].u
                                 : trace.dims[i].v > trace.dims[i + 1].v;
        if (!strict)
            throw InternalError("phase dimension sequence failed to decrease");
    }
    trace.dims.push_back(trace.dims.back());
    trace.dims.push_back(trace.dims.back());
    return PhaseResult{std::move(cur), std::move(trace)};
}

namespace {

std::int64_t checked_count(std::int64_t c, const char* what) {
    if (c < 0)
        throw InternalError(std::string("negative block count for ") + what);
    return c;
}

} // namespace

BlockMultiset count_blocks(const PhaseTrace& phase1, const PhaseTrace& phase2,
                           const PhaseTrace& phase3) {
    BlockMultiset blocks;
    const DimSequence& t1 = phase1.dims;
    const DimSequence& t2 = phase2.dims;
    const DimSequence& t3 = phase3.dims;
    // Sequences are 0-indexed here; entry j-1 holds the 1-based step j.
    for (int j = 1; j < phase1.recorded_steps(); ++j) {
        std::int64_t dv = t1[j - 1].v - t1[j].v;
        std::int64_t du = t1[j - 1].u - t1[j].u;
        blocks.add(BlockKind::LTRT, j, checked_count(dv - du, "(L^T, R^T)"));
        std::int64_t dv_next = t1[j].v - t1[j + 1].v;
        blocks.add(BlockKind::IJ, j, checked_count(du - dv_next, "(I, J)"));
    }
    for (int j = 1; j < phase2.recorded_steps(); ++j)
        blocks.add(BlockKind::JI, j,
                   checked_count(t2[j - 1].v - 2 * t2[j].v + t2[j + 1].v, "(J, I)"));
    for (int j = 1; j < phase3.recorded_steps(); ++j)
        blocks.add(BlockKind::LR, j,
                   checked_count(t3[j - 1].u - 2 * t3[j].u + t3[j + 1].u, "(L, R)"));
    return blocks;
}

Matrix extract_regular(const PairPresentation& final) {
    if (final.u_dim() != final.v_dim())
        throw InternalError("regular pair is not square");
    Matrix a_inv(final.field(), 0, 0);
    try {
        a_inv = invert(final.A);
    } catch (const SingularMatrixError&) {
        throw InternalError("regular pair has singular A");
    }
    Matrix d = a_inv * final.B;
    if (rank(d) != d.rows())
        throw InternalError("regular pair has singular B");
    return d;
}

Decomposition decompose(const Pencil& p) {
    PairPresentation start(p.A, p.B);
    PhaseResult r1 = run_phase(start, 1);
    PhaseResult r2 = run_phase(r1.final, 2);
    PhaseResult r3 = run_phase(r2.final, 3);
    BlockMultiset blocks = count_blocks(r1.trace, r2.trace, r3.trace);
    Matrix d = extract_regular(r3.final);
    if (d.rows() + blocks.total_rows() != p.rows() ||
        d.rows() + blocks.total_cols() != p.cols())
        throw InternalError("decomposition bookkeeping mismatch");
    return Decomposition{std::move(blocks), std::move(d), std::move(r1.trace.dims),
                         std::move(r2.trace.dims), std::move(r3.trace.dims)};
}

} // namespace penreg
