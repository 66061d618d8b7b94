#include "penreg/canonical.hpp"

#include "penreg/errors.hpp"
#include "penreg/regularize.hpp"

namespace penreg {

PolyMatrix characteristic_matrix(const Matrix& d) {
    if (!d.is_square())
        throw UsageError("characteristic matrix of a non-square matrix");
    const FieldSpec& fs = d.field();
    PolyMatrix p(fs, d.rows(), d.rows());
    for (int i = 0; i < d.rows(); ++i) {
        for (int j = 0; j < d.rows(); ++j) {
            p.at(i, j) = i == j ? Poly::x_minus(d.at(i, j))
                                : Poly::constant(-d.at(i, j));
        }
    }
    return p;
}

namespace {

// Pivot choice: a nonzero entry of minimal degree in the trailing block.
bool find_pivot(const PolyMatrix& m, int t, int& pi, int& pj) {
    int best = -1;
    for (int i = t; i < m.rows; ++i) {
        for (int j = t; j < m.cols; ++j) {
            const Poly& p = m.at(i, j);
            if (p.is_zero())
                continue;
            if (best < 0 || p.degree() < best) {
                best = p.degree();
                pi = i;
                pj = j;
            }
        }
    }
    return best >= 0;
}

void swap_rows(PolyMatrix& m, int a, int b) {
    if (a != b)
        for (int j = 0; j < m.cols; ++j)
            std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(PolyMatrix& m, int a, int b) {
    if (a != b)
        for (int i = 0; i < m.rows; ++i)
            std::swap(m.at(i, a), m.at(i, b));
}

} // namespace

std::vector<Poly> smith_form(const PolyMatrix& input) {
    PolyMatrix m = input;
    std::vector<Poly> diag;
    const int steps = std::min(m.rows, m.cols);
    for (int t = 0; t < steps; ++t) {
        int pi = 0, pj = 0;
        if (!find_pivot(m, t, pi, pj))
            break; // remaining block is zero
        swap_rows(m, t, pi);
        swap_cols(m, t, pj);
        for (bool settled = false; !settled;) {
            settled = true;
            // Clear the pivot column, then the pivot row, with division
            // steps; a nonzero remainder replaces the pivot by a smaller-
            // degree entry and restarts.
            for (int i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t).is_zero())
                    continue;
                Poly::DivMod dm = Poly::divmod(m.at(i, t), m.at(t, t));
                for (int j = t; j < m.cols; ++j)
                    m.at(i, j) = m.at(i, j) - dm.quot * m.at(t, j);
                if (!m.at(i, t).is_zero()) {
                    swap_rows(m, t, i);
                    settled = false;
                }
            }
            if (!settled)
                continue;
            for (int j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j).is_zero())
                    continue;
                Poly::DivMod dm = Poly::divmod(m.at(t, j), m.at(t, t));
                for (int i = t; i < m.rows; ++i)
                    m.at(i, j) = m.at(i, j) - dm.quot * m.at(i, t);
                if (!m.at(t, j).is_zero()) {
                    swap_cols(m, t, j);
                    settled = false;
                }
            }
            if (!settled)
                continue;
            // Pivot must divide the whole trailing block; folding an
            // offending row into the pivot row forces another round.
            for (int i = t + 1; i < m.rows && settled; ++i) {
                for (int j = t + 1; j < m.cols && settled; ++j) {
                    if (!Poly::divides(m.at(t, t), m.at(i, j))) {
                        for (int c = t; c < m.cols; ++c)
                            m.at(t, c) = m.at(t, c) + m.at(i, c);
                        settled = false;
                    }
                }
            }
        }
        diag.push_back(m.at(t, t).monic());
    }
    return diag;
}

SimilarityClass invariant_factors(const Matrix& d) {
    std::vector<Poly> factors = smith_form(characteristic_matrix(d));
    // xI - D has unit determinant scaling, so the chain has full length.
    if (static_cast<int>(factors.size()) != d.rows())
        throw InternalError("characteristic matrix lost rank in Smith reduction");
    int total_degree = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        total_degree += factors[i].degree();
        if (i + 1 < factors.size() && !Poly::divides(factors[i], factors[i + 1]))
            throw InternalError("invariant factors fail the divisibility chain");
    }
    if (total_degree != d.rows())
        throw InternalError("invariant factor degrees do not sum to the size");
    return SimilarityClass{std::move(factors)};
}

bool similar(const Matrix& d1, const Matrix& d2) {
    if (!(d1.field() == d2.field()))
        throw UsageError("similarity test over mixed fields");
    if (!d1.is_square() || !d2.is_square())
        throw UsageError("similarity test on non-square matrices");
    if (d1.rows() != d2.rows())
        return false;
    return invariant_factors(d1) == invariant_factors(d2);
}

Pencil reconstruct(const Decomposition& d) {
    const FieldSpec& fs = d.D.field();
    std::vector<Pencil> parts;
    parts.push_back(regular_block(d.D));
    for (const auto& [key, count] : d.blocks.entries())
        for (std::int64_t i = 0; i < count; ++i)
            parts.push_back(block(fs, key.first, key.second));
    return direct_sum(fs, parts);
}

bool strictly_equivalent(const Pencil& p, const Pencil& q) {
    if (!(p.field() == q.field()))
        throw UsageError("strict equivalence over mixed fields");
    if (p.rows() != q.rows() || p.cols() != q.cols())
        return false;
    Decomposition dp = decompose(p);
    Decomposition dq = decompose(q);
    return dp.blocks == dq.blocks && similar(dp.D, dq.D);
}

} // namespace penreg
