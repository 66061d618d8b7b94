#include "penreg/pencil.hpp"

#include "penreg/errors.hpp"

namespace penreg {

const char* block_kind_name(BlockKind k) {
    switch (k) {
    case BlockKind::IJ:
        return "I_J";
    case BlockKind::JI:
        return "J_I";
    case BlockKind::LR:
        return "L_R";
    case BlockKind::LTRT:
        return "LT_RT";
    }
    throw InternalError("unknown block kind");
}

std::optional<BlockKind> block_kind_from_name(std::string_view s) {
    if (s == "I_J")
        return BlockKind::IJ;
    if (s == "J_I")
        return BlockKind::JI;
    if (s == "L_R")
        return BlockKind::LR;
    if (s == "LT_RT")
        return BlockKind::LTRT;
    return std::nullopt;
}

int block_rows(BlockKind kind, int k) { return kind == BlockKind::LR ? k - 1 : k; }
int block_cols(BlockKind kind, int k) { return kind == BlockKind::LTRT ? k - 1 : k; }

void BlockMultiset::add(BlockKind kind, int k, std::int64_t count) {
    if (k < 1)
        throw UsageError("block size must be at least 1");
    if (count < 0)
        throw UsageError("negative block multiplicity");
    if (count == 0)
        return;
    counts_[{kind, k}] += count;
}

std::int64_t BlockMultiset::count(BlockKind kind, int k) const {
    auto it = counts_.find({kind, k});
    return it == counts_.end() ? 0 : it->second;
}

std::int64_t BlockMultiset::total_rows() const {
    std::int64_t n = 0;
    for (const auto& [key, count] : counts_)
        n += static_cast<std::int64_t>(block_rows(key.first, key.second)) * count;
    return n;
}

std::int64_t BlockMultiset::total_cols() const {
    std::int64_t n = 0;
    for (const auto& [key, count] : counts_)
        n += static_cast<std::int64_t>(block_cols(key.first, key.second)) * count;
    return n;
}

Pencil::Pencil(Matrix a, Matrix b) : A(std::move(a)), B(std::move(b)) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw UsageError("pencil matrices must have identical dimensions");
    if (!(A.field() == B.field()))
        throw UsageError("pencil matrices must share one field");
}

namespace {

// k x k singular Jordan block with units under the diagonal: e_i -> e_{i+1}.
Matrix jordan_zero(const FieldSpec& fs, int k) {
    Matrix j(fs, k, k);
    for (int i = 0; i + 1 < k; ++i)
        j.at(i + 1, i) = FieldElement::one(fs);
    return j;
}

// I_k with its last row deleted: (k-1) x k, ones at (i, i).
Matrix l_matrix(const FieldSpec& fs, int k) {
    Matrix l(fs, k - 1, k);
    for (int i = 0; i < k - 1; ++i)
        l.at(i, i) = FieldElement::one(fs);
    return l;
}

// I_k with its first row deleted: (k-1) x k, ones at (i, i+1).
Matrix r_matrix(const FieldSpec& fs, int k) {
    Matrix r(fs, k - 1, k);
    for (int i = 0; i < k - 1; ++i)
        r.at(i, i + 1) = FieldElement::one(fs);
    return r;
}

} // namespace

Pencil block(const FieldSpec& fs, BlockKind kind, int k) {
    if (k < 1)
        throw UsageError("block size must be at least 1");
    switch (kind) {
    case BlockKind::IJ:
        return Pencil(Matrix::identity(fs, k), jordan_zero(fs, k));
    case BlockKind::JI:
        return Pencil(jordan_zero(fs, k), Matrix::identity(fs, k));
    case BlockKind::LR:
        return Pencil(l_matrix(fs, k), r_matrix(fs, k));
    case BlockKind::LTRT:
        return Pencil(l_matrix(fs, k).transpose(), r_matrix(fs, k).transpose());
    }
    throw InternalError("unknown block kind");
}

Pencil regular_block(const Matrix& d) {
    if (!d.is_square())
        throw UsageError("regular part must be square");
    if (rank(d) != d.rows())
        throw UsageError("regular part must be nonsingular");
    return Pencil(Matrix::identity(d.field(), d.rows()), d);
}

Pencil direct_sum(const FieldSpec& fs, const std::vector<Pencil>& parts) {
    int rows = 0, cols = 0;
    for (const Pencil& p : parts) {
        if (!(p.field() == fs))
            throw UsageError("direct_sum over mixed fields");
        rows += p.rows();
        cols += p.cols();
    }
    Matrix a(fs, rows, cols), b(fs, rows, cols);
    int r0 = 0, c0 = 0;
    for (const Pencil& p : parts) {
        for (int i = 0; i < p.rows(); ++i) {
            for (int j = 0; j < p.cols(); ++j) {
                a.at(r0 + i, c0 + j) = p.A.at(i, j);
                b.at(r0 + i, c0 + j) = p.B.at(i, j);
            }
        }
        r0 += p.rows();
        c0 += p.cols();
    }
    return Pencil(std::move(a), std::move(b));
}

Pencil transpose(const Pencil& p) { return Pencil(p.A.transpose(), p.B.transpose()); }

Pencil swap(const Pencil& p) { return Pencil(p.B, p.A); }

Pencil apply_equivalence(const Pencil& p, const Matrix& s, const Matrix& r) {
    return Pencil(s * p.A * r, s * p.B * r);
}

Matrix random_matrix(const FieldSpec& fs, int rows, int cols, SplitMix64& rng, int bound) {
    Matrix m(fs, rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (fs.is_rational())
                m.at(i, j) = FieldElement::from_int(fs, rng.in_range(-bound, bound));
            else
                m.at(i, j) = FieldElement::from_int(
                    fs, static_cast<std::int64_t>(rng.below(fs.modulus())));
        }
    }
    return m;
}

Matrix random_nonsingular_matrix(const FieldSpec& fs, int n, SplitMix64& rng, int bound) {
    while (true) {
        Matrix m = random_matrix(fs, n, n, rng, bound);
        if (rank(m) == n)
            return m;
    }
}

ScrambleResult scramble(const Pencil& p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Matrix s = random_nonsingular_matrix(p.field(), p.rows(), rng);
    Matrix r = random_nonsingular_matrix(p.field(), p.cols(), rng);
    return ScrambleResult{apply_equivalence(p, s, r), std::move(s), std::move(r)};
}

} // namespace penreg
