#include <doctest.h>

#include "penreg/errors.hpp"
#include "penreg/json_io.hpp"
#include "penreg/pencil.hpp"
#include "support.hpp"

using namespace penreg;
using namespace penreg::testsupport;

namespace {
const FieldSpec kQ = FieldSpec::rational();
}

TEST_CASE("canonical block shapes and entries") {
    Pencil ij3 = block(kQ, BlockKind::IJ, 3);
    CHECK(ij3.A == Matrix::identity(kQ, 3));
    Matrix j3(kQ, 3, 3);
    j3.at(1, 0) = FieldElement::one(kQ);
    j3.at(2, 1) = FieldElement::one(kQ);
    CHECK(ij3.B == j3); // units under the diagonal

    Pencil lr2 = block(kQ, BlockKind::LR, 2);
    CHECK(lr2.A == Matrix::from_ints(kQ, 1, 2, {{1, 0}}));
    CHECK(lr2.B == Matrix::from_ints(kQ, 1, 2, {{0, 1}}));

    Pencil lr1 = block(kQ, BlockKind::LR, 1);
    CHECK(lr1.rows() == 0);
    CHECK(lr1.cols() == 1);
    Pencil lt1 = block(kQ, BlockKind::LTRT, 1);
    CHECK(lt1.rows() == 1);
    CHECK(lt1.cols() == 0);

    for (BlockKind kind : {BlockKind::IJ, BlockKind::JI, BlockKind::LR, BlockKind::LTRT}) {
        for (int k = 1; k <= 4; ++k) {
            Pencil p = block(kQ, kind, k);
            CHECK(p.rows() == block_rows(kind, k));
            CHECK(p.cols() == block_cols(kind, k));
        }
    }
    CHECK_THROWS_AS(block(kQ, BlockKind::IJ, 0), UsageError);
}

TEST_CASE("regular_block rejects singular matrices") {
    CHECK_THROWS_AS(regular_block(Matrix(kQ, 2, 2)), UsageError);
    CHECK_THROWS_AS(regular_block(Matrix(kQ, 1, 2)), UsageError);
    Pencil p = regular_block(Matrix::from_ints(kQ, 1, 1, {{2}}));
    CHECK(p.A == Matrix::identity(kQ, 1));
}

TEST_CASE("direct sums assemble block diagonals") {
    Pencil sum = direct_sum(
        kQ, {regular_block(Matrix::from_ints(kQ, 1, 1, {{2}})), block(kQ, BlockKind::LR, 2)});
    CHECK(sum.A == Matrix::from_ints(kQ, 2, 3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(sum.B == Matrix::from_ints(kQ, 2, 3, {{2, 0, 0}, {0, 0, 1}}));

    Pencil empty = direct_sum(kQ, {});
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);

    SplitMix64 rng(41);
    for (int iter = 0; iter < 10; ++iter) {
        int m = static_cast<int>(rng.below(3)), n = static_cast<int>(rng.below(3));
        Pencil x(random_matrix(kQ, m, n, rng), random_matrix(kQ, m, n, rng));
        Pencil y = block(kQ, BlockKind::JI, static_cast<int>(1 + rng.below(2)));
        Pencil z = block(kQ, BlockKind::LTRT, static_cast<int>(1 + rng.below(2)));
        CHECK(direct_sum(kQ, {direct_sum(kQ, {x, y}), z}) ==
              direct_sum(kQ, {x, direct_sum(kQ, {y, z})}));
    }
}

TEST_CASE("scramble preserves ranks and is reproducible") {
    SplitMix64 rng(42);
    Pencil p = direct_sum(kQ, {block(kQ, BlockKind::IJ, 2), block(kQ, BlockKind::LTRT, 2),
                               regular_block(random_invertible_of(kQ, 2, rng))});
    ScrambleResult sc = scramble(p, 7);
    CHECK(rank(sc.S) == p.rows());
    CHECK(rank(sc.R) == p.cols());
    CHECK(rank(sc.pencil.A) == rank(p.A));
    CHECK(rank(sc.pencil.B) == rank(p.B));
    // rank of A + lambda B at a sampled lambda
    for (std::int64_t lambda : {1, 2, 5}) {
        Matrix pa = p.A, sa = sc.pencil.A;
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) {
                FieldElement l = FieldElement::from_int(kQ, lambda);
                pa.at(i, j) = pa.at(i, j) + l * p.B.at(i, j);
                sa.at(i, j) = sa.at(i, j) + l * sc.pencil.B.at(i, j);
            }
        CHECK(rank(pa) == rank(sa));
    }
    // same seed, same result; identity transform leaves the pencil alone
    CHECK(scramble(p, 7).pencil == sc.pencil);
    CHECK(apply_equivalence(p, Matrix::identity(kQ, p.rows()),
                            Matrix::identity(kQ, p.cols())) == p);
}

TEST_CASE("block multiset bookkeeping") {
    BlockMultiset bm;
    bm.add(BlockKind::IJ, 3);
    bm.add(BlockKind::LR, 2, 2);
    bm.add(BlockKind::LTRT, 1);
    CHECK(bm.count(BlockKind::IJ, 3) == 1);
    CHECK(bm.count(BlockKind::JI, 3) == 0);
    CHECK(bm.total_rows() == 3 + 2 * 1 + 1);
    CHECK(bm.total_cols() == 3 + 2 * 2 + 0);
    bm.add(BlockKind::IJ, 3, 0); // no-op
    CHECK(bm.count(BlockKind::IJ, 3) == 1);
    CHECK_THROWS_AS(bm.add(BlockKind::IJ, 0), UsageError);
    CHECK_THROWS_AS(bm.add(BlockKind::IJ, 1, -1), UsageError);
}

TEST_CASE("pencil json round trip") {
    SplitMix64 rng(43);
    for (const FieldSpec& fs : {kQ, FieldSpec::gf(5)}) {
        for (int iter = 0; iter < 20; ++iter) {
            int m = static_cast<int>(rng.below(4));
            int n = static_cast<int>(rng.below(4));
            Matrix a = random_matrix_of(fs, m, n, rng);
            Matrix b = random_matrix_of(fs, m, n, rng);
            if (fs.is_rational() && m > 0 && n > 0)
                a.at(0, 0) = FieldElement::from_rational(Rational(1, 2));
            Pencil p(a, b);
            std::string text = pencil_to_json(p);
            CHECK(pencil_from_json(text) == p);
            // serialization is deterministic
            CHECK(pencil_to_json(pencil_from_json(text)) == text);
        }
    }
}

TEST_CASE("pencil json rejects malformed input") {
    CHECK_THROWS_AS(pencil_from_json("not json"), ParseError);
    CHECK_THROWS_AS(pencil_from_json("{}"), ParseError);
    CHECK_THROWS_AS(pencil_from_json(R"({"field":"real","m":0,"n":0,"A":[],"B":[]})"),
                    ParseError);
    CHECK_THROWS_AS(pencil_from_json(R"({"field":{"gfp":4},"m":0,"n":0,"A":[],"B":[]})"),
                    ParseError);
    CHECK_THROWS_AS(
        pencil_from_json(R"({"field":"rational","m":1,"n":1,"A":[["1","2"]],"B":[["0"]]})"),
        ParseError);
    CHECK_THROWS_AS(
        pencil_from_json(R"({"field":"rational","m":1,"n":1,"A":[["1/0"]],"B":[["0"]]})"),
        ParseError);
    CHECK_THROWS_AS(
        pencil_from_json(R"({"field":"rational","m":-1,"n":1,"A":[],"B":[]})"), ParseError);

    // k = 1 edge pencils survive the round trip
    Pencil lr1 = block(kQ, BlockKind::LR, 1);
    CHECK(pencil_from_json(pencil_to_json(lr1)) == lr1);
}

TEST_CASE("ground truth json round trip") {
    GroundTruth t;
    t.seed = 99;
    t.field = FieldSpec::gf(5);
    t.blocks.add(BlockKind::JI, 2, 3);
    t.D = Matrix::from_ints(t.field, 2, 2, {{1, 2}, {0, 1}});
    GroundTruth back = truth_from_json(truth_to_json(t));
    CHECK(back.seed == t.seed);
    CHECK(back.field == t.field);
    CHECK(back.blocks == t.blocks);
    CHECK(back.D == t.D);
}
