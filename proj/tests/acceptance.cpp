// Acceptance suite: seven release criteria, one test case each, printing a
// single [PASS]/[FAIL] line per criterion. Everything is exact arithmetic;
// "pass" always means equality, never a tolerance.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <optional>

#include <json.hpp>

#include "cli_driver.hpp"
#include "penreg/canonical.hpp"
#include "penreg/errors.hpp"
#include "penreg/json_io.hpp"
#include "penreg/regularize.hpp"

using namespace penreg;
using namespace penreg::testsupport;

namespace {

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kGf5 = FieldSpec::gf(5);

void report(int criterion, bool ok, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    std::fflush(stdout);
}

struct Instance {
    BlockMultiset blocks;
    Matrix d0;
    Pencil scrambled;
};

// Random multiset of singular blocks with total dimension (rows + cols)
// at most max_total, plus a random nonsingular regular part of size at
// most max_regular, scrambled by random S, R.
Instance random_instance(const FieldSpec& fs, SplitMix64& rng, int max_total = 12,
                         int max_regular = 4) {
    BlockMultiset blocks;
    std::vector<Pencil> parts;
    int budget = max_total;
    while (rng.below(4) != 0) {
        BlockKind kind = static_cast<BlockKind>(rng.below(4));
        int k = 1 + static_cast<int>(rng.below(6));
        int size = block_rows(kind, k) + block_cols(kind, k);
        if (size > budget)
            continue;
        budget -= size;
        blocks.add(kind, k);
        parts.push_back(block(fs, kind, k));
        if (budget == 0)
            break;
    }
    int r = static_cast<int>(rng.below(max_regular + 1));
    Matrix d0 = random_nonsingular_matrix(fs, r, rng);
    parts.push_back(regular_block(d0));
    Pencil scrambled = scramble(direct_sum(fs, parts), rng.next()).pencil;
    return Instance{std::move(blocks), std::move(d0), std::move(scrambled)};
}

bool matches_truth(const Decomposition& d, const Instance& inst) {
    return d.blocks == inst.blocks && d.regular_size() == inst.d0.rows() &&
           invariant_factors(d.D) == invariant_factors(inst.d0);
}

BlockMultiset map_kinds(const BlockMultiset& blocks, BlockKind from1, BlockKind to1,
                        BlockKind from2, BlockKind to2) {
    BlockMultiset out;
    for (const auto& [key, count] : blocks.entries()) {
        BlockKind kind = key.first == from1 ? to1 : key.first == from2 ? to2 : key.first;
        out.add(kind, key.second, count);
    }
    return out;
}

} // namespace

TEST_CASE("criterion 1: round-trip exactness, 500 instances per field") {
    auto t0 = std::chrono::steady_clock::now();
    int failures = 0;
    for (const FieldSpec& fs : {kQ, kGf5}) {
        SplitMix64 rng(fs.is_rational() ? 0xac5e9701 : 0xac5e9702);
        for (int i = 0; i < 500; ++i) {
            Instance inst = random_instance(fs, rng);
            Decomposition d = decompose(inst.scrambled);
            if (!matches_truth(d, inst)) {
                ++failures;
                FAIL_CHECK("round trip failed over " << fs.to_string() << " at instance " << i);
            }
        }
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = failures == 0;
    CHECK(ok);
    report(1, ok,
           "round-trip exactness on 1000 scrambled instances (rational + gf5), " +
               std::to_string(failures) + " failures, " + std::to_string(secs) + "s");
}

TEST_CASE("criterion 2: fixture suite of canonical objects") {
    struct Fixture {
        BlockKind kind;
        int k;
    };
    const Fixture fixtures[] = {
        {BlockKind::IJ, 3},   // (I_3, J_3(0))
        {BlockKind::LTRT, 3}, // (L_3^T, R_3^T)
        {BlockKind::IJ, 1},   // ([1], [0])
        {BlockKind::JI, 1},   // ([0], [1])
        {BlockKind::LR, 1},   // (0_01, 0_01)
        {BlockKind::LTRT, 1}, // (0_10, 0_10)
    };
    bool ok = true;
    for (const Fixture& f : fixtures) {
        Decomposition d = decompose(block(kQ, f.kind, f.k));
        BlockMultiset expected;
        expected.add(f.kind, f.k);
        bool this_ok = d.blocks == expected && d.regular_size() == 0;
        CHECK(this_ok);
        ok = ok && this_ok;
    }
    report(2, ok, "six canonical fixtures decompose to exactly one block each, r = 0");
}

TEST_CASE("criterion 3: phase-3 counts come from the domain dimension sequence") {
    // Stored regression instance: a scrambled (L_2, R_2) + (I_1, [-1]).
    // The codomain-side (V) second difference looks just as plausible as
    // the domain-side (U) one but miscounts on it, so this pencil pins the
    // formula choice.
    Pencil p = pencil_from_json(slurp(fixture_dir() + "/phase3_domain_count_pencil.json"));
    GroundTruth truth = truth_from_json(slurp(fixture_dir() + "/phase3_domain_count_truth.json"));
    Decomposition d = decompose(p);

    bool matches = d.blocks == truth.blocks && d.regular_size() == truth.D.rows() &&
                   similar(d.D, truth.D);
    CHECK(matches);

    // Evaluate both formulas on the recorded phase-3 dimensions.
    auto count_from = [&](bool use_u) {
        BlockMultiset out;
        const DimSequence& t3 = d.dims_phase3;
        int steps = static_cast<int>(t3.size()) - 2;
        for (int j = 1; j < steps; ++j) {
            int a = use_u ? t3[j - 1].u : t3[j - 1].v;
            int b = use_u ? t3[j].u : t3[j].v;
            int c = use_u ? t3[j + 1].u : t3[j + 1].v;
            out.add(BlockKind::LR, j, a - 2 * b + c);
        }
        return out;
    };
    BlockMultiset u_based = count_from(true);
    BlockMultiset v_based = count_from(false);
    BlockMultiset expected_lr;
    for (const auto& [key, count] : truth.blocks.entries())
        if (key.first == BlockKind::LR)
            expected_lr.add(key.first, key.second, count);

    bool u_based_matches = u_based == expected_lr;
    bool v_based_differs = !(v_based == u_based);
    CHECK(u_based_matches);
    CHECK(v_based_differs);

    // The stored instance came out of this search: among small block
    // multisets, any (L_k, R_k) with k >= 2 already separates the formulas.
    bool search_found = false;
    for (int k = 2; k <= 4 && !search_found; ++k) {
        Decomposition cand = decompose(block(kQ, BlockKind::LR, k));
        const DimSequence& t3 = cand.dims_phase3;
        int steps = static_cast<int>(t3.size()) - 2;
        for (int j = 1; j < steps; ++j) {
            int u_cnt = t3[j - 1].u - 2 * t3[j].u + t3[j + 1].u;
            int v_cnt = t3[j - 1].v - 2 * t3[j].v + t3[j + 1].v;
            if (u_cnt != v_cnt)
                search_found = true;
        }
    }
    CHECK(search_found);

    bool ok = matches && u_based_matches && v_based_differs && search_found;
    report(3, ok, "stored instance separates domain-side from codomain-side phase-3 counts");
}

TEST_CASE("criterion 4: invariance under scramble, transpose and swap") {
    int failures = 0;
    for (const FieldSpec& fs : {kQ, kGf5}) {
        SplitMix64 rng(fs.is_rational() ? 0xac5e9703 : 0xac5e9704);
        for (int i = 0; i < 100; ++i) {
            Instance inst = random_instance(fs, rng, 10, 3);
            const Pencil& p = inst.scrambled;
            Decomposition d = decompose(p);

            Decomposition d_re = decompose(scramble(p, rng.next()).pencil);
            bool re_ok = d_re.blocks == d.blocks && d_re.regular_size() == d.regular_size() &&
                         similar(d_re.D, d.D);

            Decomposition dt = decompose(transpose(p));
            bool t_ok = dt.blocks == map_kinds(d.blocks, BlockKind::LR, BlockKind::LTRT,
                                               BlockKind::LTRT, BlockKind::LR) &&
                        dt.regular_size() == d.regular_size() &&
                        similar(dt.D, d.D.transpose());

            Decomposition ds = decompose(swap(p));
            bool s_ok = ds.blocks == map_kinds(d.blocks, BlockKind::IJ, BlockKind::JI,
                                               BlockKind::JI, BlockKind::IJ) &&
                        ds.regular_size() == d.regular_size() &&
                        similar(ds.D, invert(d.D));

            if (!re_ok || !t_ok || !s_ok) {
                ++failures;
                FAIL_CHECK("invariance failed over " << fs.to_string() << " at instance " << i
                                                     << " (scramble " << re_ok << ", transpose "
                                                     << t_ok << ", swap " << s_ok << ")");
            }
        }
    }
    bool ok = failures == 0;
    CHECK(ok);
    report(4, ok, "200 instances: rescramble identity, transpose and swap dualities exact");
}

TEST_CASE("criterion 5: bookkeeping and count nonnegativity") {
    // These checks run inline inside decompose (they throw InternalError),
    // so every decomposition in this whole suite enforces them; here they
    // are re-derived externally on fresh instances.
    int failures = 0;
    for (const FieldSpec& fs : {kQ, kGf5}) {
        SplitMix64 rng(fs.is_rational() ? 0xac5e9705 : 0xac5e9706);
        for (int i = 0; i < 50; ++i) {
            Instance inst = random_instance(fs, rng);
            std::optional<Decomposition> dec;
            try {
                dec = decompose(inst.scrambled);
            } catch (const InternalError& e) {
                ++failures;
                FAIL_CHECK("inline consistency check fired: " << e.what());
                continue;
            }
            const Decomposition& d = *dec;
            bool rows_ok = d.regular_size() + d.blocks.total_rows() == inst.scrambled.rows();
            bool cols_ok = d.regular_size() + d.blocks.total_cols() == inst.scrambled.cols();

            // recompute every count formula from the recorded dims
            bool counts_ok = true;
            BlockMultiset recount;
            const DimSequence& t1 = d.dims_phase1;
            const DimSequence& t2 = d.dims_phase2;
            const DimSequence& t3 = d.dims_phase3;
            for (int j = 1; j < static_cast<int>(t1.size()) - 2; ++j) {
                int lt = (t1[j - 1].v - t1[j].v) - (t1[j - 1].u - t1[j].u);
                int ij = (t1[j - 1].u - t1[j].u) - (t1[j].v - t1[j + 1].v);
                counts_ok = counts_ok && lt >= 0 && ij >= 0;
                recount.add(BlockKind::LTRT, j, std::max(lt, 0));
                recount.add(BlockKind::IJ, j, std::max(ij, 0));
            }
            for (int j = 1; j < static_cast<int>(t2.size()) - 2; ++j) {
                int ji = t2[j - 1].v - 2 * t2[j].v + t2[j + 1].v;
                counts_ok = counts_ok && ji >= 0;
                recount.add(BlockKind::JI, j, std::max(ji, 0));
            }
            for (int j = 1; j < static_cast<int>(t3.size()) - 2; ++j) {
                int lr = t3[j - 1].u - 2 * t3[j].u + t3[j + 1].u;
                counts_ok = counts_ok && lr >= 0;
                recount.add(BlockKind::LR, j, std::max(lr, 0));
            }
            bool recount_ok = recount == d.blocks;

            if (!rows_ok || !cols_ok || !counts_ok || !recount_ok) {
                ++failures;
                FAIL_CHECK("bookkeeping failed over " << fs.to_string() << " at instance " << i);
            }
        }
    }
    bool ok = failures == 0;
    CHECK(ok);
    report(5, ok, "dimension bookkeeping and nonnegative counts re-derived on 100 instances");
}

TEST_CASE("criterion 6: canonicalization idempotence") {
    int failures = 0;
    SplitMix64 rng(0xac5e9707);
    for (int i = 0; i < 100; ++i) {
        const FieldSpec& fs = i % 2 ? kGf5 : kQ;
        Instance inst = random_instance(fs, rng, 10, 3);
        Decomposition d = decompose(inst.scrambled);
        Decomposition d2 = decompose(reconstruct(d));
        bool this_ok = d2.blocks == d.blocks && d2.regular_size() == d.regular_size() &&
                       similar(d2.D, d.D);
        if (!this_ok) {
            ++failures;
            FAIL_CHECK("idempotence failed at instance " << i);
        }
    }
    bool ok = failures == 0;
    CHECK(ok);
    report(6, ok, "decompose(reconstruct(d)) = d on 100 random decompositions");
}

TEST_CASE("criterion 7: cli generate/verify pipeline and determinism") {
    int failures = 0;
    SplitMix64 rng(0xac5e9708);
    const char* kinds[] = {"I_J", "J_I", "L_R", "LT_RT"};
    for (int i = 0; i < 50; ++i) {
        // random block list string
        std::string blocks;
        int n_blocks = static_cast<int>(rng.below(3));
        for (int b = 0; b < n_blocks; ++b) {
            if (!blocks.empty())
                blocks += ",";
            blocks += std::string(kinds[rng.below(4)]) + ":" +
                      std::to_string(1 + rng.below(3)) + "x" + std::to_string(1 + rng.below(2));
        }
        std::string field = i % 2 ? "gf5" : "rational";
        std::uint64_t seed = rng.next();
        std::string args = "generate";
        if (!blocks.empty())
            args += " --blocks " + blocks;
        args += " --regular " + std::to_string(rng.below(3)) + " --field " + field + " --seed " +
                std::to_string(seed) + " --out ";

        auto dir1 = scratch_dir("accept1");
        auto dir2 = scratch_dir("accept2");
        bool this_ok = true;
        if (run_cli(args + dir1.string()).exit_code != 0)
            this_ok = false;
        if (run_cli(args + dir2.string()).exit_code != 0)
            this_ok = false;
        if (this_ok) {
            CliResult ver = run_cli("verify " + (dir1 / "pencil.json").string() + " " +
                                    (dir1 / "truth.json").string());
            this_ok = ver.exit_code == 0;
        }
        if (this_ok) {
            this_ok = slurp(dir1 / "pencil.json") == slurp(dir2 / "pencil.json") &&
                      slurp(dir1 / "truth.json") == slurp(dir2 / "truth.json");
        }
        std::filesystem::remove_all(dir1);
        std::filesystem::remove_all(dir2);
        if (!this_ok) {
            ++failures;
            FAIL_CHECK("cli pipeline failed for case " << i << " (" << args << ")");
        }
    }
    bool ok = failures == 0;
    CHECK(ok);
    report(7, ok, "50 generate/verify pipelines exit 0 with byte-identical reruns");
}
