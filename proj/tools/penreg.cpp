// penreg: exact regularizing decomposition of matrix pencils.
//
// Subcommands:
//   decompose <pencil.json>            write the decomposition JSON
//   generate  --blocks ... --regular N --field F --seed S --out DIR
//                                      write a scrambled pencil + ground truth
//   verify    <pencil.json> <truth.json>
//   equiv     <a.json> <b.json>
//
// Exit codes: 0 success / 1 semantic mismatch / 2 input error / 3 internal
// error, so shell-level pipelines never need to parse JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "penreg/canonical.hpp"
#include "penreg/errors.hpp"
#include "penreg/json_io.hpp"
#include "penreg/regularize.hpp"

namespace {

using penreg::BlockKind;
using penreg::BlockMultiset;
using penreg::Decomposition;
using penreg::FieldSpec;
using penreg::GroundTruth;
using penreg::Matrix;
using penreg::Pencil;
using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw penreg::ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw penreg::UsageError("cannot write file: " + path);
    out << text;
}

FieldSpec parse_field_name(const std::string& name) {
    if (name == "rational" || name == "q")
        return FieldSpec::rational();
    if (name.rfind("gf", 0) == 0) {
        try {
            return FieldSpec::gf(std::stoull(name.substr(2)));
        } catch (const penreg::UsageError& e) {
            throw penreg::ParseError(std::string("--field: ") + e.what());
        } catch (const std::exception&) {
            throw penreg::ParseError("--field: bad modulus in '" + name + "'");
        }
    }
    throw penreg::ParseError("--field: expected 'rational' or 'gf<p>', got '" + name + "'");
}

// Block list syntax: comma-separated KIND:KxCOUNT entries, e.g.
// "I_J:3x1,L_R:2x2" for one (I_3, J_3(0)) and two (L_2, R_2).
BlockMultiset parse_block_list(const std::string& text) {
    BlockMultiset blocks;
    if (text.empty())
        return blocks;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t colon = item.find(':');
        std::size_t cross = item.find('x', colon == std::string::npos ? 0 : colon);
        if (colon == std::string::npos || cross == std::string::npos)
            throw penreg::ParseError("--blocks: expected KIND:KxCOUNT, got '" + item + "'");
        auto kind = penreg::block_kind_from_name(item.substr(0, colon));
        if (!kind)
            throw penreg::ParseError("--blocks: unknown kind in '" + item + "'");
        int k = 0, count = 0;
        try {
            k = std::stoi(item.substr(colon + 1, cross - colon - 1));
            count = std::stoi(item.substr(cross + 1));
        } catch (const std::exception&) {
            throw penreg::ParseError("--blocks: bad numbers in '" + item + "'");
        }
        if (k < 1 || count < 1)
            throw penreg::ParseError("--blocks: size and count must be positive in '" + item +
                                     "'");
        blocks.add(*kind, k, count);
    }
    return blocks;
}

json blocks_json(const BlockMultiset& blocks) {
    json arr = json::array();
    for (const auto& [key, count] : blocks.entries())
        arr.push_back(json{{"kind", penreg::block_kind_name(key.first)},
                           {"k", key.second},
                           {"count", count}});
    return arr;
}

int cmd_decompose(const std::string& path, const std::string& out_path) {
    Pencil p = penreg::pencil_from_json(read_file(path));
    std::string text = penreg::decomposition_to_json(penreg::decompose(p));
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_generate(const std::string& blocks_text, int regular, const std::string& field_name,
                 std::uint64_t seed, const std::string& out_dir) {
    if (regular < 0)
        throw penreg::ParseError("--regular must be nonnegative");
    FieldSpec fs = parse_field_name(field_name);
    BlockMultiset blocks = parse_block_list(blocks_text);

    penreg::SplitMix64 rng(seed);
    Matrix d0 = penreg::random_nonsingular_matrix(fs, regular, rng);
    std::vector<Pencil> parts;
    parts.push_back(penreg::regular_block(d0));
    for (const auto& [key, count] : blocks.entries())
        for (std::int64_t i = 0; i < count; ++i)
            parts.push_back(penreg::block(fs, key.first, key.second));
    Pencil scrambled = penreg::scramble(penreg::direct_sum(fs, parts), rng.next()).pencil;

    std::filesystem::create_directories(out_dir);
    std::string pencil_path = out_dir + "/pencil.json";
    std::string truth_path = out_dir + "/truth.json";
    write_file(pencil_path, penreg::pencil_to_json(scrambled));
    write_file(truth_path, penreg::truth_to_json(GroundTruth{seed, fs, blocks, d0}));
    std::cout << "seed " << seed << "\n" << pencil_path << "\n" << truth_path << "\n";
    return 0;
}

int cmd_verify(const std::string& pencil_path, const std::string& truth_path) {
    Pencil p = penreg::pencil_from_json(read_file(pencil_path));
    GroundTruth truth = penreg::truth_from_json(read_file(truth_path));
    if (!(p.field() == truth.field))
        throw penreg::ParseError("pencil and ground truth use different fields");
    Decomposition d = penreg::decompose(p);

    bool blocks_match = d.blocks == truth.blocks;
    bool r_match = d.regular_size() == truth.D.rows();
    bool d_similar = r_match && penreg::similar(d.D, truth.D);
    json report;
    report["match"] = blocks_match && r_match && d_similar;
    report["seed"] = truth.seed;
    if (!report["match"].get<bool>()) {
        json diff;
        diff["blocks_match"] = blocks_match;
        if (!blocks_match) {
            diff["expected_blocks"] = blocks_json(truth.blocks);
            diff["actual_blocks"] = blocks_json(d.blocks);
        }
        diff["r_match"] = r_match;
        if (!r_match) {
            diff["expected_r"] = truth.D.rows();
            diff["actual_r"] = d.regular_size();
        }
        diff["d_similar"] = d_similar;
        report["diff"] = std::move(diff);
    }
    std::cout << report.dump(2) << "\n";
    return report["match"].get<bool>() ? 0 : 1;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b) {
    Pencil a = penreg::pencil_from_json(read_file(path_a));
    Pencil b = penreg::pencil_from_json(read_file(path_b));
    if (!(a.field() == b.field()))
        throw penreg::ParseError("pencils use different fields");

    json report;
    report["left"] = json::parse(penreg::decomposition_to_json(penreg::decompose(a)));
    report["right"] = json::parse(penreg::decomposition_to_json(penreg::decompose(b)));
    bool equivalent = a.rows() == b.rows() && a.cols() == b.cols() &&
                      penreg::strictly_equivalent(a, b);
    report["equivalent"] = equivalent;
    std::cout << report.dump(2) << "\n";
    return equivalent ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact regularizing decomposition of matrix pencils"};
    app.require_subcommand(1);

    std::string in_path, out_path, truth_path, path_b;
    std::string blocks_text, field_name = "rational", out_dir;
    int regular = 0;
    std::uint64_t seed = 0;

    CLI::App* dec = app.add_subcommand("decompose", "decompose a pencil JSON file");
    dec->add_option("file", in_path, "pencil JSON file")->required();
    dec->add_option("-o,--out", out_path, "output file (default: stdout)");

    CLI::App* gen = app.add_subcommand("generate", "generate a scrambled pencil with ground truth");
    gen->add_option("--blocks", blocks_text, "singular blocks, e.g. I_J:3x1,L_R:2x2");
    gen->add_option("--regular", regular, "size of the random nonsingular regular part");
    gen->add_option("--field", field_name, "rational (default) or gf<p>");
    gen->add_option("--seed", seed, "generator seed; echoed into the ground truth")->required();
    gen->add_option("--out", out_dir, "output directory")->required();

    CLI::App* ver = app.add_subcommand("verify", "check a pencil against its ground truth");
    ver->add_option("pencil", in_path, "pencil JSON file")->required();
    ver->add_option("truth", truth_path, "ground-truth JSON file")->required();

    CLI::App* eqv = app.add_subcommand("equiv", "test two pencils for strict equivalence");
    eqv->add_option("a", in_path, "first pencil")->required();
    eqv->add_option("b", path_b, "second pencil")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed())
            return cmd_decompose(in_path, out_path);
        if (gen->parsed())
            return cmd_generate(blocks_text, regular, field_name, seed, out_dir);
        if (ver->parsed())
            return cmd_verify(in_path, truth_path);
        return cmd_equiv(in_path, path_b);
    } catch (const penreg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const penreg::InternalError& e) {
        std::cerr << "internal error (please report): " << e.what() << "\n";
        return 3;
    } catch (const penreg::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error (please report): " << e.what() << "\n";
        return 3;
    }
}
