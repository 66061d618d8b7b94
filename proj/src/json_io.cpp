#include "penreg/json_io.hpp"

#include <json.hpp>

#include "penreg/errors.hpp"

namespace penreg {

namespace {

using json = nlohmann::ordered_json;

FieldSpec field_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "rational")
        return FieldSpec::rational();
    if (j.is_object() && j.contains("gfp") && j["gfp"].is_number_unsigned()) {
        try {
            return FieldSpec::gf(j["gfp"].get<std::uint64_t>());
        } catch (const UsageError& e) {
            throw ParseError(std::string("field: ") + e.what());
        }
    }
    throw ParseError("field: expected \"rational\" or {\"gfp\": p}");
}

json field_to_json(const FieldSpec& fs) {
    if (fs.is_rational())
        return json("rational");
    return json{{"gfp", fs.modulus()}};
}

Matrix matrix_from_json(const json& j, const FieldSpec& fs, int rows, int cols,
                        const std::string& name) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError(name + ": expected " + std::to_string(rows) + " rows");
    Matrix m(fs, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError(name + "[" + std::to_string(i) + "]: expected " +
                             std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            if (!row[c].is_string())
                throw ParseError(name + "[" + std::to_string(i) + "][" + std::to_string(c) +
                                 "]: entries must be strings");
            try {
                m.at(i, c) = FieldElement::from_string(fs, row[c].get<std::string>());
            } catch (const ParseError& e) {
                throw ParseError(name + "[" + std::to_string(i) + "][" + std::to_string(c) +
                                 "]: " + e.what());
            }
        }
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json blocks_to_json(const BlockMultiset& blocks) {
    json arr = json::array();
    for (const auto& [key, count] : blocks.entries()) {
        arr.push_back(json{{"kind", block_kind_name(key.first)},
                           {"k", key.second},
                           {"count", count}});
    }
    return arr;
}

BlockMultiset blocks_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError("blocks: expected an array");
    BlockMultiset blocks;
    for (const json& entry : j) {
        if (!entry.is_object() || !entry.contains("kind") || !entry.contains("k") ||
            !entry.contains("count"))
            throw ParseError("blocks: entries need kind, k and count");
        auto kind = block_kind_from_name(entry["kind"].get<std::string>());
        if (!kind)
            throw ParseError("blocks: unknown kind '" + entry["kind"].get<std::string>() + "'");
        int k = entry["k"].get<int>();
        std::int64_t count = entry["count"].get<std::int64_t>();
        if (k < 1 || count < 1)
            throw ParseError("blocks: k and count must be positive");
        blocks.add(*kind, k, count);
    }
    return blocks;
}

json parse_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError(std::string(what) + ": malformed JSON");
    return j;
}

int get_dimension(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer() || j[name].get<std::int64_t>() < 0)
        throw ParseError(std::string(name) + ": expected a nonnegative integer");
    return j[name].get<int>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

Pencil pencil_from_json(const std::string& text) {
    json j = parse_text(text, "pencil");
    if (!j.is_object() || !j.contains("field") || !j.contains("A") || !j.contains("B"))
        throw ParseError("pencil: expected an object with field, m, n, A, B");
    FieldSpec fs = field_from_json(j["field"]);
    int m = get_dimension(j, "m");
    int n = get_dimension(j, "n");
    Matrix a = matrix_from_json(j["A"], fs, m, n, "A");
    Matrix b = matrix_from_json(j["B"], fs, m, n, "B");
    return Pencil(std::move(a), std::move(b));
}

std::string pencil_to_json(const Pencil& p) {
    json j;
    j["field"] = field_to_json(p.field());
    j["m"] = p.rows();
    j["n"] = p.cols();
    j["A"] = matrix_to_json(p.A);
    j["B"] = matrix_to_json(p.B);
    return dump(j);
}

std::string decomposition_to_json(const Decomposition& d) {
    json j;
    j["blocks"] = blocks_to_json(d.blocks);
    j["r"] = d.regular_size();
    j["D"] = matrix_to_json(d.D);
    json dims;
    for (auto [name, seq] : {std::pair{"phase1", &d.dims_phase1},
                             std::pair{"phase2", &d.dims_phase2},
                             std::pair{"phase3", &d.dims_phase3}}) {
        json arr = json::array();
        for (const DimPair& dp : *seq)
            arr.push_back(json::array({dp.u, dp.v}));
        dims[name] = std::move(arr);
    }
    j["dims"] = std::move(dims);
    return dump(j);
}

GroundTruth truth_from_json(const std::string& text) {
    json j = parse_text(text, "ground truth");
    if (!j.is_object() || !j.contains("seed") || !j.contains("field") || !j.contains("blocks") ||
        !j.contains("D"))
        throw ParseError("ground truth: expected an object with seed, field, blocks, r, D");
    GroundTruth t;
    t.seed = j["seed"].get<std::uint64_t>();
    t.field = field_from_json(j["field"]);
    t.blocks = blocks_from_json(j["blocks"]);
    int r = get_dimension(j, "r");
    t.D = matrix_from_json(j["D"], t.field, r, r, "D");
    return t;
}

std::string truth_to_json(const GroundTruth& t) {
    json j;
    j["seed"] = t.seed;
    j["field"] = field_to_json(t.field);
    j["blocks"] = blocks_to_json(t.blocks);
    j["r"] = t.D.rows();
    j["D"] = matrix_to_json(t.D);
    return dump(j);
}

} // namespace penreg
