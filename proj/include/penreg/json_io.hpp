#pragma once

#include <cstdint>
#include <string>

#include "penreg/pencil.hpp"

namespace penreg {

/// Pencil interchange format:
///   { "field": "rational" | {"gfp": p}, "m": int, "n": int,
///     "A": [["1","1/2",...],...], "B": [[...],...] }
/// Entries are strings: "a/b" or "a" over the rationals, decimal residues
/// over GF(p). Parse failures throw ParseError with a field diagnostic.
Pencil pencil_from_json(const std::string& text);
std::string pencil_to_json(const Pencil& p);

/// Decomposition output format:
///   { "blocks": [{"kind": "I_J"|"J_I"|"L_R"|"LT_RT", "k": int, "count": int}, ...],
///     "r": int, "D": [[...]], "dims": {"phase1": [[u,v],...], ...} }
/// Blocks are sorted by kind then k; dims sequences carry the two
/// stationary padding entries.
std::string decomposition_to_json(const Decomposition& d);

/// Ground-truth sidecar written next to generated pencils:
///   { "seed": int, "field": ..., "blocks": [...], "r": int, "D": [[...]] }
struct GroundTruth {
    std::uint64_t seed = 0;
    FieldSpec field = FieldSpec::rational();
    BlockMultiset blocks;
    Matrix D = Matrix(FieldSpec::rational(), 0, 0);
};

GroundTruth truth_from_json(const std::string& text);
std::string truth_to_json(const GroundTruth& t);

} // namespace penreg
