#pragma once

#include "stratkit/rep.hpp"

#include <json.hpp>

#include <string>

namespace stratkit {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// algebra document: {"field": "Q"|{"Fp": p}, "vertices": [...],
//   "arrows": [{"name","src","tgt"}], "relations": [[{"coeff","path"}...]...],
//   "bound": L, "notes": [...]}   (path arrays list the rightmost-applied
//   arrow first)
AlgebraPtr algebra_from_json(const json& doc);
AlgebraPtr algebra_from_string(const std::string& text);

// module document: {"dims": {"v": d, ...}, "maps": {"arrow": [[...]...]}}
// or {"name": "P(1)"}
Representation module_from_json(const AlgebraPtr& alg, const json& doc,
                                const std::string& fixture_context);
ojson module_to_json(const Representation& x);

// named constructors P(i), I(i), S(i) against vertex names, plus fixture ids
// ("EX1.M2") when the algebra came from the registry
Representation module_by_name(const AlgebraPtr& alg, const std::string& name,
                              const std::string& fixture_context);

struct LoadedAlgebra {
    AlgebraPtr alg;
    std::string source;       // path or registry name as given
    std::string content;      // raw document text (registry text for fixtures)
    std::string fixture;      // registry name when applicable, else empty
    std::vector<std::string> notes;
};

// src = file path or registry fixture name (EX1, EX2)
LoadedAlgebra load_algebra(const std::string& src);

struct LoadedModule {
    Representation rep;
    std::string source;  // as given
    std::string label;   // constructor/fixture name or file stem
    std::string digest;  // content digest for file-backed modules
};

LoadedModule load_module(const LoadedAlgebra& la, const std::string& src);

std::string read_file(const std::string& path);

}  // namespace stratkit
