#include "stratkit/io.hpp"

#include "stratkit/fixtures.hpp"
#include "stratkit/util.hpp"

#include <fstream>
#include <sstream>

namespace stratkit {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

AlgebraPtr algebra_from_json(const json& doc) {
    Field field = Field::rationals();
    if (doc.contains("field")) {
        const auto& f = doc.at("field");
        if (f.is_string()) {
            if (f.get<std::string>() != "Q") throw InputError("unknown field '" + f.get<std::string>() + "'");
        } else if (f.is_object() && f.contains("Fp")) {
            field = Field::prime(f.at("Fp").get<std::int64_t>());
        } else {
            throw InputError("field must be \"Q\" or {\"Fp\": p}");
        }
    }
    Quiver q;
    if (!doc.contains("vertices") || !doc.contains("arrows") || !doc.contains("bound"))
        throw InputError("algebra document needs vertices, arrows and bound");
    for (const auto& v : doc.at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto& a : doc.at("arrows")) {
        Quiver::Arrow arr;
        arr.name = a.at("name").get<std::string>();
        arr.src = q.vertex_index(a.at("src").get<std::string>());
        arr.tgt = q.vertex_index(a.at("tgt").get<std::string>());
        q.arrows.push_back(std::move(arr));
    }
    q.validate();
    std::vector<Relation> rels;
    if (doc.contains("relations"))
        for (const auto& r : doc.at("relations")) {
            std::vector<PathTerm> terms;
            for (const auto& t : r) {
                PathTerm term;
                term.coeff = Scalar::parse(t.value("coeff", std::string("1")), field);
                // document order: rightmost-applied first; store application order
                std::vector<int> arrows;
                for (const auto& nm : t.at("path")) arrows.push_back(q.arrow_index(nm.get<std::string>()));
                term.arrows.assign(arrows.rbegin(), arrows.rend());
                terms.push_back(std::move(term));
            }
            rels.push_back(make_relation(q, std::move(terms)));
        }
    int bound = doc.at("bound").get<int>();
    return BoundQuiverAlgebra::build(std::move(q), field, std::move(rels), bound);
}

AlgebraPtr algebra_from_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad algebra document: ") + e.what());
    }
    return algebra_from_json(doc);
}

Representation module_from_json(const AlgebraPtr& alg, const json& doc,
                                const std::string& fixture_context) {
    if (doc.contains("name")) return module_by_name(alg, doc.at("name").get<std::string>(), fixture_context);
    const Field& f = alg->field();
    const Quiver& q = alg->quiver();
    std::vector<int> dims(alg->n(), 0);
    if (doc.contains("dims"))
        for (const auto& [k, v] : doc.at("dims").items()) dims[q.vertex_index(k)] = v.get<int>();
    std::vector<MatQ> maps;
    for (const auto& arr : q.arrows) maps.emplace_back(dims[arr.tgt], dims[arr.src], f);
    if (doc.contains("maps"))
        for (const auto& [k, m] : doc.at("maps").items()) {
            int a = q.arrow_index(k);
            const auto& arr = q.arrows[a];
            if (static_cast<int>(m.size()) != dims[arr.tgt])
                throw InputError("matrix for '" + k + "' has wrong row count");
            for (int i = 0; i < dims[arr.tgt]; ++i) {
                if (static_cast<int>(m[i].size()) != dims[arr.src])
                    throw InputError("matrix for '" + k + "' has wrong column count");
                for (int j = 0; j < dims[arr.src]; ++j) {
                    const auto& cell = m[i][j];
                    Scalar s = cell.is_string() ? Scalar::parse(cell.get<std::string>(), f)
                                                : Scalar::of_int(cell.get<std::int64_t>(), f);
                    maps[a].at(i, j) = s;
                }
            }
        }
    Representation rep(alg, dims, maps);
    if (auto bad = validate(rep)) throw InputError("module violates relations: " + bad->detail);
    return rep;
}

ojson module_to_json(const Representation& x) {
    const Quiver& q = x.algebra()->quiver();
    ojson doc;
    ojson dims;
    for (int v = 0; v < x.algebra()->n(); ++v) dims[q.vertices[v]] = x.dim_at(v);
    doc["dims"] = dims;
    ojson maps;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        ojson rows = ojson::array();
        for (int i = 0; i < x.map(a).rows(); ++i) {
            ojson row = ojson::array();
            for (int j = 0; j < x.map(a).cols(); ++j) row.push_back(x.map(a).at(i, j).str());
            rows.push_back(row);
        }
        maps[q.arrows[a].name] = rows;
    }
    doc["maps"] = maps;
    return doc;
}

Representation module_by_name(const AlgebraPtr& alg, const std::string& name,
                              const std::string& fixture_context) {
    // P(v), I(v), S(v) with v a declared vertex name
    if (name.size() >= 4 && name[1] == '(' && name.back() == ')') {
        char kind = name[0];
        std::string v = name.substr(2, name.size() - 3);
        if (kind == 'P') return alg->projective(alg->quiver().vertex_index(v));
        if (kind == 'I') return alg->injective(alg->quiver().vertex_index(v));
        if (kind == 'S') return alg->simple(alg->quiver().vertex_index(v));
    }
    auto dot = name.find('.');
    if (dot != std::string::npos) {
        std::string fixture = name.substr(0, dot);
        if (!is_fixture_name(fixture)) throw InputError("unknown fixture '" + fixture + "'");
        if (fixture != fixture_context)
            throw InputError("module '" + name + "' requires the " + fixture + " algebra");
        return fixture_module(alg, fixture, name.substr(dot + 1));
    }
    throw InputError("unknown module constructor '" + name + "'");
}

LoadedAlgebra load_algebra(const std::string& src) {
    LoadedAlgebra la;
    la.source = src;
    if (is_fixture_name(src)) {
        const FixtureInfo& fi = fixture_info(src);
        la.content = fi.algebra_json;
        la.fixture = src;
        la.notes = fi.notes;
    } else {
        la.content = read_file(src);
    }
    la.alg = algebra_from_string(la.content);
    return la;
}

LoadedModule load_module(const LoadedAlgebra& la, const std::string& src) {
    LoadedModule lm;
    lm.source = src;
    bool looks_like_name = src.find('(') != std::string::npos || is_fixture_name(src.substr(0, src.find('.')));
    if (looks_like_name && src.find('/') == std::string::npos && src.find(".json") == std::string::npos) {
        lm.rep = module_by_name(la.alg, src, la.fixture);
        lm.label = src;
        return lm;
    }
    std::string text = read_file(src);
    lm.digest = sha256_hex(text);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad module document: ") + e.what());
    }
    lm.rep = module_from_json(la.alg, doc, la.fixture);
    auto slash = src.find_last_of('/');
    lm.label = slash == std::string::npos ? src : src.substr(slash + 1);
    return lm;
}

}  // namespace stratkit
