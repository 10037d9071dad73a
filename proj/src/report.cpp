#include "stratkit/report.hpp"

#include "stratkit/fixtures.hpp"

#include <sstream>

namespace stratkit {

ojson matz_json(const MatZ& m) {
    ojson rows = ojson::array();
    for (int i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(static_cast<long long>(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ojson dims_json(const std::vector<int>& dims) {
    ojson a = ojson::array();
    for (int d : dims) a.push_back(d);
    return a;
}

ojson intvec_json(const std::vector<long long>& v) {
    ojson a = ojson::array();
    for (long long d : v) a.push_back(d);
    return a;
}

std::string label_module(const Representation& x, const LoadedAlgebra& la, const SearchOpts& opts) {
    if (x.total_dim() == 0) return "0";
    for (const auto& name : fixture_label_candidates(la.fixture)) {
        Representation cand;
        try {
            cand = module_by_name(la.alg, name, la.fixture);
        } catch (const InputError&) {
            continue;
        }
        if (cand.dims() != x.dims()) continue;
        if (is_isomorphic(x, cand, opts).verdict == Tri::Yes) return name;
    }
    return "-";
}

namespace {

bool scalar_only(const ojson& a) {
    for (const auto& x : a)
        if (x.is_object() || x.is_array()) return false;
    return true;
}

std::string inline_value(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render(const ojson& doc, std::ostringstream& os, int indent) {
    std::string pad(indent, ' ');
    for (const auto& [key, val] : doc.items()) {
        if (val.is_object()) {
            os << pad << key << ":\n";
            render(val, os, indent + 2);
        } else if (val.is_array() && !scalar_only(val)) {
            bool matrix_like = true;
            for (const auto& x : val)
                if (!x.is_array() || !scalar_only(x)) matrix_like = false;
            if (matrix_like) {
                os << pad << key << ":";
                std::string joined;
                for (const auto& row : val) joined += (joined.empty() ? " " : " ") + row.dump();
                if (joined.size() <= 72) {
                    os << joined << "\n";
                } else {
                    os << "\n";
                    for (const auto& row : val) os << pad << "  " << row.dump() << "\n";
                }
            } else {
                os << pad << key << ":\n";
                for (size_t i = 0; i < val.size(); ++i) {
                    if (val[i].is_object()) {
                        os << pad << "- [" << i + 1 << "]\n";
                        render(val[i], os, indent + 4);
                    } else {
                        os << pad << "- " << inline_value(val[i]) << "\n";
                    }
                }
            }
        } else {
            os << pad << key << ": " << inline_value(val) << "\n";
        }
    }
}

}  // namespace

std::string render_text(const ojson& doc) {
    std::ostringstream os;
    render(doc, os, 0);
    return os.str();
}

}  // namespace stratkit
