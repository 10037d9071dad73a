#include "stratkit/quiver.hpp"

#include <set>

namespace stratkit {

int Quiver::vertex_index(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (vertices[i] == name) return i;
    throw InputError("unknown vertex '" + name + "'");
}

int Quiver::arrow_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
        if (arrows[i].name == name) return i;
    throw InputError("unknown arrow '" + name + "'");
}

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (!seen.insert(v).second) throw InputError("duplicate vertex '" + v + "'");
    seen.clear();
    for (const auto& a : arrows) {
        if (!seen.insert(a.name).second) throw InputError("duplicate arrow '" + a.name + "'");
        if (a.src < 0 || a.src >= n() || a.tgt < 0 || a.tgt >= n())
            throw InputError("arrow '" + a.name + "' has undeclared endpoint");
    }
}

int Relation::min_len() const {
    int m = terms.empty() ? 0 : static_cast<int>(terms[0].arrows.size());
    for (const auto& t : terms) m = std::min(m, static_cast<int>(t.arrows.size()));
    return m;
}

int Relation::max_len() const {
    int m = 0;
    for (const auto& t : terms) m = std::max(m, static_cast<int>(t.arrows.size()));
    return m;
}

Relation make_relation(const Quiver& q, std::vector<PathTerm> terms) {
    if (terms.empty()) throw InputError("empty relation");
    Relation r;
    r.terms = std::move(terms);
    std::string disp;
    for (const auto& t : r.terms) {
        if (t.arrows.size() < 2) throw InputError("relation outside radical square");
        int src = q.arrows[t.arrows.front()].src;
        int at = src;
        std::string word;
        for (int a : t.arrows) {
            if (q.arrows[a].src != at)
                throw InputError("non-composable path in relation");
            at = q.arrows[a].tgt;
            word = q.arrows[a].name + (word.empty() ? "" : "*" + word);
        }
        if (r.src < 0) {
            r.src = src;
            r.tgt = at;
        } else if (r.src != src || r.tgt != at) {
            throw InputError("relation terms do not share source and target");
        }
        if (!disp.empty()) disp += " + ";
        disp += t.coeff.str() + "*" + word;
    }
    r.display = disp;
    return r;
}

}  // namespace stratkit
