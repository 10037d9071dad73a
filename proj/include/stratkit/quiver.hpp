#pragma once

#include "stratkit/numbers.hpp"

#include <string>
#include <vector>

namespace stratkit {

struct Quiver {
    struct Arrow {
        std::string name;
        int src = -1, tgt = -1;
    };

    std::vector<std::string> vertices;  // positions 0..n-1
    std::vector<Arrow> arrows;

    int n() const { return static_cast<int>(vertices.size()); }
    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;
    void validate() const;  // distinct names, endpoints declared
};

// One monomial of a relation; arrows listed in application order
// (arrows[0] acts first).
struct PathTerm {
    Scalar coeff;
    std::vector<int> arrows;
};

// Linear combination of parallel paths, each of length >= 2.
struct Relation {
    std::vector<PathTerm> terms;
    int src = -1, tgt = -1;
    std::string display;

    int min_len() const;
    int max_len() const;
};

// Validates term composability and uniform endpoints, fills src/tgt/display.
Relation make_relation(const Quiver& q, std::vector<PathTerm> terms);

}  // namespace stratkit
