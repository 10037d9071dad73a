#pragma once

#include "stratkit/rep.hpp"

#include <cstdint>

namespace stratkit {

enum class Tri { Yes, No, Unknown };

inline const char* tri_str(Tri t) { return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "unknown"; }

// Budgets for the randomized-then-deterministic searches.  Seeds are always
// explicit; there is no global random state.
struct SearchOpts {
    std::uint64_t seed = 0;
    int random_trials = 48;
    long long grid_budget = 200000;        // candidate evaluations in grid phases
    long long backtrack_budget = 10000;    // nodes for filtration search
};

struct IsoResult {
    Tri verdict = Tri::Unknown;
    bool field_caveat = false;  // verdict relied on rationals-only reasoning
};

// dims equal and some k-combination of hom_basis(x, y) invertible at every
// vertex.  Random seeded trials first, then a full grid (complete by the
// polynomial identity argument) while the budget lasts.
IsoResult is_isomorphic(const Representation& x, const Representation& y, const SearchOpts& opts);

// convenience: certain yes/no only
inline bool isomorphic(const Representation& x, const Representation& y, const SearchOpts& opts) {
    auto r = is_isomorphic(x, y, opts);
    if (r.verdict == Tri::Unknown) throw MathError("iso test budget exceeded");
    return r.verdict == Tri::Yes;
}

struct EpiResult {
    Tri verdict = Tri::Unknown;
    std::optional<Morphism> witness;
};

// some combination of hom_basis(x, y) surjective at every vertex
EpiResult find_epi(const Representation& x, const Representation& y, const SearchOpts& opts);

struct IndecResult {
    Tri verdict = Tri::Unknown;
    bool field_caveat = false;
    // present when decomposable: a nontrivial direct decomposition
    std::vector<SubObject> pieces;
};

IndecResult is_indecomposable(const Representation& x, const SearchOpts& opts);

struct DecomposeResult {
    Tri complete = Tri::Yes;  // Unknown when a piece could not be certified
    bool field_caveat = false;
    std::vector<Representation> summands;  // sorted by (total dim, dims lex)
};

DecomposeResult decompose(const Representation& x, const SearchOpts& opts);

}  // namespace stratkit
