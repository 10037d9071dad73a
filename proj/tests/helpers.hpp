#pragma once

#include "stratkit/io.hpp"
#include "stratkit/strat.hpp"

#include <numeric>

namespace testing_helpers {

using namespace stratkit;

inline AlgebraPtr ex1() {
    static AlgebraPtr alg = load_algebra("EX1").alg;
    return alg;
}

inline AlgebraPtr ex2() {
    static AlgebraPtr alg = load_algebra("EX2").alg;
    return alg;
}

// uniserial over EX1 by (1-based top vertex, length)
inline Representation ex1_u(int top, int len) {
    static const char* names[3][3] = {{"EX1.W1", "EX1.W12", "EX1.W123"},
                                      {"EX1.W2", "EX1.W23", "EX1.W231"},
                                      {"EX1.W3", "EX1.W31", "EX1.W312"}};
    return module_by_name(ex1(), names[top - 1][len - 1], "EX1");
}

// closed-form Hom dimensions between uniserials over the cyclic Nakayama
// algebra with radical cube zero: maps U(a,l) -> U(b,m) correspond to
// windows where a quotient of the source matches the length-k submodule of
// the target, whose top sits at b + m - k mod 3
inline int nakayama_hom_dim(int a, int l, int b, int m) {
    int count = 0;
    for (int k = 1; k <= std::min(l, m); ++k)
        if ((a - 1) % 3 == ((b - 1) + m - k) % 3) ++count;
    return count;
}

inline StratSystem full_system(const AlgebraPtr& alg, const std::vector<Representation>& ordered,
                               const SearchOpts& opts = {}) {
    StratSystem sys = standard_modules(alg, std::span<const Representation>(ordered.data(), ordered.size()));
    build_ext_projective(sys, opts);
    return sys;
}

inline std::vector<int> dims_of(const Representation& r) { return r.dims(); }

}  // namespace testing_helpers
