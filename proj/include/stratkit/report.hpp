#pragma once

#include "stratkit/generic.hpp"
#include "stratkit/io.hpp"
#include "stratkit/smith.hpp"

namespace stratkit {

ojson matz_json(const MatZ& m);
ojson dims_json(const std::vector<int>& dims);
ojson intvec_json(const std::vector<long long>& v);

// label a module against the named constructors (and fixture zoo) of the
// loaded algebra; "-" when nothing matches
std::string label_module(const Representation& x, const LoadedAlgebra& la, const SearchOpts& opts);

// deterministic human-readable rendering of a report document
std::string render_text(const ojson& doc);

}  // namespace stratkit
