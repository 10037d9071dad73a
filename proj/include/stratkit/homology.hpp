#pragma once

#include "stratkit/generic.hpp"
#include "stratkit/rep.hpp"

#include <span>

namespace stratkit {

// direct sum of indecomposable projectives P(verts[0]) + P(verts[1]) + ...
struct ProjectiveSum {
    std::vector<int> verts;
    DirectSum sum;  // rep + injections/projections per summand

    const Representation& rep() const { return sum.rep; }
    bool empty() const { return verts.empty(); }
};

ProjectiveSum projective_sum(const AlgebraPtr& alg, const std::vector<int>& mults);

struct Cover {
    ProjectiveSum p0;
    Morphism epi;  // P0 -> X
};

// projective cover P0 = sum P(i)^(dim top X)_i with kernel inside rad P0
Cover projective_cover(const Representation& x);

struct MinimalPresentation {
    ProjectiveSum P0, P1;
    Morphism p0;          // P0 -> X
    Morphism p1;          // P1 -> P0
    SubObject syzygy;     // Omega X inside P0
    std::vector<int> mult0, mult1;  // multiplicities a, a'
};

MinimalPresentation minimal_presentation(const Representation& x);

std::vector<long long> g_vector(const Representation& x);

// Auslander-Reiten translate: kernel of the Nakayama functor applied to the
// minimal presentation; zero exactly for projectives
Representation ar_translate(const Representation& x);

struct TauRigidReport {
    bool rigid = true;
    int witness_a = -1, witness_b = -1;  // Hom(M_a, tau M_b) != 0
};
TauRigidReport tau_rigid_report(std::span<const Representation> summands);
bool is_tau_rigid(std::span<const Representation> summands);
// requires summands pairwise non-isomorphic and indecomposable (checked)
Tri is_tau_tilting(std::span<const Representation> summands, const SearchOpts& opts);

struct ArPairing {
    long long lhs = 0;      // <g^M, dim N>
    long long hom = 0;      // dim Hom(M, N)
    long long hom_tau = 0;  // dim Hom(N, tau M)
};
// checks lhs == hom - hom_tau and throws MathError otherwise
ArPairing ar_pairing(const Representation& m, const Representation& n);

// Ext^1(X, Y) as the cokernel of Hom(P0, Y) -> Hom(Omega X, Y); stores
// cocycle representatives for realization
class ExtClassSpace {
  public:
    ExtClassSpace(const Representation& x, const Representation& y);

    int dim() const { return static_cast<int>(reps_.size()); }
    const Representation& source() const { return x_; }
    const Representation& target() const { return y_; }
    const std::vector<Morphism>& cocycles() const { return reps_; }  // Omega X -> Y
    const MinimalPresentation& presentation() const { return pres_; }

    // middle of the extension realized from the k-th representative (or a
    // combination); the zero combination realizes the split sequence
    ShortExactSequence realize(const std::vector<Scalar>& coeffs) const;
    ShortExactSequence realize_basis(int k) const;

  private:
    Representation x_, y_;
    MinimalPresentation pres_;
    std::vector<Morphism> reps_;
};

int ext1_dim(const Representation& x, const Representation& y);

// universal extension 0 -> Y^e -> E -> X -> 0 realizing a basis of
// Ext^1(X, Y); second component is the projection E -> X
struct UniversalExtension {
    Representation middle;
    Morphism proj;       // middle -> X
    Morphism incl;       // Y^e -> middle
    int copies = 0;      // e
};
UniversalExtension universal_extension(const Representation& x, const Representation& y);

}  // namespace stratkit
