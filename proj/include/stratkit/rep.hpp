#pragma once

#include "stratkit/algebra.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stratkit {

// Finite-dimensional left module as a quiver representation: a space per
// vertex, a matrix per arrow, satisfying the algebra's relations.
class Representation {
  public:
    Representation() = default;
    Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<MatQ> maps);

    static Representation zero(const AlgebraPtr& alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim_at(int v) const { return dims_[v]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const MatQ& map(int arrow) const { return maps_[arrow]; }
    // matrix of a path acting on the module (arrows applied in order)
    MatQ path_action(const std::vector<int>& arrows, int src) const;
    std::string dims_str() const;  // "(d1,...,dn)"

  private:
    AlgebraPtr alg_;
    std::vector<int> dims_;
    std::vector<MatQ> maps_;
};

void check_same_algebra(const Representation& a, const Representation& b);

struct Violation {
    int relation = -1;
    std::string detail;
};

// nullopt = all relations evaluate to zero
std::optional<Violation> validate(const Representation& x);

class Morphism {
  public:
    Morphism() = default;
    Morphism(Representation src, Representation tgt, std::vector<MatQ> f);

    static Morphism zero(const Representation& src, const Representation& tgt);
    static Morphism identity(const Representation& x);

    const Representation& source() const { return src_; }
    const Representation& target() const { return tgt_; }
    const MatQ& at(int v) const { return f_[v]; }
    MatQ& at(int v) { return f_[v]; }

    bool is_zero() const;
    bool commutes() const;  // exact f_v X_a == Y_a f_u for every arrow
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    Morphism operator+(const Morphism& o) const;
    Morphism operator-(const Morphism& o) const;
    Morphism scaled(const Scalar& c) const;
    // composition: (g.then_after(f)) == g o f, f applied first
    static Morphism compose(const Morphism& g, const Morphism& f);

    // flat coordinate vector (vertex blocks in order, row-major)
    std::vector<Scalar> flatten() const;

  private:
    Representation src_, tgt_;
    std::vector<MatQ> f_;
};

// basis of Hom_A(X, Y), deterministic order
std::vector<Morphism> hom_basis(const Representation& x, const Representation& y);
int hom_dim(const Representation& x, const Representation& y);

struct SubObject {
    Representation rep;
    Morphism incl;                // rep -> ambient
    std::vector<MatQ> basis;      // per-vertex reduced column-echelon bases
};

struct QuotObject {
    Representation rep;
    Morphism proj;  // ambient -> rep
};

// B: per-vertex generating columns of an arrow-invariant subspace
SubObject sub_representation(const Representation& x, const std::vector<MatQ>& b);
QuotObject quotient_representation(const Representation& x, const std::vector<MatQ>& b);

struct MorphismParts {
    SubObject kernel;      // of source
    SubObject image;       // of target
    QuotObject cokernel;   // of target
};
MorphismParts morphism_parts(const Morphism& f);

struct DirectSum {
    Representation rep;
    std::vector<Morphism> inj;
    std::vector<Morphism> proj;
    std::vector<std::vector<int>> off;  // [part][vertex] block offset
};
DirectSum direct_sum(const AlgebraPtr& alg, std::span<const Representation> parts);

// trace of X in N: the sum of images of all maps X -> N; realizes the torsion
// part for the pair (Fac(X), X-perp)
SubObject trace_submodule(const Representation& x, const Representation& n);

struct ShortExactSequence {
    Representation sub, mid, quot;
    Morphism incl;  // sub -> mid
    Morphism proj;  // mid -> quot
};

// throws MathError when the data is not exact
void validate_ses(const ShortExactSequence& s);

// 0 -> t(N) -> N -> f(N) -> 0 for the torsion pair (Fac(X), X-perp)
ShortExactSequence canonical_sequence(const Representation& x, const Representation& n);

bool in_fac(const Representation& x, const Representation& n);

struct TopRadical {
    SubObject radical;
    QuotObject top;
};
TopRadical top_and_radical(const Representation& x);

// iterated radical subspace rad^k(X), as per-vertex bases in X coordinates
std::vector<MatQ> radical_power(const Representation& x, int k);

}  // namespace stratkit
