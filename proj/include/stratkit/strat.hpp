#pragma once

#include "stratkit/homology.hpp"
#include "stratkit/smith.hpp"

#include <optional>

namespace stratkit {

struct TFCheck {
    bool ok = true;
    int first_violation = -1;  // 1-based position failing M_i not in Fac(sum_{j>i})
};

// order is implicit in the span: position i must avoid Fac of the later ones
TFCheck is_tf_admissible(std::span<const Representation> ordered);

// greedy TF order: repeatedly take the lowest-index summand not in the Fac of
// the remaining ones; returns indices into the input list
std::vector<int> find_tf_order(std::span<const Representation> summands);

struct StratSystem {
    AlgebraPtr alg;
    std::vector<Representation> M;      // TF-admissible order
    std::vector<Representation> Delta;  // Delta(i) = f_{i+1}(M_i)
    std::vector<Representation> K;      // kernels of the canonical sequences
    std::vector<ShortExactSequence> eps;
    std::vector<Representation> Q, U;   // Ext-projective covers
    std::vector<ShortExactSequence> eta;
    std::vector<std::vector<std::pair<int, int>>> u_layers;  // per i: (j, multiplicity)

    int t() const { return static_cast<int>(M.size()); }
};

// stage 1: Delta, K, eps
StratSystem standard_modules(const AlgebraPtr& alg, std::span<const Representation> ordered);

struct AxiomCheck {
    bool hom_ok = true;    // Hom(D(j), D(i)) == 0 for j > i
    bool ext_ok = true;    // Ext^1(D(i), D(j)) == 0 for i >= j
    bool indec_ok = true;  // every Delta(i) nonzero and indecomposable
    std::string detail;
    bool pass() const { return hom_ok && ext_ok && indec_ok; }
};

AxiomCheck check_stratifying_system(std::span<const Representation> delta, const SearchOpts& opts);

// stage 2: Q, U, eta via ascending universal-extension towers; verifies
// Ext^1(Q(i), Delta(l)) == 0 for every l and Q(i) indecomposable
void build_ext_projective(StratSystem& sys, const SearchOpts& opts);

struct CartanReport {
    MatZ G;    // n x t, columns g^{M_i}
    MatZ S;    // n x t, columns dim Delta(i)
    MatZ R;    // t x t residual
    MatZ C;    // t x t, dim Hom(Q(i), Delta(j))
    MatZ GtS;  // (G^tr) S
    std::vector<long long> end_dims;  // dim End(Delta(i))
    std::vector<Int> invariant_factors;
    CokerStructure coker_C;
    std::optional<CokerStructure> coker_S;  // set when the endomorphism-algebra
                                            // corollary hypotheses are verified
};

// computes all matrices and checks every CartanReport invariant, including
// C == (G^tr)S + R along independent code paths; throws MathError on any
// violation
CartanReport matrices(const StratSystem& sys);

struct FiltrationResult {
    Tri verdict = Tri::Unknown;
    // stage 2 witness: multiplicity of Delta(k) in layer k (top to bottom)
    std::vector<int> layer_witness;
    // stage 3 witness: indices of top factors peeled off
    std::vector<int> peel_witness;
    long long nodes = 0;
};

FiltrationResult in_filtration_category(const Representation& x, const StratSystem& sys,
                                        const SearchOpts& opts);

struct MtmReport {
    bool a = false;          // GtS upper triangular and == dim Hom(M_i, Delta(j))
    bool b = false;          // R strictly upper + the Hom-match equivalence
    bool c = false;          // C == GtS + R
    Tri m_filtered = Tri::Unknown;  // M in F(Delta)?
    bool d_applicable = false;
    bool d = true;           // R == 0 whenever m_filtered == Yes
    bool e = false;          // |G_Delta| == prod of diagonal of GtS
    bool lemma_a = false;    // Hom(U(i)/K(i), Delta(j)) == 0 for i >= j
    bool lemma_b = false;    // Hom(M_i, D(i)) ~ Hom(Q(i), D(i)) ~ End(D(i))
    bool lemma_d = false;    // Hom(Delta(j), tau M_i) == 0 and Ext^1(M_i, Delta(j)) == 0
    std::string detail;

    bool pass() const { return a && b && c && d && e && lemma_a && lemma_b && lemma_d; }
};

MtmReport verify_main_theorem(const StratSystem& sys, const CartanReport& rep, const SearchOpts& opts);

struct MinfdRow {
    Tri a = Tri::Unknown;  // M_i in F(Delta)
    Tri b = Tri::Unknown;  // eta_i isomorphic to eps_i
    Tri c = Tri::Unknown;  // Q(i) ~ M_i
    bool d = false;        // Ext^1(Q(i), K(i)) == 0
    Tri e = Tri::Unknown;  // K(i) ~ U(i)
    bool consistent = false;
    bool unknown_warning = false;
    bool value() const { return d; }  // the agreed verdict when consistent
};

// evaluates the five equivalent conditions independently and asserts they
// agree; throws MathError on a definite mismatch
MinfdRow minfd_report(const StratSystem& sys, int i, const SearchOpts& opts);

struct DiagonalityReport {
    // Ext-projective system level (equivalent conditions)
    bool qa = false, qb = false, qc = false, qd = false;
    // tau-rigid summand level (equivalent conditions)
    bool pa = false, pb = false, pc = false;
    // corollary conditions, evaluated only when C is diagonal
    std::optional<bool> ca, cb, cd;
    std::optional<Tri> cc;
    // diagonal theorem extras (tau-tilting, M filtered, C diagonal)
    std::optional<Tri> m_is_regular;  // M isomorphic to the sum of projectives
    bool weakly_triangular_flag = false;
    bool consistent = false;
};

DiagonalityReport diagonality_report(const StratSystem& sys, const CartanReport& rep, Tri m_filtered,
                                     Tri tau_tilting, const SearchOpts& opts);

// end-to-end invariant suite for one TF-admissible order; throws MathError
// with a description when any invariant fails
struct SweepOutcome {
    bool mtm_pass = false;
    Tri m_filtered = Tri::Unknown;
    bool r_zero = false;
};
SweepOutcome run_invariant_suite(const AlgebraPtr& alg, std::span<const Representation> ordered,
                                 const SearchOpts& opts);

}  // namespace stratkit
