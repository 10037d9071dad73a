#include "stratkit/strat.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace stratkit {

namespace {

Representation sum_after(const AlgebraPtr& alg, std::span<const Representation> ordered, size_t from) {
    std::vector<Representation> tail(ordered.begin() + from, ordered.end());
    if (tail.empty()) return Representation::zero(alg);
    return direct_sum(alg, tail).rep;
}

}  // namespace

TFCheck is_tf_admissible(std::span<const Representation> ordered) {
    TFCheck res;
    if (ordered.empty()) return res;
    const auto alg = ordered[0].algebra();
    for (size_t i = 0; i < ordered.size(); ++i) {
        Representation rest = sum_after(alg, ordered, i + 1);
        if (in_fac(rest, ordered[i])) {
            res.ok = false;
            res.first_violation = static_cast<int>(i) + 1;
            return res;
        }
    }
    return res;
}

std::vector<int> find_tf_order(std::span<const Representation> summands) {
    if (summands.empty()) return {};
    const auto alg = summands[0].algebra();
    std::vector<int> remaining(summands.size());
    for (size_t i = 0; i < summands.size(); ++i) remaining[i] = static_cast<int>(i);
    std::vector<int> order;
    while (!remaining.empty()) {
        int pick = -1;
        for (size_t c = 0; c < remaining.size() && pick < 0; ++c) {
            std::vector<Representation> rest;
            for (size_t o = 0; o < remaining.size(); ++o)
                if (o != c) rest.push_back(summands[remaining[o]]);
            Representation restsum =
                rest.empty() ? Representation::zero(alg) : direct_sum(alg, rest).rep;
            if (!in_fac(restsum, summands[remaining[c]])) pick = static_cast<int>(c);
        }
        if (pick < 0)
            throw MathError("no TF order found: input is not a basic tau-rigid decomposition");
        order.push_back(remaining[pick]);
        remaining.erase(remaining.begin() + pick);
    }
    return order;
}

StratSystem standard_modules(const AlgebraPtr& alg, std::span<const Representation> ordered) {
    StratSystem sys;
    sys.alg = alg;
    sys.M.assign(ordered.begin(), ordered.end());
    for (size_t i = 0; i < ordered.size(); ++i) {
        Representation tail = sum_after(alg, ordered, i + 1);
        ShortExactSequence eps = canonical_sequence(tail, ordered[i]);
        sys.K.push_back(eps.sub);
        sys.Delta.push_back(eps.quot);
        sys.eps.push_back(std::move(eps));
    }
    return sys;
}

AxiomCheck check_stratifying_system(std::span<const Representation> delta, const SearchOpts& opts) {
    AxiomCheck res;
    std::ostringstream detail;
    int t = static_cast<int>(delta.size());
    for (int j = 0; j < t && res.hom_ok; ++j)
        for (int i = 0; i < j; ++i)
            if (hom_dim(delta[j], delta[i]) != 0) {
                res.hom_ok = false;
                detail << "Hom(Delta(" << j + 1 << "), Delta(" << i + 1 << ")) != 0; ";
                break;
            }
    for (int i = 0; i < t && res.ext_ok; ++i)
        for (int j = 0; j <= i; ++j)
            if (ext1_dim(delta[i], delta[j]) != 0) {
                res.ext_ok = false;
                detail << "Ext1(Delta(" << i + 1 << "), Delta(" << j + 1 << ")) != 0; ";
                break;
            }
    for (int i = 0; i < t && res.indec_ok; ++i) {
        if (delta[i].total_dim() == 0) {
            res.indec_ok = false;
            detail << "Delta(" << i + 1 << ") is zero; ";
            break;
        }
        IndecResult ir = is_indecomposable(delta[i], opts);
        if (ir.verdict == Tri::No) {
            res.indec_ok = false;
            detail << "Delta(" << i + 1 << ") decomposes; ";
        } else if (ir.verdict == Tri::Unknown) {
            // surfaced as a note, never silently coerced to a failure
            detail << "Delta(" << i + 1 << ") indecomposability undecided (budget); ";
        }
    }
    res.detail = detail.str();
    return res;
}

void build_ext_projective(StratSystem& sys, const SearchOpts& opts) {
    int t = sys.t();
    sys.Q.clear();
    sys.U.clear();
    sys.eta.clear();
    sys.u_layers.assign(t, {});
    for (int i = 0; i < t; ++i) {
        Representation e = sys.Delta[i];
        Morphism down = Morphism::identity(e);  // E -> Delta(i)
        for (int j = i + 1; j < t; ++j) {
            UniversalExtension ue = universal_extension(e, sys.Delta[j]);
            if (ue.copies == 0) continue;
            sys.u_layers[i].emplace_back(j, ue.copies);
            down = Morphism::compose(down, ue.proj);
            e = ue.middle;
        }
        // mandatory post-verification
        for (int l = 0; l < t; ++l)
            if (ext1_dim(e, sys.Delta[l]) != 0)
                throw MathError("tower verification failed: Ext1(Q(" + std::to_string(i + 1) +
                                "), Delta(" + std::to_string(l + 1) + ")) != 0");
        IndecResult ir = is_indecomposable(e, opts);
        if (ir.verdict == Tri::No)
            throw MathError("tower verification failed: Q(" + std::to_string(i + 1) + ") decomposes");
        if (ir.verdict == Tri::Unknown) throw MathError("iso test budget exceeded on Q(" + std::to_string(i + 1) + ")");

        MorphismParts parts = morphism_parts(down);
        ShortExactSequence eta{parts.kernel.rep, e, sys.Delta[i], parts.kernel.incl, down};
        validate_ses(eta);
        sys.U.push_back(parts.kernel.rep);
        sys.Q.push_back(e);
        sys.eta.push_back(std::move(eta));
    }
}

CartanReport matrices(const StratSystem& sys) {
    const auto alg = sys.alg;
    int n = alg->n(), t = sys.t();
    CartanReport rep;
    rep.G = MatZ(n, t);
    rep.S = MatZ(n, t);
    rep.C = MatZ(t, t);
    rep.R = MatZ(t, t);
    for (int i = 0; i < t; ++i) {
        auto g = g_vector(sys.M[i]);
        for (int v = 0; v < n; ++v) {
            rep.G.at(v, i) = g[v];
            rep.S.at(v, i) = sys.Delta[i].dim_at(v);
        }
        for (int j = 0; j < t; ++j) {
            rep.C.at(i, j) = hom_dim(sys.Q[i], sys.Delta[j]);
            rep.R.at(i, j) = Int(hom_dim(sys.U[i], sys.Delta[j])) - Int(hom_dim(sys.K[i], sys.Delta[j]));
        }
        rep.end_dims.push_back(hom_dim(sys.Delta[i], sys.Delta[i]));
    }
    rep.GtS = rep.G.transpose() * rep.S;

    if (!rep.C.is_upper_triangular()) throw MathError("Cartan matrix is not upper triangular");
    for (int i = 0; i < t; ++i)
        if (rep.C.at(i, i) != rep.end_dims[i])
            throw MathError("Cartan diagonal differs from the endomorphism dimensions");
    if (!(rep.C == rep.GtS + rep.R)) throw MathError("identity C == (G^tr)S + R violated");
    if (!rep.R.is_upper_triangular() || !MatZ(rep.R).zero_diagonal()) {
        // R must be strictly upper triangular
        bool strict = rep.R.is_upper_triangular();
        for (int i = 0; i < t && strict; ++i)
            if (rep.R.at(i, i) != 0) strict = false;
        if (!strict) throw MathError("residual matrix is not strictly upper triangular");
    }
    SnfResult snf = smith(rep.C);
    rep.invariant_factors = snf.invariant_factors;
    rep.coker_C = cokernel_structure(rep.C);
    Int diag_prod = 1;
    for (int i = 0; i < t; ++i) diag_prod *= rep.C.at(i, i);
    if (!rep.coker_C.order || *rep.coker_C.order != diag_prod)
        throw MathError("Cartan group order differs from the diagonal product");
    return rep;
}

namespace {

// nonnegative integer solutions of sum n_i * dims(Delta_i) == target
bool feasible(const std::vector<Representation>& delta, const std::vector<int>& target, size_t from) {
    bool all_zero = true;
    for (int d : target)
        if (d != 0) all_zero = false;
    if (all_zero) return true;
    if (from >= delta.size()) return false;
    const auto& dd = delta[from].dims();
    int cap = -1;
    for (size_t v = 0; v < dd.size(); ++v)
        if (dd[v] > 0) {
            int c = target[v] / dd[v];
            cap = cap < 0 ? c : std::min(cap, c);
        }
    if (cap < 0) cap = 0;
    for (int k = cap; k >= 0; --k) {
        std::vector<int> rest = target;
        bool ok = true;
        for (size_t v = 0; v < dd.size(); ++v) {
            rest[v] -= k * dd[v];
            if (rest[v] < 0) ok = false;
        }
        if (ok && feasible(delta, rest, from + 1)) return true;
    }
    return false;
}

bool dims_fit(const std::vector<int>& small, const std::vector<int>& big) {
    for (size_t v = 0; v < small.size(); ++v)
        if (small[v] > big[v]) return false;
    return true;
}

struct FiltSearch {
    const StratSystem& sys;
    const SearchOpts& opts;
    long long nodes = 0;
    bool unknown_hit = false;

    bool search(const Representation& x, std::vector<int>& peel) {
        if (x.total_dim() == 0) return true;
        if (++nodes > opts.backtrack_budget) {
            unknown_hit = true;
            return false;
        }
        if (!feasible(sys.Delta, x.dims(), 0)) return false;
        for (int i = 0; i < sys.t(); ++i) {
            if (!dims_fit(sys.Delta[i].dims(), x.dims())) continue;
            EpiResult epi = find_epi(x, sys.Delta[i], opts);
            if (epi.verdict == Tri::Unknown) {
                unknown_hit = true;
                continue;
            }
            if (epi.verdict == Tri::No) continue;
            MorphismParts parts = morphism_parts(*epi.witness);
            peel.push_back(i + 1);
            if (search(parts.kernel.rep, peel)) return true;
            peel.pop_back();
        }
        return false;
    }
};

}  // namespace

FiltrationResult in_filtration_category(const Representation& x, const StratSystem& sys,
                                        const SearchOpts& opts) {
    FiltrationResult res;
    // stage 1: integer feasibility
    if (!feasible(sys.Delta, x.dims(), 0)) {
        res.verdict = Tri::No;
        return res;
    }
    // stage 2: sufficient layer test via the torsion chain
    {
        bool ok = true;
        std::vector<int> witness;
        Representation cur = x;
        for (int k = 0; k < sys.t() && ok; ++k) {
            Representation tail = sum_after(sys.alg, sys.M, k + 1);
            ShortExactSequence seq = canonical_sequence(tail, cur);
            const Representation& layer = seq.quot;  // cur / t_{k+1}(cur)
            int ddim = sys.Delta[k].total_dim();
            if (layer.total_dim() == 0) {
                witness.push_back(0);
                cur = seq.sub;
                continue;
            }
            if (ddim == 0 || layer.total_dim() % ddim != 0) {
                ok = false;
                break;
            }
            int m = layer.total_dim() / ddim;
            std::vector<Representation> copies(m, sys.Delta[k]);
            Representation power = direct_sum(sys.alg, copies).rep;
            IsoResult iso = is_isomorphic(layer, power, opts);
            if (iso.verdict != Tri::Yes) {
                ok = false;
                break;
            }
            witness.push_back(m);
            cur = seq.sub;
        }
        if (ok && cur.total_dim() == 0) {
            res.verdict = Tri::Yes;
            res.layer_witness = witness;
            return res;
        }
    }
    // stage 3: bounded backtracking over epimorphisms onto the Delta(i)
    FiltSearch fs{sys, opts};
    std::vector<int> peel;
    bool found = fs.search(x, peel);
    res.nodes = fs.nodes;
    if (found) {
        res.verdict = Tri::Yes;
        res.peel_witness = peel;
    } else {
        res.verdict = fs.unknown_hit ? Tri::Unknown : Tri::No;
    }
    return res;
}

MtmReport verify_main_theorem(const StratSystem& sys, const CartanReport& rep, const SearchOpts& opts) {
    MtmReport out;
    std::ostringstream detail;
    int t = sys.t();

    // (a): upper triangularity plus the Hom interpretation, each entry via an
    // independent Hom computation
    out.a = rep.GtS.is_upper_triangular();
    for (int i = 0; i < t && out.a; ++i)
        for (int j = 0; j < t; ++j)
            if (rep.GtS.at(i, j) != hom_dim(sys.M[i], sys.Delta[j])) {
                out.a = false;
                detail << "GtS[" << i + 1 << "][" << j + 1 << "] != dim Hom(M_i, Delta(j)); ";
                break;
            }

    // (b): strictly upper triangular R, and R == 0 iff Hom(M_i, D(j)) matches
    // Hom(Q(i), D(j)) above the diagonal
    out.b = rep.R.is_upper_triangular();
    for (int i = 0; i < t && out.b; ++i)
        if (rep.R.at(i, i) != 0) out.b = false;
    if (out.b) {
        bool r_zero = rep.R.is_zero();
        bool match = true;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                if (hom_dim(sys.M[i], sys.Delta[j]) != hom_dim(sys.Q[i], sys.Delta[j])) match = false;
        if (r_zero != match) {
            out.b = false;
            detail << "R == 0 equivalence with Hom matching failed; ";
        }
    }

    out.c = rep.C == rep.GtS + rep.R;
    if (!out.c) detail << "C != GtS + R; ";

    // (d): sufficiency of M in F(Delta)
    FiltrationResult filt = in_filtration_category(direct_sum(sys.alg, sys.M).rep, sys, opts);
    out.m_filtered = filt.verdict;
    out.d_applicable = filt.verdict == Tri::Yes;
    if (out.d_applicable) {
        out.d = rep.R.is_zero();
        if (!out.d) detail << "M filtered but R != 0; ";
    }

    // (e): group order against the diagonal product of GtS
    Int prod = 1;
    for (int i = 0; i < t; ++i) prod *= rep.GtS.at(i, i);
    out.e = rep.coker_C.order && *rep.coker_C.order == prod;
    if (!out.e) detail << "|G_Delta| != prod diag(GtS); ";

    // lemma (a)
    out.lemma_a = true;
    for (int i = 0; i < t && out.lemma_a; ++i)
        for (int j = 0; j <= i; ++j)
            if (hom_dim(sys.U[i], sys.Delta[j]) != 0 || hom_dim(sys.K[i], sys.Delta[j]) != 0) {
                out.lemma_a = false;
                detail << "lemma (a) vanishing fails at (" << i + 1 << "," << j + 1 << "); ";
                break;
            }
    // lemma (b)
    out.lemma_b = true;
    for (int i = 0; i < t; ++i) {
        long long em = hom_dim(sys.M[i], sys.Delta[i]);
        long long eq = hom_dim(sys.Q[i], sys.Delta[i]);
        long long ed = rep.end_dims[i];
        if (em != eq || eq != ed) {
            out.lemma_b = false;
            detail << "lemma (b) fails at i=" << i + 1 << "; ";
        }
    }
    // lemma (d): explicit Hom bases against tau M_i
    out.lemma_d = true;
    for (int i = 0; i < t && out.lemma_d; ++i) {
        Representation tau = ar_translate(sys.M[i]);
        for (int j = 0; j < t; ++j) {
            if (hom_dim(sys.Delta[j], tau) != 0 || ext1_dim(sys.M[i], sys.Delta[j]) != 0) {
                out.lemma_d = false;
                detail << "lemma (d) fails at (" << i + 1 << "," << j + 1 << "); ";
                break;
            }
        }
    }
    out.detail = detail.str();
    return out;
}

namespace {

// eta_i isomorphic to eps_i: an isomorphism q: Q(i) -> M_i with
// pi_i o q == beta_i; the induced map on kernels is then an isomorphism
Tri ses_isomorphic(const ShortExactSequence& eta, const ShortExactSequence& eps, const SearchOpts& opts) {
    if (eta.mid.dims() != eps.mid.dims() || eta.sub.dims() != eps.sub.dims()) return Tri::No;
    const auto alg = eta.mid.algebra();
    const Field& f = alg->field();
    auto basis = hom_basis(eta.mid, eps.mid);
    if (basis.empty()) return eta.mid.total_dim() == 0 ? Tri::Yes : Tri::No;

    // affine constraint: eps.proj o q == eta.proj, coordinates over the basis
    int m = static_cast<int>(basis.size());
    std::vector<std::vector<Scalar>> flat;
    for (const auto& h : basis) flat.push_back(Morphism::compose(eps.proj, h).flatten());
    auto target = eta.proj.flatten();
    MatQ A(static_cast<int>(target.size()), m, f);
    MatQ b(static_cast<int>(target.size()), 1, f);
    for (size_t r = 0; r < target.size(); ++r) {
        b.at(static_cast<int>(r), 0) = target[r];
        for (int k = 0; k < m; ++k) A.at(static_cast<int>(r), k) = flat[k][r];
    }
    auto sol = solve(A, b);
    if (!sol.consistent) return Tri::No;

    auto member = [&](const std::vector<Scalar>& c) {
        Morphism q = Morphism::zero(eta.mid, eps.mid);
        for (int k = 0; k < m; ++k) {
            Scalar coeff = sol.particular.at(k, 0);
            for (int h = 0; h < sol.nullspace.cols(); ++h) coeff += sol.nullspace.at(k, h) * c[h];
            if (!coeff.is_zero()) q = q + basis[k].scaled(coeff);
        }
        return q;
    };
    int free_dim = sol.nullspace.cols();
    std::mt19937_64 rng(opts.seed ^ 0x94d049bb133111ebULL);
    std::uniform_int_distribution<long long> dist(-9, 9);
    for (int trial = 0; trial < opts.random_trials; ++trial) {
        std::vector<Scalar> c;
        for (int k = 0; k < free_dim; ++k) c.push_back(Scalar::of_int(dist(rng), f));
        Morphism q = member(c);
        if (q.is_isomorphism()) return Tri::Yes;
    }
    // full grid over the affine family decides existence
    long long deg = eta.mid.total_dim();
    std::vector<long long> c(free_dim, 0);
    long long budget = opts.grid_budget;
    // include the all-zero point
    {
        std::vector<Scalar> zero(free_dim, Scalar::zero(f));
        if (member(zero).is_isomorphism()) return Tri::Yes;
    }
    for (;;) {
        int k = 0;
        while (k < free_dim && c[k] == deg) c[k++] = 0;
        if (k == free_dim) return Tri::No;
        ++c[k];
        if (--budget < 0) return Tri::Unknown;
        std::vector<Scalar> cs;
        for (long long x : c) cs.push_back(Scalar::of_int(x, f));
        if (member(cs).is_isomorphism()) return Tri::Yes;
    }
}

}  // namespace

MinfdRow minfd_report(const StratSystem& sys, int i, const SearchOpts& opts) {
    MinfdRow row;
    row.a = in_filtration_category(sys.M[i], sys, opts).verdict;
    row.b = ses_isomorphic(sys.eta[i], sys.eps[i], opts);
    row.c = is_isomorphic(sys.Q[i], sys.M[i], opts).verdict;
    row.d = ext1_dim(sys.Q[i], sys.K[i]) == 0;
    row.e = is_isomorphic(sys.K[i], sys.U[i], opts).verdict;

    // consistency: all definite verdicts must agree
    std::vector<Tri> verdicts{row.a, row.b, row.c, row.d ? Tri::Yes : Tri::No, row.e};
    bool has_yes = false, has_no = false, has_unknown = false;
    for (Tri v : verdicts) {
        if (v == Tri::Yes) has_yes = true;
        if (v == Tri::No) has_no = true;
        if (v == Tri::Unknown) has_unknown = true;
    }
    if (has_yes && has_no)
        throw MathError("equivalence mismatch in the minimal-filtration report at i=" + std::to_string(i + 1));
    row.consistent = true;
    row.unknown_warning = has_unknown;
    return row;
}

DiagonalityReport diagonality_report(const StratSystem& sys, const CartanReport& rep, Tri m_filtered,
                                     Tri tau_tilting, const SearchOpts& opts) {
    DiagonalityReport out;
    int t = sys.t();

    out.qa = rep.C.is_diagonal();
    out.qb = out.qc = out.qd = true;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (hom_dim(sys.Q[i], sys.Q[j]) != 0) out.qb = false;
            if (hom_dim(sys.Q[i], sys.Delta[j]) != 0) out.qc = false;
            if (hom_dim(sys.Delta[i], sys.Delta[j]) != 0 ||
                hom_dim(sys.U[i], sys.Delta[j]) != ext1_dim(sys.Delta[i], sys.Delta[j]))
                out.qd = false;
        }
    if (out.qa != out.qb || out.qb != out.qc || out.qc != out.qd)
        throw MathError("equivalence mismatch in the diagonal-Cartan conditions");

    out.pa = rep.GtS.is_diagonal();
    out.pb = out.pc = true;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (hom_dim(sys.M[i], sys.K[j]) != 0) out.pa = false;
            if (hom_dim(sys.M[i], sys.M[j]) != 0) out.pb = false;
            if (hom_dim(sys.Delta[i], sys.Delta[j]) != 0 || hom_dim(sys.M[i], sys.K[j]) != 0 ||
                hom_dim(sys.K[i], sys.Delta[j]) != ext1_dim(sys.Delta[i], sys.Delta[j]))
                out.pc = false;
        }
    if (out.pa != out.pb || out.pb != out.pc)
        throw MathError("equivalence mismatch in the summand-level diagonal conditions");

    if (out.qa) {
        bool ca = true, cb = true, cd = true;
        for (int i = 0; i < t; ++i) {
            for (const auto& [j, mult] : sys.u_layers[i])
                if (j > i && mult > 0) ca = false;
            if (sys.U[i].total_dim() != 0) cd = false;
            for (int j = 0; j < t; ++j)
                if (ext1_dim(sys.Delta[i], sys.Delta[j]) != 0) cb = false;
        }
        Tri cc = Tri::Yes;
        for (int i = 0; i < t && cc == Tri::Yes; ++i) cc = is_isomorphic(sys.Q[i], sys.Delta[i], opts).verdict;
        out.ca = ca;
        out.cb = cb;
        out.cc = cc;
        out.cd = cd;
        if (cc != Tri::Unknown && !(ca == cb && cb == (cc == Tri::Yes) && (cc == Tri::Yes) == cd))
            throw MathError("equivalence mismatch in the diagonal corollary conditions");

        if (tau_tilting == Tri::Yes && m_filtered == Tri::Yes) {
            std::vector<Representation> projs;
            for (int v = 0; v < sys.alg->n(); ++v) projs.push_back(sys.alg->projective(v));
            Representation regular = direct_sum(sys.alg, projs).rep;
            Representation msum = direct_sum(sys.alg, sys.M).rep;
            out.m_is_regular = is_isomorphic(msum, regular, opts).verdict;
            if (out.m_is_regular == Tri::No)
                throw MathError("diagonal Cartan with verified hypotheses but M is not the regular module");
            out.weakly_triangular_flag = out.m_is_regular == Tri::Yes;
        }
    }
    out.consistent = true;
    return out;
}

SweepOutcome run_invariant_suite(const AlgebraPtr& alg, std::span<const Representation> ordered,
                                 const SearchOpts& opts) {
    TFCheck tf = is_tf_admissible(ordered);
    if (!tf.ok) throw MathError("order is not TF-admissible at position " + std::to_string(tf.first_violation));
    StratSystem sys = standard_modules(alg, ordered);
    AxiomCheck ax = check_stratifying_system(sys.Delta, opts);
    if (!ax.pass()) throw MathError("stratifying-system axioms failed: " + ax.detail);
    build_ext_projective(sys, opts);
    CartanReport rep = matrices(sys);  // throws on any matrix invariant failure
    MtmReport mtm = verify_main_theorem(sys, rep, opts);
    if (!mtm.pass()) throw MathError("main-theorem clause failed: " + mtm.detail);
    for (int i = 0; i < sys.t(); ++i) (void)minfd_report(sys, i, opts);  // throws on mismatch
    Tri tilting = is_tau_tilting(std::span<const Representation>(sys.M.data(), sys.M.size()), opts);
    (void)diagonality_report(sys, rep, mtm.m_filtered, tilting, opts);   // throws on mismatch
    if (mtm.m_filtered == Tri::Yes && !rep.R.is_zero())
        throw MathError("M is Delta-filtered but the residual matrix is nonzero");
    SweepOutcome out;
    out.mtm_pass = mtm.pass();
    out.m_filtered = mtm.m_filtered;
    out.r_zero = rep.R.is_zero();
    return out;
}

}  // namespace stratkit
