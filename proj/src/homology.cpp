#include "stratkit/homology.hpp"

namespace stratkit {

ProjectiveSum projective_sum(const AlgebraPtr& alg, const std::vector<int>& mults) {
    ProjectiveSum ps;
    std::vector<Representation> parts;
    for (int v = 0; v < alg->n(); ++v)
        for (int k = 0; k < mults[v]; ++k) {
            ps.verts.push_back(v);
            parts.push_back(alg->projective(v));
        }
    ps.sum = direct_sum(alg, parts);
    return ps;
}

Cover projective_cover(const Representation& x) {
    const auto alg = x.algebra();
    const Field& f = alg->field();
    TopRadical tr = top_and_radical(x);
    std::vector<int> mults;
    for (int v = 0; v < alg->n(); ++v) mults.push_back(tr.top.rep.dim_at(v));
    ProjectiveSum p0 = projective_sum(alg, mults);

    // sections of the top projection pick one generator per cover summand
    std::vector<MatQ> sections;
    for (int v = 0; v < alg->n(); ++v) {
        // solve proj * s = id on the top coordinates
        auto sol = solve(tr.top.proj.at(v), MatQ::identity(tr.top.rep.dim_at(v), f));
        if (!sol.consistent) throw MathError("top projection not surjective");
        sections.push_back(sol.particular);
    }

    // column of each basis path p: v -> w is X_p applied to the generator
    std::vector<MatQ> fmaps;
    for (int w = 0; w < alg->n(); ++w) fmaps.emplace_back(x.dim_at(w), p0.rep().dim_at(w), f);
    std::vector<int> copy_count(alg->n(), 0);
    for (size_t summand = 0; summand < p0.verts.size(); ++summand) {
        int v = p0.verts[summand];
        MatQ gen = sections[v].col(copy_count[v]++);
        for (int w = 0; w < alg->n(); ++w) {
            const auto& paths = alg->basis_between(v, w);
            int base = p0.sum.off[summand][w];
            for (size_t pi = 0; pi < paths.size(); ++pi) {
                const auto& rec = alg->paths()[paths[pi]];
                MatQ colv = x.path_action(rec.arrows, v) * gen;
                for (int r = 0; r < x.dim_at(w); ++r) fmaps[w].at(r, base + static_cast<int>(pi)) = colv.at(r, 0);
            }
        }
    }
    Morphism epi(p0.rep(), x, fmaps);
    if (!epi.commutes()) throw MathError("projective cover map is not a morphism");
    if (!epi.is_surjective()) throw MathError("projective cover not surjective");
    return Cover{std::move(p0), std::move(epi)};
}

MinimalPresentation minimal_presentation(const Representation& x) {
    const auto alg = x.algebra();
    MinimalPresentation mp;
    Cover c0 = projective_cover(x);
    mp.p0 = c0.epi;
    mp.P0 = std::move(c0.p0);
    std::vector<MatQ> ker;
    for (int v = 0; v < alg->n(); ++v) ker.push_back(reduce(mp.p0.at(v)).nullspace);
    mp.syzygy = sub_representation(mp.P0.rep(), ker);

    // minimality: kernel inside rad P0 (no coordinate on the generators,
    // which sit first in each summand block)
    for (size_t summand = 0; summand < mp.P0.verts.size(); ++summand) {
        int v = mp.P0.verts[summand];
        int g = mp.P0.sum.off[summand][v];
        for (int k = 0; k < mp.syzygy.basis[v].cols(); ++k)
            if (!mp.syzygy.basis[v].at(g, k).is_zero())
                throw MathError("projective cover kernel escapes the radical");
    }

    Cover c1 = projective_cover(mp.syzygy.rep);
    mp.P1 = std::move(c1.p0);
    mp.p1 = Morphism::compose(mp.syzygy.incl, c1.epi);
    for (int v = 0; v < alg->n(); ++v) {
        mp.mult0.push_back(0);
        mp.mult1.push_back(0);
    }
    for (int v : mp.P0.verts) ++mp.mult0[v];
    for (int v : mp.P1.verts) ++mp.mult1[v];
    return mp;
}

std::vector<long long> g_vector(const Representation& x) {
    if (x.total_dim() == 0) return std::vector<long long>(x.algebra()->n(), 0);
    MinimalPresentation mp = minimal_presentation(x);
    std::vector<long long> g;
    for (int v = 0; v < x.algebra()->n(); ++v) g.push_back(mp.mult0[v] - mp.mult1[v]);
    return g;
}

namespace {

// algebra element w in e_a A e_b encoding one component P(a) -> P(b) of a map
// between projective sums: w = image of the generator of P(a)
using AlgElem = BoundQuiverAlgebra::SparseVec;

// The (l, k) component of a map between projective sums is right
// multiplication by the image of the generator of P(a_k): an element of
// e_a A e_b read off from block l of the generator's image column.
AlgElem component_element(const BoundQuiverAlgebra& alg, const ProjectiveSum& p1, const ProjectiveSum& p0,
                          const Morphism& f, int k, int l) {
    int a = p1.verts[k], b = p0.verts[l];
    const MatQ& fa = f.at(a);
    int gcol = p1.sum.off[k][a];  // the trivial path is the first basis path
    MatQ img(fa.rows(), 1, alg.field());
    for (int r = 0; r < fa.rows(); ++r) img.at(r, 0) = fa.at(r, gcol);
    MatQ local = p0.sum.proj[l].at(a) * img;  // coords over basis paths b->a
    const auto& paths = alg.basis_between(b, a);
    AlgElem w;
    for (size_t pi = 0; pi < paths.size(); ++pi)
        if (!local.at(static_cast<int>(pi), 0).is_zero())
            w.emplace_back(alg.basis_index(paths[pi]), local.at(static_cast<int>(pi), 0));
    return w;
}

}  // namespace

Representation ar_translate(const Representation& x) {
    const auto alg = x.algebra();
    const Field& f = alg->field();
    if (x.total_dim() == 0) return Representation::zero(alg);
    MinimalPresentation mp = minimal_presentation(x);
    if (mp.P1.empty()) return Representation::zero(alg);  // projective

    // nu P1 = sum I(a_k), nu P0 = sum I(b_l)
    std::vector<Representation> i1parts, i0parts;
    for (int a : mp.P1.verts) i1parts.push_back(alg->injective(a));
    for (int b : mp.P0.verts) i0parts.push_back(alg->injective(b));
    DirectSum nu1 = direct_sum(alg, i1parts);
    DirectSum nu0 = i0parts.empty() ? DirectSum{Representation::zero(alg), {}, {}, {}} : direct_sum(alg, i0parts);

    // block (l, k): D(lambda_w): I(a_k) -> I(b_l) for w = component element
    std::vector<MatQ> big;
    for (int v = 0; v < alg->n(); ++v) big.emplace_back(nu0.rep.dim_at(v), nu1.rep.dim_at(v), f);
    for (size_t k = 0; k < mp.P1.verts.size(); ++k)
        for (size_t l = 0; l < mp.P0.verts.size(); ++l) {
            AlgElem w = component_element(*alg, mp.P1, mp.P0, mp.p1, static_cast<int>(k), static_cast<int>(l));
            if (w.empty()) continue;
            int a = mp.P1.verts[k], b = mp.P0.verts[l];
            for (int v = 0; v < alg->n(); ++v) {
                // lambda_w : e_b A e_v -> e_a A e_v, x -> w*x ; matrix then transposed
                const auto& bpaths = alg->basis_between(v, b);
                const auto& apaths = alg->basis_between(v, a);
                if (bpaths.empty() || apaths.empty()) continue;
                MatQ lam(static_cast<int>(apaths.size()), static_cast<int>(bpaths.size()), f);
                for (size_t col = 0; col < bpaths.size(); ++col) {
                    int xb = alg->basis_index(bpaths[col]);
                    for (const auto& [wb, wc] : w) {
                        for (const auto& [pb, pc] : alg->mult(wb, xb)) {
                            // locate pb among apaths
                            for (size_t row = 0; row < apaths.size(); ++row)
                                if (alg->basis_index(apaths[row]) == pb)
                                    lam.at(static_cast<int>(row), static_cast<int>(col)) += wc * pc;
                        }
                    }
                }
                MatQ blk = lam.transpose();
                int roff = nu0.off[l][v], coff = nu1.off[k][v];
                for (int i = 0; i < blk.rows(); ++i)
                    for (int j = 0; j < blk.cols(); ++j) big[v].at(roff + i, coff + j) += blk.at(i, j);
            }
        }

    Morphism nup1(nu1.rep, nu0.rep, big);
    if (!nup1.commutes()) throw MathError("Nakayama image is not a morphism");
    std::vector<MatQ> ker;
    for (int v = 0; v < alg->n(); ++v) ker.push_back(reduce(nup1.at(v)).nullspace);
    return sub_representation(nu1.rep, ker).rep;
}

TauRigidReport tau_rigid_report(std::span<const Representation> summands) {
    TauRigidReport rep;
    std::vector<Representation> taus;
    for (const auto& m : summands) taus.push_back(ar_translate(m));
    for (size_t b = 0; b < summands.size(); ++b) {
        if (taus[b].total_dim() == 0) continue;
        for (size_t a = 0; a < summands.size(); ++a)
            if (hom_dim(summands[a], taus[b]) > 0) {
                rep.rigid = false;
                rep.witness_a = static_cast<int>(a);
                rep.witness_b = static_cast<int>(b);
                return rep;
            }
    }
    return rep;
}

bool is_tau_rigid(std::span<const Representation> summands) { return tau_rigid_report(summands).rigid; }

Tri is_tau_tilting(std::span<const Representation> summands, const SearchOpts& opts) {
    if (!is_tau_rigid(summands)) return Tri::No;
    // basic: pairwise non-isomorphic indecomposables
    for (size_t i = 0; i < summands.size(); ++i) {
        IndecResult ir = is_indecomposable(summands[i], opts);
        if (ir.verdict == Tri::Unknown) return Tri::Unknown;
        if (ir.verdict == Tri::No) return Tri::No;
        for (size_t j = i + 1; j < summands.size(); ++j) {
            IsoResult iso = is_isomorphic(summands[i], summands[j], opts);
            if (iso.verdict == Tri::Unknown) return Tri::Unknown;
            if (iso.verdict == Tri::Yes) return Tri::No;
        }
    }
    int n = summands.empty() ? 0 : summands[0].algebra()->n();
    return static_cast<int>(summands.size()) == n ? Tri::Yes : Tri::No;
}

ArPairing ar_pairing(const Representation& m, const Representation& n) {
    check_same_algebra(m, n);
    ArPairing out;
    auto g = g_vector(m);
    for (int v = 0; v < m.algebra()->n(); ++v) out.lhs += g[v] * n.dim_at(v);
    out.hom = hom_dim(m, n);
    out.hom_tau = hom_dim(n, ar_translate(m));
    if (out.lhs != out.hom - out.hom_tau)
        throw MathError("g-vector pairing identity violated: <g,dim> = " + std::to_string(out.lhs) +
                        ", hom = " + std::to_string(out.hom) + ", hom_tau = " + std::to_string(out.hom_tau));
    return out;
}

ExtClassSpace::ExtClassSpace(const Representation& x, const Representation& y)
    : x_(x), y_(y), pres_(minimal_presentation(x)) {
    const auto alg = x.algebra();
    const Field& f = alg->field();
    auto hom_omega = hom_basis(pres_.syzygy.rep, y);
    if (hom_omega.empty()) return;
    auto hom_p0 = hom_basis(pres_.P0.rep(), y);

    // coordinates of restricted maps in the hom_omega basis
    int flatdim = static_cast<int>(hom_omega[0].flatten().size());
    MatQ basis_mat(flatdim, static_cast<int>(hom_omega.size()), f);
    for (size_t k = 0; k < hom_omega.size(); ++k) {
        auto fl = hom_omega[k].flatten();
        for (int i = 0; i < flatdim; ++i) basis_mat.at(i, static_cast<int>(k)) = fl[i];
    }
    MatQ restricted(flatdim, static_cast<int>(hom_p0.size()), f);
    for (size_t k = 0; k < hom_p0.size(); ++k) {
        auto fl = Morphism::compose(hom_p0[k], pres_.syzygy.incl).flatten();
        for (int i = 0; i < flatdim; ++i) restricted.at(i, static_cast<int>(k)) = fl[i];
    }
    auto sol = solve(basis_mat, restricted);
    if (!sol.consistent) throw MathError("restriction image escapes Hom(Omega, Y)");
    MatQ img = col_basis(sol.particular);
    auto piv = col_basis_pivot_rows(img);
    std::vector<bool> is_piv(hom_omega.size(), false);
    for (int r : piv) is_piv[r] = true;
    for (size_t k = 0; k < hom_omega.size(); ++k)
        if (!is_piv[k]) reps_.push_back(hom_omega[k]);
}

ShortExactSequence ExtClassSpace::realize(const std::vector<Scalar>& coeffs) const {
    const auto alg = x_.algebra();
    const Field& f = alg->field();
    Morphism h = Morphism::zero(pres_.syzygy.rep, y_);
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) h = h + reps_[k].scaled(coeffs[k]);

    // pushout middle (Y + P0) / <(h(z), -i(z))>
    std::vector<Representation> pair{y_, pres_.P0.rep()};
    DirectSum ds = direct_sum(alg, pair);
    std::vector<MatQ> graph;
    for (int v = 0; v < alg->n(); ++v) {
        MatQ g(ds.rep.dim_at(v), pres_.syzygy.rep.dim_at(v), f);
        g.set_block(0, 0, h.at(v));
        MatQ negi = pres_.syzygy.incl.at(v).scaled(-Scalar::one(f));
        g.set_block(y_.dim_at(v), 0, negi);
        graph.push_back(std::move(g));
    }
    QuotObject mid = quotient_representation(ds.rep, graph);
    Morphism incl = Morphism::compose(mid.proj, ds.inj[0]);
    // projection induced by (y, p) -> p0(p)
    std::vector<MatQ> projs;
    for (int v = 0; v < alg->n(); ++v) {
        MatQ zp(x_.dim_at(v), ds.rep.dim_at(v), f);
        zp.set_block(0, y_.dim_at(v), pres_.p0.at(v));
        // factor through the quotient: zp = proj_x o mid.proj, recover on a section
        MatQ sec = quotient_section(col_basis(graph[v]), ds.rep.dim_at(v));
        projs.push_back(zp * sec);
    }
    Morphism proj(mid.rep, x_, projs);
    ShortExactSequence s{y_, mid.rep, x_, incl, proj};
    validate_ses(s);
    return s;
}

ShortExactSequence ExtClassSpace::realize_basis(int k) const {
    std::vector<Scalar> c(reps_.size(), Scalar::zero(x_.algebra()->field()));
    c[k] = Scalar::one(x_.algebra()->field());
    return realize(c);
}

int ext1_dim(const Representation& x, const Representation& y) {
    if (x.total_dim() == 0 || y.total_dim() == 0) return 0;
    return ExtClassSpace(x, y).dim();
}

UniversalExtension universal_extension(const Representation& x, const Representation& y) {
    const auto alg = x.algebra();
    const Field& f = alg->field();
    ExtClassSpace ext(x, y);
    int e = ext.dim();
    UniversalExtension ue;
    ue.copies = e;
    if (e == 0) {
        ue.middle = x;
        ue.proj = Morphism::identity(x);
        ue.incl = Morphism::zero(Representation::zero(alg), x);
        return ue;
    }
    const MinimalPresentation& mp = ext.presentation();
    const Representation& omega = mp.syzygy.rep;
    std::vector<Representation> ycopies(e, y);
    DirectSum ye = direct_sum(alg, ycopies);
    // stacked cocycle H = (h_1, ..., h_e): Omega -> Y^e
    Morphism H = Morphism::zero(omega, ye.rep);
    for (int k = 0; k < e; ++k) H = H + Morphism::compose(ye.inj[k], ext.cocycles()[k]);

    // pushout middle (Y^e + P0) / <(H(z), -i(z))>
    std::vector<Representation> yp{ye.rep, mp.P0.rep()};
    DirectSum ds = direct_sum(alg, yp);
    std::vector<MatQ> graph;
    for (int v = 0; v < alg->n(); ++v) {
        MatQ g(ds.rep.dim_at(v), omega.dim_at(v), f);
        g.set_block(0, 0, H.at(v));
        g.set_block(ye.rep.dim_at(v), 0, mp.syzygy.incl.at(v).scaled(-Scalar::one(f)));
        graph.push_back(std::move(g));
    }
    QuotObject mid = quotient_representation(ds.rep, graph);
    ue.middle = mid.rep;
    ue.incl = Morphism::compose(mid.proj, ds.inj[0]);
    std::vector<MatQ> projs;
    for (int v = 0; v < alg->n(); ++v) {
        MatQ zp(x.dim_at(v), ds.rep.dim_at(v), f);
        zp.set_block(0, ye.rep.dim_at(v), mp.p0.at(v));
        MatQ sec = quotient_section(col_basis(graph[v]), ds.rep.dim_at(v));
        projs.push_back(zp * sec);
    }
    ue.proj = Morphism(ue.middle, x, projs);
    ShortExactSequence s{ye.rep, ue.middle, x, ue.incl, ue.proj};
    validate_ses(s);
    if (ext1_dim(ue.middle, y) != 0) throw MathError("universal extension did not kill Ext^1");
    return ue;
}

}  // namespace stratkit
