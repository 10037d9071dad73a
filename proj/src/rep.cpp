#include "stratkit/rep.hpp"

#include <sstream>

namespace stratkit {

Representation::Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<MatQ> maps)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (static_cast<int>(dims_.size()) != alg_->n() ||
        static_cast<int>(maps_.size()) != static_cast<int>(alg_->quiver().arrows.size()))
        throw MathError("representation shape mismatch");
    for (size_t a = 0; a < maps_.size(); ++a) {
        const auto& arr = alg_->quiver().arrows[a];
        if (maps_[a].rows() != dims_[arr.tgt] || maps_[a].cols() != dims_[arr.src])
            throw MathError("arrow matrix shape mismatch at '" + arr.name + "'");
    }
}

Representation Representation::zero(const AlgebraPtr& alg) {
    std::vector<int> dims(alg->n(), 0);
    std::vector<MatQ> maps(alg->quiver().arrows.size(), MatQ(0, 0, alg->field()));
    return Representation(alg, dims, maps);
}

int Representation::total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
}

MatQ Representation::path_action(const std::vector<int>& arrows, int src) const {
    MatQ m = MatQ::identity(dims_[src], alg_->field());
    for (int a : arrows) m = maps_[a] * m;
    return m;
}

std::string Representation::dims_str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
    os << ")";
    return os.str();
}

void check_same_algebra(const Representation& a, const Representation& b) {
    if (a.algebra() != b.algebra()) throw MathError("mixed algebras");
}

std::optional<Violation> validate(const Representation& x) {
    const auto& rels = x.algebra()->relations();
    for (int r = 0; r < static_cast<int>(rels.size()); ++r) {
        const auto& rel = rels[r];
        MatQ acc(x.dim_at(rel.tgt), x.dim_at(rel.src), x.algebra()->field());
        for (const auto& t : rel.terms)
            acc = acc + x.path_action(t.arrows, rel.src).scaled(t.coeff);
        if (!acc.is_zero())
            return Violation{r, "relation " + rel.display + " acts nontrivially (vertices " +
                                    x.algebra()->quiver().vertices[rel.src] + " -> " +
                                    x.algebra()->quiver().vertices[rel.tgt] + ")"};
    }
    return std::nullopt;
}

Morphism::Morphism(Representation src, Representation tgt, std::vector<MatQ> f)
    : src_(std::move(src)), tgt_(std::move(tgt)), f_(std::move(f)) {
    check_same_algebra(src_, tgt_);
    for (int v = 0; v < src_.algebra()->n(); ++v)
        if (f_[v].rows() != tgt_.dim_at(v) || f_[v].cols() != src_.dim_at(v))
            throw MathError("morphism block shape mismatch");
}

Morphism Morphism::zero(const Representation& src, const Representation& tgt) {
    std::vector<MatQ> f;
    for (int v = 0; v < src.algebra()->n(); ++v)
        f.emplace_back(tgt.dim_at(v), src.dim_at(v), src.algebra()->field());
    return Morphism(src, tgt, std::move(f));
}

Morphism Morphism::identity(const Representation& x) {
    std::vector<MatQ> f;
    for (int v = 0; v < x.algebra()->n(); ++v) f.push_back(MatQ::identity(x.dim_at(v), x.algebra()->field()));
    return Morphism(x, x, std::move(f));
}

bool Morphism::is_zero() const {
    for (const auto& m : f_)
        if (!m.is_zero()) return false;
    return true;
}

bool Morphism::commutes() const {
    const auto& q = src_.algebra()->quiver();
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        const auto& arr = q.arrows[a];
        if (!(f_[arr.tgt] * src_.map(a) == tgt_.map(a) * f_[arr.src])) return false;
    }
    return true;
}

bool Morphism::is_injective() const {
    for (int v = 0; v < src_.algebra()->n(); ++v)
        if (rank_of(f_[v]) != src_.dim_at(v)) return false;
    return true;
}

bool Morphism::is_surjective() const {
    for (int v = 0; v < src_.algebra()->n(); ++v)
        if (rank_of(f_[v]) != tgt_.dim_at(v)) return false;
    return true;
}

Morphism Morphism::operator+(const Morphism& o) const {
    std::vector<MatQ> f;
    for (size_t v = 0; v < f_.size(); ++v) f.push_back(f_[v] + o.f_[v]);
    return Morphism(src_, tgt_, std::move(f));
}

Morphism Morphism::operator-(const Morphism& o) const {
    std::vector<MatQ> f;
    for (size_t v = 0; v < f_.size(); ++v) f.push_back(f_[v] - o.f_[v]);
    return Morphism(src_, tgt_, std::move(f));
}

Morphism Morphism::scaled(const Scalar& c) const {
    std::vector<MatQ> f;
    for (const auto& m : f_) f.push_back(m.scaled(c));
    return Morphism(src_, tgt_, std::move(f));
}

Morphism Morphism::compose(const Morphism& g, const Morphism& f) {
    std::vector<MatQ> h;
    for (int v = 0; v < f.source().algebra()->n(); ++v) h.push_back(g.at(v) * f.at(v));
    return Morphism(f.source(), g.target(), std::move(h));
}

std::vector<Scalar> Morphism::flatten() const {
    std::vector<Scalar> out;
    for (const auto& m : f_)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
    return out;
}

std::vector<Morphism> hom_basis(const Representation& x, const Representation& y) {
    check_same_algebra(x, y);
    const auto alg = x.algebra();
    const Field& f = alg->field();
    int n = alg->n();

    std::vector<int> var_off(n + 1, 0);
    for (int v = 0; v < n; ++v) var_off[v + 1] = var_off[v] + y.dim_at(v) * x.dim_at(v);
    int vars = var_off[n];
    auto var_idx = [&](int v, int i, int j) { return var_off[v] + i * x.dim_at(v) + j; };

    int eqs = 0;
    const auto& arrows = alg->quiver().arrows;
    for (const auto& arr : arrows) eqs += y.dim_at(arr.tgt) * x.dim_at(arr.src);

    MatQ C(eqs, vars, f);
    int row = 0;
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        const auto& arr = arrows[a];
        const MatQ& Xa = x.map(a);
        const MatQ& Ya = y.map(a);
        for (int i = 0; i < y.dim_at(arr.tgt); ++i)
            for (int j = 0; j < x.dim_at(arr.src); ++j) {
                // (f_tgt X_a - Y_a f_src)[i][j] == 0
                for (int c = 0; c < x.dim_at(arr.tgt); ++c)
                    if (!Xa.at(c, j).is_zero()) C.at(row, var_idx(arr.tgt, i, c)) += Xa.at(c, j);
                for (int k = 0; k < y.dim_at(arr.src); ++k)
                    if (!Ya.at(i, k).is_zero()) C.at(row, var_idx(arr.src, k, j)) -= Ya.at(i, k);
                ++row;
            }
    }

    MatQ null = reduce(C).nullspace;
    std::vector<Morphism> basis;
    for (int k = 0; k < null.cols(); ++k) {
        std::vector<MatQ> blocks;
        for (int v = 0; v < n; ++v) {
            MatQ m(y.dim_at(v), x.dim_at(v), f);
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) m.at(i, j) = null.at(var_idx(v, i, j), k);
            blocks.push_back(std::move(m));
        }
        basis.emplace_back(x, y, std::move(blocks));
    }
    return basis;
}

int hom_dim(const Representation& x, const Representation& y) {
    check_same_algebra(x, y);
    const auto alg = x.algebra();
    int n = alg->n();
    int vars = 0;
    for (int v = 0; v < n; ++v) vars += y.dim_at(v) * x.dim_at(v);
    if (vars == 0) return 0;
    // same constraint matrix as hom_basis
    return static_cast<int>(hom_basis(x, y).size());
}

SubObject sub_representation(const Representation& x, const std::vector<MatQ>& b) {
    const auto alg = x.algebra();
    std::vector<MatQ> basis;
    std::vector<int> dims;
    for (int v = 0; v < alg->n(); ++v) {
        basis.push_back(col_basis(b[v]));
        dims.push_back(basis.back().cols());
    }
    std::vector<MatQ> maps;
    for (int a = 0; a < static_cast<int>(alg->quiver().arrows.size()); ++a) {
        const auto& arr = alg->quiver().arrows[a];
        MatQ img = x.map(a) * basis[arr.src];
        auto sol = solve(basis[arr.tgt], img);
        if (!sol.consistent) throw MathError("subspace not arrow-invariant");
        maps.push_back(sol.particular);
    }
    Representation sub(alg, dims, std::move(maps));
    Morphism incl(sub, x, basis);
    return SubObject{std::move(sub), std::move(incl), std::move(basis)};
}

QuotObject quotient_representation(const Representation& x, const std::vector<MatQ>& b) {
    const auto alg = x.algebra();
    std::vector<MatQ> basis, projs, secs;
    std::vector<int> dims;
    for (int v = 0; v < alg->n(); ++v) {
        basis.push_back(col_basis(b[v]));
        projs.push_back(quotient_projection(basis.back(), x.dim_at(v)));
        secs.push_back(quotient_section(basis.back(), x.dim_at(v)));
        dims.push_back(projs.back().rows());
    }
    std::vector<MatQ> maps;
    for (int a = 0; a < static_cast<int>(alg->quiver().arrows.size()); ++a) {
        const auto& arr = alg->quiver().arrows[a];
        if (!in_col_space(basis[arr.tgt], x.map(a) * basis[arr.src]))
            throw MathError("subspace not arrow-invariant");
        maps.push_back(projs[arr.tgt] * x.map(a) * secs[arr.src]);
    }
    Representation quot(alg, dims, std::move(maps));
    Morphism proj(x, quot, projs);
    return QuotObject{std::move(quot), std::move(proj)};
}

MorphismParts morphism_parts(const Morphism& f) {
    const auto alg = f.source().algebra();
    std::vector<MatQ> ker, img;
    for (int v = 0; v < alg->n(); ++v) {
        ker.push_back(reduce(f.at(v)).nullspace);
        img.push_back(f.at(v));
    }
    MorphismParts parts{sub_representation(f.source(), ker), sub_representation(f.target(), img),
                        quotient_representation(f.target(), img)};
    return parts;
}

DirectSum direct_sum(const AlgebraPtr& alg, std::span<const Representation> parts) {
    const Field& fld = alg->field();
    int n = alg->n();
    for (const auto& p : parts)
        if (p.algebra() != alg) throw MathError("mixed algebras");
    std::vector<int> dims(n, 0);
    std::vector<std::vector<int>> off(parts.size(), std::vector<int>(n));
    for (size_t k = 0; k < parts.size(); ++k)
        for (int v = 0; v < n; ++v) {
            off[k][v] = dims[v];
            dims[v] += parts[k].dim_at(v);
        }
    std::vector<MatQ> maps;
    for (int a = 0; a < static_cast<int>(alg->quiver().arrows.size()); ++a) {
        const auto& arr = alg->quiver().arrows[a];
        MatQ m(dims[arr.tgt], dims[arr.src], fld);
        for (size_t k = 0; k < parts.size(); ++k) m.set_block(off[k][arr.tgt], off[k][arr.src], parts[k].map(a));
        maps.push_back(std::move(m));
    }
    Representation sum(alg, dims, std::move(maps));
    DirectSum ds;
    ds.off = off;
    for (size_t k = 0; k < parts.size(); ++k) {
        std::vector<MatQ> in, pr;
        for (int v = 0; v < n; ++v) {
            MatQ iv(dims[v], parts[k].dim_at(v), fld);
            MatQ pv(parts[k].dim_at(v), dims[v], fld);
            for (int i = 0; i < parts[k].dim_at(v); ++i) {
                iv.at(off[k][v] + i, i) = Scalar::one(fld);
                pv.at(i, off[k][v] + i) = Scalar::one(fld);
            }
            in.push_back(std::move(iv));
            pr.push_back(std::move(pv));
        }
        ds.inj.emplace_back(parts[k], sum, std::move(in));
        ds.proj.emplace_back(sum, parts[k], std::move(pr));
    }
    ds.rep = std::move(sum);
    return ds;
}

SubObject trace_submodule(const Representation& x, const Representation& n) {
    check_same_algebra(x, n);
    const auto alg = x.algebra();
    auto homs = hom_basis(x, n);
    std::vector<MatQ> gen;
    for (int v = 0; v < alg->n(); ++v) {
        MatQ cols(n.dim_at(v), 0, alg->field());
        for (const auto& h : homs) cols = cols.hstack(h.at(v));
        gen.push_back(std::move(cols));
    }
    return sub_representation(n, gen);
}

void validate_ses(const ShortExactSequence& s) {
    if (!s.incl.commutes() || !s.proj.commutes()) throw MathError("ses: maps are not morphisms");
    if (!s.incl.is_injective()) throw MathError("ses: inclusion not injective");
    if (!s.proj.is_surjective()) throw MathError("ses: projection not surjective");
    if (!Morphism::compose(s.proj, s.incl).is_zero()) throw MathError("ses: composition nonzero");
    for (int v = 0; v < s.mid.algebra()->n(); ++v) {
        if (s.mid.dim_at(v) != s.sub.dim_at(v) + s.quot.dim_at(v)) throw MathError("ses: dimensions do not add");
        // im(incl) == ker(proj): containment plus dimension count
        MatQ kerp = reduce(s.proj.at(v)).nullspace;
        if (kerp.cols() != s.sub.dim_at(v)) throw MathError("ses: kernel dimension mismatch");
        if (!in_col_space(col_basis(kerp), s.incl.at(v))) throw MathError("ses: image vs kernel mismatch");
    }
}

ShortExactSequence canonical_sequence(const Representation& x, const Representation& n) {
    SubObject t = trace_submodule(x, n);
    QuotObject q = quotient_representation(n, t.basis);
    ShortExactSequence s{t.rep, n, q.rep, t.incl, q.proj};
    validate_ses(s);
    return s;
}

bool in_fac(const Representation& x, const Representation& n) {
    if (n.is_zero()) return true;
    SubObject t = trace_submodule(x, n);
    return t.rep.dims() == n.dims();
}

TopRadical top_and_radical(const Representation& x) {
    const auto alg = x.algebra();
    std::vector<MatQ> rad;
    for (int v = 0; v < alg->n(); ++v) {
        MatQ cols(x.dim_at(v), 0, alg->field());
        for (int a = 0; a < static_cast<int>(alg->quiver().arrows.size()); ++a)
            if (alg->quiver().arrows[a].tgt == v) cols = cols.hstack(x.map(a));
        rad.push_back(std::move(cols));
    }
    return TopRadical{sub_representation(x, rad), quotient_representation(x, rad)};
}

std::vector<MatQ> radical_power(const Representation& x, int k) {
    const auto alg = x.algebra();
    std::vector<MatQ> cur;
    for (int v = 0; v < alg->n(); ++v) cur.push_back(MatQ::identity(x.dim_at(v), alg->field()));
    for (int step = 0; step < k; ++step) {
        std::vector<MatQ> nxt;
        for (int v = 0; v < alg->n(); ++v) {
            MatQ cols(x.dim_at(v), 0, alg->field());
            for (int a = 0; a < static_cast<int>(alg->quiver().arrows.size()); ++a)
                if (alg->quiver().arrows[a].tgt == v) cols = cols.hstack(x.map(a) * cur[alg->quiver().arrows[a].src]);
            nxt.push_back(col_basis(cols));
        }
        cur = std::move(nxt);
    }
    return cur;
}

}  // namespace stratkit
