#include "stratkit/generic.hpp"

#include <algorithm>
#include <random>

namespace stratkit {

namespace {

Morphism combine(const std::vector<Morphism>& basis, const std::vector<Scalar>& c) {
    Morphism m = basis[0].scaled(c[0]);
    for (size_t k = 1; k < basis.size(); ++k) m = m + basis[k].scaled(c[k]);
    return m;
}

bool vertexwise_invertible(const Morphism& m) {
    for (int v = 0; v < m.source().algebra()->n(); ++v)
        if (rank_of(m.at(v)) != m.source().dim_at(v)) return false;
    return true;
}

bool vertexwise_surjective(const Morphism& m) {
    for (int v = 0; v < m.source().algebra()->n(); ++v)
        if (rank_of(m.at(v)) != m.target().dim_at(v)) return false;
    return true;
}

// joint column span of all basis maps covers the target at every vertex;
// if not, no combination can be surjective (or invertible)
bool joint_span_full(const std::vector<Morphism>& basis, const Representation& y) {
    for (int v = 0; v < y.algebra()->n(); ++v) {
        MatQ all(y.dim_at(v), 0, y.algebra()->field());
        for (const auto& h : basis) all = all.hstack(h.at(v));
        if (rank_of(all) != y.dim_at(v)) return false;
    }
    return true;
}

bool joint_rows_full(const std::vector<Morphism>& basis, const Representation& x) {
    for (int v = 0; v < x.algebra()->n(); ++v) {
        MatQ all(0, x.dim_at(v), x.algebra()->field());
        for (const auto& h : basis) all = all.vstack(h.at(v));
        if (rank_of(all) != x.dim_at(v)) return false;
    }
    return true;
}

// enumerate c in {0..range}^m \ {0} in mixed radix; calls fn until it returns
// true or the budget runs out.  Returns Yes if fn succeeded, No if the grid
// was exhausted, Unknown if the budget stopped the enumeration.
template <typename Fn>
Tri grid_search(int m, long long range, long long budget, Fn&& fn) {
    std::vector<long long> c(m, 0);
    long long used = 0;
    for (;;) {
        int k = 0;
        while (k < m && c[k] == range) c[k++] = 0;
        if (k == m) return Tri::No;
        ++c[k];
        if (++used > budget) return Tri::Unknown;
        if (fn(c)) return Tri::Yes;
    }
}

std::vector<Scalar> to_scalars(const std::vector<long long>& c, const Field& f) {
    std::vector<Scalar> s;
    s.reserve(c.size());
    for (long long x : c) s.push_back(Scalar::of_int(x, f));
    return s;
}

}  // namespace

IsoResult is_isomorphic(const Representation& x, const Representation& y, const SearchOpts& opts) {
    check_same_algebra(x, y);
    if (x.dims() != y.dims()) return {Tri::No, false};
    if (x.total_dim() == 0) return {Tri::Yes, false};

    auto basis = hom_basis(x, y);
    int m = static_cast<int>(basis.size());
    if (m == 0) return {Tri::No, false};
    if (!joint_span_full(basis, y) || !joint_rows_full(basis, x)) return {Tri::No, false};

    const Field& f = x.algebra()->field();
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long long> dist(-9, 9);
    for (int t = 0; t < opts.random_trials; ++t) {
        std::vector<Scalar> c;
        for (int k = 0; k < m; ++k) c.push_back(Scalar::of_int(dist(rng), f));
        if (vertexwise_invertible(combine(basis, c))) return {Tri::Yes, false};
    }

    // deterministic completion: the product of the vertex determinants is a
    // polynomial of degree <= total dim in the coefficients, so a full grid
    // with (deg+1) values per variable decides existence
    long long deg = x.total_dim();
    Tri g = grid_search(m, deg, opts.grid_budget, [&](const std::vector<long long>& c) {
        return vertexwise_invertible(combine(basis, to_scalars(c, f)));
    });
    if (g == Tri::Yes) return {Tri::Yes, false};
    if (g == Tri::No) return {Tri::No, false};
    return {Tri::Unknown, false};
}

EpiResult find_epi(const Representation& x, const Representation& y, const SearchOpts& opts) {
    check_same_algebra(x, y);
    if (y.total_dim() == 0) {
        return {Tri::Yes, Morphism::zero(x, y)};
    }
    auto basis = hom_basis(x, y);
    int m = static_cast<int>(basis.size());
    if (m == 0) return {Tri::No, std::nullopt};
    if (!joint_span_full(basis, y)) return {Tri::No, std::nullopt};

    const Field& f = x.algebra()->field();
    std::mt19937_64 rng(opts.seed ^ 0xd1b54a32d192ed03ULL);
    std::uniform_int_distribution<long long> dist(-9, 9);
    for (int t = 0; t < opts.random_trials; ++t) {
        std::vector<Scalar> c;
        for (int k = 0; k < m; ++k) c.push_back(Scalar::of_int(dist(rng), f));
        Morphism cand = combine(basis, c);
        if (vertexwise_surjective(cand)) return {Tri::Yes, cand};
    }
    // sum-of-squares-of-minors polynomial has per-variable degree <= 2*dim(Y)
    long long deg = 2LL * y.total_dim();
    std::optional<Morphism> found;
    Tri g = grid_search(m, deg, opts.grid_budget, [&](const std::vector<long long>& c) {
        Morphism cand = combine(basis, to_scalars(c, f));
        if (!vertexwise_surjective(cand)) return false;
        found = cand;
        return true;
    });
    if (g == Tri::Yes) return {Tri::Yes, found};
    if (g == Tri::No) return {Tri::No, std::nullopt};
    return {Tri::Unknown, std::nullopt};
}

// ---------------------------------------------------------------------------
// indecomposability: generic endomorphisms, characteristic polynomial
// splitting, then End/rad structure

namespace {

using Poly = std::vector<Scalar>;  // coefficients, low degree first

int pdeg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

Poly ptrim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly pmul(const Poly& a, const Poly& b, const Field& f) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Scalar::zero(f));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return ptrim(r);
}

// division with remainder; b monic-normalized inside
std::pair<Poly, Poly> pdivmod(Poly a, Poly b, const Field& f) {
    a = ptrim(std::move(a));
    b = ptrim(std::move(b));
    if (b.empty()) throw MathError("poly division by zero");
    Poly q(a.size(), Scalar::zero(f));
    Scalar lead = b.back();
    while (static_cast<int>(a.size()) >= static_cast<int>(b.size())) {
        Scalar c = a.back() / lead;
        int shift = static_cast<int>(a.size() - b.size());
        q[shift] += c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = ptrim(std::move(a));
        if (a.empty()) break;
    }
    return {ptrim(std::move(q)), std::move(a)};
}

Poly pmonic(Poly p) {
    p = ptrim(std::move(p));
    if (p.empty()) return p;
    Scalar inv = p.back().inv();
    for (auto& c : p) c *= inv;
    return p;
}

Poly pgcd(Poly a, Poly b, const Field& f) {
    a = ptrim(std::move(a));
    b = ptrim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = pdivmod(a, b, f);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(std::move(a));
}

Poly pderiv(const Poly& p, const Field& f) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar::of_int(static_cast<long long>(i), f));
    return ptrim(std::move(d));
}

// total-space matrix of an endomorphism (block diagonal over vertices)
MatQ total_matrix(const Morphism& e) {
    int d = e.source().total_dim();
    const Field& f = e.source().algebra()->field();
    MatQ m(d, d, f);
    int off = 0;
    for (int v = 0; v < e.source().algebra()->n(); ++v) {
        m.set_block(off, off, e.at(v));
        off += e.source().dim_at(v);
    }
    return m;
}

// characteristic polynomial via Faddeev-LeVerrier (char 0 only)
Poly char_poly(const MatQ& a) {
    const Field& f = a.field();
    int n = a.rows();
    Poly c(n + 1, Scalar::zero(f));
    c[n] = Scalar::one(f);
    MatQ m = MatQ::zeros(n, n, f);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        for (int i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
        Scalar tr = Scalar::zero(f);
        MatQ am = a * m;
        for (int i = 0; i < n; ++i) tr += am.at(i, i);
        c[n - k] = -(tr / Scalar::of_int(k, f));
        if (k == n) m = std::move(am);
    }
    return c;
}

// Yun's square-free decomposition: f = prod u_e^e, the u_e pairwise coprime
std::vector<std::pair<Poly, int>> squarefree_clusters(const Poly& p, const Field& f) {
    std::vector<std::pair<Poly, int>> out;
    Poly a = pmonic(p);
    if (pdeg(a) <= 0) return out;
    Poly da = pderiv(a, f);
    Poly g = pgcd(a, da, f);
    Poly w = pdivmod(a, g, f).first;
    Poly y = pdivmod(da, g, f).first;
    int e = 1;
    while (pdeg(w) > 0) {
        // z = y - w'
        Poly dw = pderiv(w, f);
        Poly z = y;
        z.resize(std::max(z.size(), dw.size()), Scalar::zero(f));
        for (size_t i = 0; i < dw.size(); ++i) z[i] -= dw[i];
        z = ptrim(std::move(z));
        if (z.empty()) {
            out.emplace_back(pmonic(w), e);
            break;
        }
        Poly u = pgcd(w, z, f);
        if (pdeg(u) > 0) out.emplace_back(u, e);
        w = pdivmod(w, u, f).first;
        y = pdivmod(z, u, f).first;
        ++e;
    }
    return out;
}

MatQ eval_poly(const Poly& p, const MatQ& a) {
    const Field& f = a.field();
    int n = a.rows();
    MatQ r = MatQ::zeros(n, n, f);
    for (int i = pdeg(p); i >= 0; --i) {
        r = a * r;
        for (int d = 0; d < n; ++d) r.at(d, d) += p[i];
    }
    return r;
}

Scalar peval(const Poly& p, const Scalar& v, const Field& f) {
    Scalar acc = Scalar::zero(f);
    for (int i = pdeg(p); i >= 0; --i) acc = acc * v + p[i];
    return acc;
}

// peel small rational roots off a squarefree factor so that clusters like
// x(x-1) separate into coprime linear pieces
std::vector<Poly> refine_squarefree(Poly u, const Field& f) {
    std::vector<Poly> parts;
    for (long long num = -12; num <= 12; ++num)
        for (long long den = 1; den <= 3; ++den) {
            if (pdeg(u) < 1) break;
            Scalar r = Scalar::of_int(num, f) / Scalar::of_int(den, f);
            if (!peval(u, r, f).is_zero()) continue;
            Poly lin{-r, Scalar::one(f)};
            parts.push_back(lin);
            u = pdivmod(u, lin, f).first;
        }
    if (pdeg(u) > 0) parts.push_back(pmonic(std::move(u)));
    return parts;
}

// split X along the coprime clusters of the characteristic polynomial of phi;
// empty result = no split from this endomorphism
std::vector<SubObject> try_split(const Representation& x, const Morphism& phi) {
    const Field& f = x.algebra()->field();
    if (!f.is_rational()) return {};  // char-poly route is kept to char 0
    MatQ total = total_matrix(phi);
    Poly chi = char_poly(total);
    auto raw = squarefree_clusters(chi, f);
    std::vector<std::pair<Poly, int>> clusters;
    for (const auto& [u, e] : raw)
        for (const auto& piece : refine_squarefree(u, f)) clusters.emplace_back(piece, e);
    if (clusters.size() < 2) return {};

    std::vector<SubObject> pieces;
    int dim_sum = 0;
    for (const auto& [u, e] : clusters) {
        // power u^e, evaluated on each vertex block
        Poly ue = u;
        for (int k = 1; k < e; ++k) ue = pmul(ue, u, f);
        std::vector<MatQ> ker;
        for (int v = 0; v < x.algebra()->n(); ++v) ker.push_back(reduce(eval_poly(ue, phi.at(v))).nullspace);
        SubObject s = sub_representation(x, ker);
        dim_sum += s.rep.total_dim();
        pieces.push_back(std::move(s));
    }
    if (dim_sum != x.total_dim()) throw MathError("generalized eigenspace split inconsistent");
    std::erase_if(pieces, [](const SubObject& s) { return s.rep.total_dim() == 0; });
    if (pieces.size() < 2) return {};
    return pieces;
}

// coordinates of a morphism in a given hom basis
std::vector<Scalar> coords_in(const std::vector<Morphism>& basis, const Morphism& m) {
    const Field& f = m.source().algebra()->field();
    auto flat = m.flatten();
    MatQ B(static_cast<int>(flat.size()), static_cast<int>(basis.size()), f);
    for (size_t k = 0; k < basis.size(); ++k) {
        auto bf = basis[k].flatten();
        for (size_t i = 0; i < bf.size(); ++i) B.at(static_cast<int>(i), static_cast<int>(k)) = bf[i];
    }
    MatQ rhs(static_cast<int>(flat.size()), 1, f);
    for (size_t i = 0; i < flat.size(); ++i) rhs.at(static_cast<int>(i), 0) = flat[i];
    auto sol = solve(B, rhs);
    if (!sol.consistent) throw MathError("morphism outside hom space");
    std::vector<Scalar> c;
    for (int k = 0; k < B.cols(); ++k) c.push_back(sol.particular.at(k, 0));
    return c;
}

Scalar op_trace(const Morphism& m) {
    Scalar t = Scalar::zero(m.source().algebra()->field());
    for (int v = 0; v < m.source().algebra()->n(); ++v)
        for (int i = 0; i < m.at(v).rows() && i < m.at(v).cols(); ++i) t += m.at(v).at(i, i);
    return t;
}

// integer square test for a rational
bool is_square(const Rat& r) {
    if (r < 0) return false;
    Int num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    Int sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
    return sn * sn == num && sd * sd == den;
}

}  // namespace

IndecResult is_indecomposable(const Representation& x, const SearchOpts& opts) {
    if (x.total_dim() == 0) throw MathError("is_indecomposable on the zero module");
    if (x.total_dim() == 1) return {Tri::Yes, false, {}};

    auto endos = hom_basis(x, x);
    int m = static_cast<int>(endos.size());
    if (m == 1) return {Tri::Yes, false, {}};

    const Field& f = x.algebra()->field();
    auto attempt = [&](const Morphism& phi) -> std::vector<SubObject> { return try_split(x, phi); };

    if (f.is_rational()) {
        // sparse candidates first: single basis elements, then pair sums
        for (int k = 0; k < m; ++k) {
            auto pieces = attempt(endos[k]);
            if (!pieces.empty()) return {Tri::No, false, std::move(pieces)};
        }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                auto pieces = attempt(endos[i] + endos[j]);
                if (!pieces.empty()) return {Tri::No, false, std::move(pieces)};
            }
        std::mt19937_64 rng(opts.seed ^ 0xa0761d6478bd642fULL);
        std::uniform_int_distribution<long long> dist(-9, 9);
        for (int t = 0; t < opts.random_trials; ++t) {
            std::vector<Scalar> c;
            for (int k = 0; k < m; ++k) c.push_back(Scalar::of_int(dist(rng), f));
            auto pieces = attempt(combine(endos, c));
            if (!pieces.empty()) return {Tri::No, false, std::move(pieces)};
        }
    }

    // structure of End(X): radical via the trace form (char 0), then the
    // semisimple quotient
    if (!f.is_rational()) return {Tri::Unknown, false, {}};
    MatQ gram(m, m, f);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) gram.at(i, j) = op_trace(Morphism::compose(endos[i], endos[j]));
    int rad_dim = reduce(gram).nullspace.cols();
    int ss_dim = m - rad_dim;
    if (ss_dim == 1) return {Tri::Yes, false, {}};

    if (ss_dim == 2) {
        // find b with {1, b} a basis of End/rad: b = basis element independent
        // of rad + span(id) in the trace form sense
        MatQ radbasis = reduce(gram).nullspace;  // coords of radical elements
        Morphism id = Morphism::identity(x);
        auto id_coords = coords_in(endos, id);
        MatQ span(m, radbasis.cols() + 1, f);
        span.set_block(0, 0, radbasis);
        for (int i = 0; i < m; ++i) span.at(i, radbasis.cols()) = id_coords[i];
        int b_idx = -1;
        for (int k = 0; k < m; ++k) {
            MatQ cand(m, 1, f);
            cand.at(k, 0) = Scalar::one(f);
            if (!in_col_space(col_basis(span), cand)) {
                b_idx = k;
                break;
            }
        }
        if (b_idx >= 0) {
            // minimal polynomial of b modulo rad is quadratic x^2 - s x - t;
            // solve b^2 = s b + t id + (radical part)
            Morphism b = endos[b_idx];
            Morphism b2 = Morphism::compose(b, b);
            auto b2c = coords_in(endos, b2);
            auto bc = coords_in(endos, b);
            MatQ sys(m, 2 + radbasis.cols(), f);
            for (int i = 0; i < m; ++i) {
                sys.at(i, 0) = bc[i];
                sys.at(i, 1) = id_coords[i];
            }
            sys.set_block(0, 2, radbasis);
            MatQ rhs(m, 1, f);
            for (int i = 0; i < m; ++i) rhs.at(i, 0) = b2c[i];
            auto sol = solve(sys, rhs);
            if (sol.consistent) {
                Scalar s = sol.particular.at(0, 0), t = sol.particular.at(1, 0);
                Rat disc = (s * s + Scalar::of_int(4, f) * t).rat();
                if (!is_square(disc)) return {Tri::Yes, true, {}};  // End/rad a quadratic field
                // rational roots: lift an idempotent through the radical
                Rat sq = disc;
                Int num = boost::multiprecision::sqrt(boost::multiprecision::numerator(sq));
                Int den = boost::multiprecision::sqrt(boost::multiprecision::denominator(sq));
                Scalar root = Scalar::of_rat(make_rat(num, den), f);
                Scalar r1 = (s + root) / Scalar::of_int(2, f);
                Scalar r2 = (s - root) / Scalar::of_int(2, f);
                if (r1 == r2) throw MathError("semisimple quotient with repeated root");
                Morphism e = (b - id.scaled(r2)).scaled((r1 - r2).inv());
                for (int it = 0; it < 4 * x.total_dim(); ++it) {
                    Morphism e2 = Morphism::compose(e, e);
                    if ((e2 - e).is_zero()) break;
                    // Newton step e <- 3e^2 - 2e^3 doubles radical depth
                    Morphism e3 = Morphism::compose(e2, e);
                    e = e2.scaled(Scalar::of_int(3, f)) - e3.scaled(Scalar::of_int(2, f));
                }
                if (!(Morphism::compose(e, e) - e).is_zero()) throw MathError("idempotent lifting failed");
                if (e.is_zero() || (e - Morphism::identity(x)).is_zero())
                    return {Tri::Yes, false, {}};  // only trivial idempotents survived
                std::vector<MatQ> im, ker;
                for (int v = 0; v < x.algebra()->n(); ++v) {
                    im.push_back(e.at(v));
                    ker.push_back(reduce(e.at(v)).nullspace);
                }
                std::vector<SubObject> pieces;
                pieces.push_back(sub_representation(x, im));
                pieces.push_back(sub_representation(x, ker));
                if (pieces[0].rep.total_dim() + pieces[1].rep.total_dim() != x.total_dim())
                    throw MathError("idempotent split inconsistent");
                return {Tri::No, false, std::move(pieces)};
            }
        }
    }
    return {Tri::Unknown, true, {}};
}

DecomposeResult decompose(const Representation& x, const SearchOpts& opts) {
    DecomposeResult out;
    if (x.total_dim() == 0) return out;
    IndecResult r = is_indecomposable(x, opts);
    if (r.verdict == Tri::Yes) {
        out.field_caveat = r.field_caveat;
        out.summands.push_back(x);
        return out;
    }
    if (r.verdict == Tri::Unknown) {
        out.complete = Tri::Unknown;
        out.field_caveat = r.field_caveat;
        out.summands.push_back(x);
        return out;
    }
    for (const auto& piece : r.pieces) {
        DecomposeResult sub = decompose(piece.rep, opts);
        if (sub.complete == Tri::Unknown) out.complete = Tri::Unknown;
        out.field_caveat = out.field_caveat || sub.field_caveat;
        for (auto& s : sub.summands) out.summands.push_back(std::move(s));
    }
    std::sort(out.summands.begin(), out.summands.end(), [](const Representation& a, const Representation& b) {
        if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
        return a.dims() < b.dims();
    });
    return out;
}

}  // namespace stratkit
