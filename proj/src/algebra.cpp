#include "stratkit/algebra.hpp"

#include "stratkit/rep.hpp"

#include <algorithm>
#include <sstream>

namespace stratkit {

namespace {

using PathRec = BoundQuiverAlgebra::PathRec;

std::string path_word(const Quiver& q, const std::vector<int>& arrows) {
    if (arrows.empty()) return "e";
    std::string w;
    for (int a : arrows) w = q.arrows[a].name + (w.empty() ? "" : "*" + w);
    return w;
}

std::vector<std::string> name_seq(const Quiver& q, const std::vector<int>& arrows) {
    std::vector<std::string> s;
    s.reserve(arrows.size());
    for (int a : arrows) s.push_back(q.arrows[a].name);
    return s;
}

}  // namespace

struct AlgebraBuilder {
    BoundQuiverAlgebra& A;

    void enumerate_paths(int dmax) {
        const Quiver& q = A.quiver_;
        A.dmax_ = dmax;
        std::vector<PathRec> cur;
        for (int v = 0; v < q.n(); ++v) {
            PathRec p;
            p.src = p.tgt = v;
            cur.push_back(p);
        }
        for (int len = 0; len <= dmax; ++len) {
            std::sort(cur.begin(), cur.end(), [&](const PathRec& a, const PathRec& b) {
                auto ka = name_seq(q, a.arrows), kb = name_seq(q, b.arrows);
                return ka != kb ? ka < kb : a.src < b.src;
            });
            std::vector<PathRec> nxt;
            for (auto& p : cur) {
                p.word = path_word(q, p.arrows);
                if (len < dmax)
                    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
                        if (q.arrows[a].src == p.tgt) {
                            PathRec e = p;
                            e.tgt = q.arrows[a].tgt;
                            e.len = len + 1;
                            e.arrows.push_back(a);
                            nxt.push_back(e);
                        }
                A.paths_.push_back(std::move(p));
            }
            cur = std::move(nxt);
        }
        // extension table
        std::map<std::vector<int>, int> index;
        for (int i = 0; i < static_cast<int>(A.paths_.size()); ++i) {
            std::vector<int> key = A.paths_[i].arrows;
            key.push_back(A.paths_[i].src);  // disambiguate trivial paths
            index[key] = i;
        }
        A.next_.assign(A.paths_.size(), std::vector<int>(q.arrows.size(), -1));
        for (int i = 0; i < static_cast<int>(A.paths_.size()); ++i) {
            const auto& p = A.paths_[i];
            if (p.len == 0) continue;
            std::vector<int> key(p.arrows.begin(), p.arrows.end() - 1);
            key.push_back(p.src);
            A.next_[index.at(key)][p.arrows.back()] = i;
        }
    }

    // sparse echelon over path coordinates, longest/lex-largest path first
    struct Echelon {
        const BoundQuiverAlgebra& A;
        std::map<int, int> lead_to_row;  // path id -> row index
        std::vector<std::map<int, Scalar>> rows;

        std::map<int, Scalar> reduce(std::map<int, Scalar> v) const {
            for (;;) {
                int lead = -1;
                for (const auto& [id, c] : v)
                    if (!c.is_zero() && (lead < 0 || A.path_order_rank(id) > A.path_order_rank(lead))) lead = id;
                if (lead < 0) return v;
                auto it = lead_to_row.find(lead);
                if (it == lead_to_row.end()) return v;
                Scalar c = v[lead];
                for (const auto& [id, rc] : rows[it->second]) {
                    auto& slot = v.try_emplace(id, Scalar::zero(c.field())).first->second;
                    slot -= c * rc;
                    if (slot.is_zero()) v.erase(id);
                }
            }
        }

        void insert(std::map<int, Scalar> v) {
            v = reduce(std::move(v));
            int lead = -1;
            for (const auto& [id, c] : v)
                if (!c.is_zero() && (lead < 0 || A.path_order_rank(id) > A.path_order_rank(lead))) lead = id;
            if (lead < 0) return;
            Scalar inv = v.at(lead).inv();
            for (auto& [id, c] : v) c *= inv;
            // back-substitute into existing rows
            for (auto& row : rows) {
                auto it = row.find(lead);
                if (it == row.end()) continue;
                Scalar f = it->second;
                for (const auto& [id, c] : v) {
                    auto& slot = row.try_emplace(id, Scalar::zero(f.field())).first->second;
                    slot -= f * c;
                    if (slot.is_zero()) row.erase(id);
                }
            }
            lead_to_row[lead] = static_cast<int>(rows.size());
            rows.push_back(std::move(v));
        }
    };

    // all products u * r * v with the (u, v) length bound; truncate_at < 0
    // keeps every monomial, otherwise drops monomials of length >= truncate_at
    void ideal_products(Echelon& ech, int uv_budget_from, int truncate_at) {
        const Field& f = A.field_;
        for (const auto& r : A.relations_) {
            int budget = uv_budget_from - (truncate_at < 0 ? r.max_len() : r.min_len());
            if (budget < 0) continue;
            for (const auto& vp : A.paths_) {
                if (vp.tgt != r.src || vp.len > budget) continue;
                for (const auto& up : A.paths_) {
                    if (up.src != r.tgt || vp.len + up.len > budget) continue;
                    std::map<int, Scalar> row;
                    for (const auto& term : r.terms) {
                        if (truncate_at >= 0 &&
                            vp.len + static_cast<int>(term.arrows.size()) + up.len >= truncate_at)
                            continue;
                        int vid = concat_id(vp, term.arrows, up.arrows);
                        if (vid < 0) continue;  // beyond universe; cannot happen within budget
                        auto& slot = row.try_emplace(vid, Scalar::zero(f)).first->second;
                        slot += term.coeff;
                        if (slot.is_zero()) row.erase(vid);
                    }
                    if (!row.empty()) ech.insert(std::move(row));
                }
            }
        }
    }

    int concat_id(const PathRec& first, const std::vector<int>& mid, const std::vector<int>& last) const {
        // locate first's id
        int id = path_id(first);
        for (int a : mid) {
            id = A.next_[id][a];
            if (id < 0) return -1;
        }
        for (int a : last) {
            id = A.next_[id][a];
            if (id < 0) return -1;
        }
        return id;
    }

    int path_id(const PathRec& p) const {
        // paths are stored uniquely; find by (src, arrows) via walk from trivial path
        int id = trivial_id(p.src);
        for (int a : p.arrows) id = A.next_[id][a];
        return id;
    }

    int trivial_id(int v) const {
        for (int i = 0; i < static_cast<int>(A.paths_.size()); ++i) {
            if (A.paths_[i].len > 0) break;
            if (A.paths_[i].src == v) return i;
        }
        throw MathError("trivial path missing");
    }

    void run(int bound) {
        const Quiver& q = A.quiver_;
        int spread = 0;
        for (const auto& r : A.relations_) spread = std::max(spread, r.max_len() - r.min_len());
        enumerate_paths(bound + spread);

        // span of truncated products: defines the quotient on paths < bound
        Echelon reduce_span{A, {}, {}};
        ideal_products(reduce_span, bound - 1, bound);

        // untruncated span inside the full universe: admissibility certificates
        Echelon ideal_span{A, {}, {}};
        ideal_products(ideal_span, A.dmax_, -1);

        // R^len inside the relation ideal, per length
        std::vector<bool> len_ok(bound + 1, false);
        for (int len = std::min(2, bound); len <= bound; ++len) {
            bool ok = true;
            std::string bad;
            for (int i = 0; i < static_cast<int>(A.paths_.size()) && ok; ++i) {
                if (A.paths_[i].len != len) continue;
                std::map<int, Scalar> v{{i, Scalar::one(A.field_)}};
                if (!ideal_span.reduce(std::move(v)).empty()) {
                    ok = false;
                    bad = A.paths_[i].word;
                }
            }
            len_ok[len] = ok;
            if (len == bound && !ok)
                throw InputError("not admissible at bound L=" + std::to_string(bound) +
                                 ": path " + bad + " does not reduce into the relation ideal");
        }
        A.minimal_bound_ = bound;
        for (int len = bound; len >= 2 && len_ok[len]; --len) A.minimal_bound_ = len;

        // store reduction rows and basis
        for (const auto& row : reduce_span.rows) {
            BoundQuiverAlgebra::EchelonRow er;
            er.lead = -1;
            for (const auto& [id, c] : row) {
                er.entries.emplace_back(id, c);
                if (er.lead < 0 || A.path_order_rank(id) > A.path_order_rank(er.lead)) er.lead = id;
            }
            A.reduce_lead_[er.lead] = static_cast<int>(A.reduce_rows_.size());
            A.reduce_rows_.push_back(std::move(er));
        }
        A.basis_pos_.assign(A.paths_.size(), -1);
        for (int i = 0; i < static_cast<int>(A.paths_.size()); ++i) {
            if (A.paths_[i].len >= bound) continue;
            if (A.reduce_lead_.count(i)) continue;
            A.basis_pos_[i] = static_cast<int>(A.basis_.size());
            A.basis_.push_back(i);
        }
        A.basis_by_pair_.assign(q.n(), std::vector<std::vector<int>>(q.n()));
        for (int id : A.basis_) A.basis_by_pair_[A.paths_[id].src][A.paths_[id].tgt].push_back(id);
        A.arrow_basis_.assign(q.arrows.size(), -1);
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
            int id = A.next_[trivial_id(q.arrows[a].src)][a];
            A.arrow_basis_[a] = A.basis_pos_[id];
            if (A.arrow_basis_[a] < 0)
                throw InputError("arrow '" + q.arrows[a].name + "' lies in the ideal; not admissible");
        }

        // multiplication table on basis classes
        int d = A.dim();
        A.mult_.assign(d, std::vector<BoundQuiverAlgebra::SparseVec>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const PathRec& x = A.paths_[A.basis_[i]];
                const PathRec& y = A.paths_[A.basis_[j]];
                if (y.tgt != x.src) continue;
                if (x.len + y.len >= bound) continue;  // lands in R^bound, zero
                int id = A.basis_[j];
                bool alive = true;
                for (int a : x.arrows) {
                    id = A.next_[id][a];
                    if (id < 0) {
                        alive = false;
                        break;
                    }
                }
                if (!alive) continue;
                auto red = A.reduce_vec({{id, Scalar::one(A.field_)}});
                A.mult_[i][j] = A.to_basis_coords(red);
            }
    }
};

int BoundQuiverAlgebra::path_order_rank(int id) const { return id; }  // ids are (len, lex)-sorted

int BoundQuiverAlgebra::concat(int first_path, const std::vector<int>& then_arrows) const {
    int id = first_path;
    for (int a : then_arrows) {
        id = next_[id][a];
        if (id < 0) return -1;
    }
    return id;
}

std::map<int, Scalar> BoundQuiverAlgebra::reduce_vec(std::map<int, Scalar> vec) const {
    for (;;) {
        int lead = -1;
        for (const auto& [id, c] : vec)
            if (!c.is_zero() && id > lead) lead = id;
        if (lead < 0) return vec;
        auto it = reduce_lead_.find(lead);
        if (it == reduce_lead_.end()) {
            // leading term irreducible: set it aside and reduce the tail
            std::map<int, Scalar> rest = vec;
            rest.erase(lead);
            auto red = reduce_vec(std::move(rest));
            red[lead] = vec.at(lead);
            return red;
        }
        Scalar c = vec.at(lead);
        for (const auto& [id, rc] : reduce_rows_[it->second].entries) {
            auto& slot = vec.try_emplace(id, Scalar::zero(field_)).first->second;
            slot -= c * rc;
            if (slot.is_zero()) vec.erase(id);
        }
    }
}

BoundQuiverAlgebra::SparseVec BoundQuiverAlgebra::to_basis_coords(const std::map<int, Scalar>& reduced) const {
    SparseVec out;
    for (const auto& [id, c] : reduced) {
        if (c.is_zero()) continue;
        int b = basis_pos_[id];
        if (b < 0) throw MathError("reduced vector contains a non-basis path");
        out.emplace_back(b, c);
    }
    return out;
}

const std::vector<int>& BoundQuiverAlgebra::basis_between(int src, int tgt) const {
    return basis_by_pair_[src][tgt];
}

const BoundQuiverAlgebra::SparseVec& BoundQuiverAlgebra::mult(int bx, int by) const {
    return mult_[bx][by];
}

std::shared_ptr<const BoundQuiverAlgebra> BoundQuiverAlgebra::build(Quiver q, Field f,
                                                                    std::vector<Relation> relations,
                                                                    int bound) {
    if (bound < 1) throw InputError("bound must be >= 1");
    q.validate();
    auto alg = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra());
    alg->quiver_ = std::move(q);
    alg->field_ = f;
    alg->bound_ = bound;
    alg->relations_ = std::move(relations);
    AlgebraBuilder{*alg}.run(bound);
    return alg;
}

Representation BoundQuiverAlgebra::projective(int i) const {
    auto self = shared_from_this();
    std::vector<int> dims(n());
    // offset of each basis path within its vertex block
    std::vector<int> offset(paths_.size(), -1);
    for (int v = 0; v < n(); ++v)
        for (int id : basis_by_pair_[i][v]) offset[id] = dims[v]++;
    // arrow action: left multiplication then reduction
    std::vector<MatQ> maps;
    for (int a = 0; a < static_cast<int>(quiver_.arrows.size()); ++a) {
        const auto& arr = quiver_.arrows[a];
        MatQ m(dims[arr.tgt], dims[arr.src], field_);
        for (int id : basis_by_pair_[i][arr.src]) {
            const SparseVec& prod = mult(arrow_basis_[a], basis_pos_[id]);
            for (const auto& [bidx, c] : prod) m.at(offset[basis_[bidx]], offset[id]) = c;
        }
        maps.push_back(std::move(m));
    }
    return Representation(self, dims, std::move(maps));
}

Representation BoundQuiverAlgebra::injective(int i) const {
    auto self = shared_from_this();
    std::vector<int> dims(n());
    std::vector<int> offset(paths_.size(), -1);
    for (int v = 0; v < n(); ++v)
        for (int id : basis_by_pair_[v][i]) offset[id] = dims[v]++;
    std::vector<MatQ> maps;
    for (int a = 0; a < static_cast<int>(quiver_.arrows.size()); ++a) {
        const auto& arr = quiver_.arrows[a];
        // right multiplication rho_a : e_i A e_tgt -> e_i A e_src, then transpose
        MatQ rho(dims[arr.src], dims[arr.tgt], field_);
        for (int id : basis_by_pair_[arr.tgt][i]) {
            const SparseVec& prod = mult(basis_pos_[id], arrow_basis_[a]);
            for (const auto& [bidx, c] : prod) rho.at(offset[basis_[bidx]], offset[id]) = c;
        }
        maps.push_back(rho.transpose());
    }
    return Representation(self, dims, std::move(maps));
}

Representation BoundQuiverAlgebra::simple(int i) const {
    auto self = shared_from_this();
    std::vector<int> dims(n(), 0);
    dims[i] = 1;
    std::vector<MatQ> maps;
    for (const auto& arr : quiver_.arrows) maps.emplace_back(dims[arr.tgt], dims[arr.src], field_);
    return Representation(self, dims, std::move(maps));
}

std::string BoundQuiverAlgebra::describe_basis() const {
    std::ostringstream os;
    for (int id : basis_) os << (id == basis_.front() ? "" : ", ") << paths_[id].word;
    return os.str();
}

}  // namespace stratkit
