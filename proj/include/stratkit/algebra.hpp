#pragma once

#include "stratkit/matrix.hpp"
#include "stratkit/quiver.hpp"

#include <map>
#include <memory>
#include <vector>

namespace stratkit {

class Representation;

// A = kQ/I presented by a quiver, an admissible set of relations and a
// nilpotency bound L with R^L contained in I.  The basis consists of path
// classes: all paths of length < L reduced modulo the span of the relation
// products, paths ordered by (length, arrow-name sequence).
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
  public:
    struct PathRec {
        int src = -1, tgt = -1, len = 0;
        std::vector<int> arrows;  // application order
        std::string word;         // display, last-applied first, "*"-joined
    };

    // Builds the algebra; verifies R^bound lies in the relation ideal and
    // throws InputError ("not admissible at bound L") otherwise.
    static std::shared_ptr<const BoundQuiverAlgebra> build(Quiver q, Field f,
                                                           std::vector<Relation> relations, int bound);

    const Quiver& quiver() const { return quiver_; }
    const Field& field() const { return field_; }
    int n() const { return quiver_.n(); }
    int bound() const { return bound_; }
    // smallest L' <= bound with R^L' verified inside the relation ideal
    int minimal_verified_bound() const { return minimal_bound_; }
    const std::vector<Relation>& relations() const { return relations_; }

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<PathRec>& paths() const { return paths_; }
    const std::vector<int>& basis() const { return basis_; }  // path ids, ascending order
    // basis path ids spanning e_tgt A e_src (paths src -> tgt)
    const std::vector<int>& basis_between(int src, int tgt) const;
    int basis_index(int path_id) const { return basis_pos_[path_id]; }  // -1 if not a basis path
    int arrow_basis_index(int arrow) const { return arrow_basis_[arrow]; }

    using SparseVec = std::vector<std::pair<int, Scalar>>;  // (basis index, coeff)

    // product of basis classes x*y with y applied first; empty unless
    // tgt(y) == src(x)
    const SparseVec& mult(int bx, int by) const;

    Representation projective(int i) const;
    Representation injective(int i) const;
    Representation simple(int i) const;

    std::string describe_basis() const;

  private:
    BoundQuiverAlgebra() = default;

    Quiver quiver_;
    Field field_;
    int bound_ = 0;
    int minimal_bound_ = 0;
    std::vector<Relation> relations_;

    std::vector<PathRec> paths_;                  // all paths of length <= dmax_
    int dmax_ = 0;
    std::vector<std::vector<int>> next_;          // next_[path][arrow] -> extended path id or -1
    std::vector<int> basis_;                      // basis path ids (len < bound), ascending
    std::vector<int> basis_pos_;                  // path id -> basis index or -1
    std::vector<int> arrow_basis_;                // arrow -> basis index
    std::vector<std::vector<std::vector<int>>> basis_by_pair_;  // [src][tgt]
    std::vector<std::vector<SparseVec>> mult_;    // basis x basis

    // reduction data: sparse echelon rows keyed by leading path id
    struct EchelonRow {
        int lead;
        std::vector<std::pair<int, Scalar>> entries;  // includes lead with coeff 1
    };
    std::vector<EchelonRow> reduce_rows_;         // quotient span over paths < bound
    std::map<int, int> reduce_lead_;              // lead path id -> row

    int path_order_rank(int id) const;            // higher = reduced first
    int concat(int first_path, const std::vector<int>& then_arrows) const;  // -1 if too long
    std::map<int, Scalar> reduce_vec(std::map<int, Scalar> vec) const;      // over paths < bound
    SparseVec to_basis_coords(const std::map<int, Scalar>& reduced) const;

    friend struct AlgebraBuilder;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

}  // namespace stratkit
