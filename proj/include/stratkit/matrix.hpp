#pragma once

#include "stratkit/numbers.hpp"

#include <optional>
#include <vector>

namespace stratkit {

// Dense matrix over Q or F_p, exact arithmetic throughout.
class MatQ {
  public:
    MatQ() : rows_(0), cols_(0), field_{} {}
    MatQ(int rows, int cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

    static MatQ identity(int n, const Field& f);
    static MatQ zeros(int rows, int cols, const Field& f) { return MatQ(rows, cols, f); }
    static MatQ from_rows(const std::vector<std::vector<Scalar>>& rows, int cols, const Field& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const MatQ& o) const;

    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    MatQ operator*(const MatQ& o) const;
    MatQ scaled(const Scalar& c) const;
    MatQ transpose() const;
    MatQ col(int j) const;
    MatQ cols_at(const std::vector<int>& idx) const;
    MatQ hstack(const MatQ& o) const;   // side by side
    MatQ vstack(const MatQ& o) const;   // on top of each other
    void set_block(int i0, int j0, const MatQ& b);
    MatQ block(int i0, int j0, int r, int c) const;

  private:
    int rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

struct ReduceResult {
    MatQ rref;
    int rank = 0;
    std::vector<int> pivots;  // pivot column indices, increasing
    MatQ nullspace;           // columns form a basis of ker(A)
    MatQ image;               // original pivot columns; basis of col(A)
};

// Unique reduced row echelon form plus kernel/image bases.
ReduceResult reduce(const MatQ& A);

int rank_of(const MatQ& A);

struct SolveResult {
    bool consistent = false;
    MatQ particular;  // one solution per column of b
    MatQ nullspace;   // homogeneous solutions
};

// Solve A x = b (b may have several columns).
SolveResult solve(const MatQ& A, const MatQ& b);

// Canonical basis of the column space: reduced column echelon form.
// Unique per subspace, so equal subspaces compare equal.
MatQ col_basis(const MatQ& A);

// Pivot rows of a reduced column-echelon basis.
std::vector<int> col_basis_pivot_rows(const MatQ& B);

// true if every column of v lies in span(columns of B)
bool in_col_space(const MatQ& B, const MatQ& v);

// Projection k^d -> k^(d-r) with kernel exactly span(B); B must be a reduced
// column-echelon basis.  Quotient coordinates are the non-pivot rows.
MatQ quotient_projection(const MatQ& B, int dim);
// Section of the projection (embeds quotient coordinates at non-pivot rows).
MatQ quotient_section(const MatQ& B, int dim);

// Sum of column spaces, canonical basis.
MatQ span_union(const std::vector<MatQ>& parts, int dim, const Field& f);

// Determinant (square matrices; exact).
Scalar det(const MatQ& A);

}  // namespace stratkit
