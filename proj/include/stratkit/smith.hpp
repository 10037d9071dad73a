#pragma once

#include "stratkit/numbers.hpp"

#include <optional>
#include <vector>

namespace stratkit {

// Integer matrix with arbitrary-precision entries.
class MatZ {
  public:
    MatZ() : rows_(0), cols_(0) {}
    MatZ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static MatZ identity(int n);
    static MatZ from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const MatZ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;
    bool is_upper_triangular() const;
    bool is_diagonal() const;
    bool zero_diagonal() const;

    MatZ operator+(const MatZ& o) const;
    MatZ operator*(const MatZ& o) const;
    MatZ transpose() const;
    Int det() const;  // Bareiss, exact

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SnfResult {
    MatZ U, D, V;                       // U*A*V == D, U and V unimodular
    std::vector<Int> invariant_factors;  // nonzero diagonal of D, each dividing the next
};

// Smith normal form.  Pivot choice: smallest absolute nonzero value, ties by
// lowest row then column index, so U and V are reproducible.
SnfResult smith(const MatZ& A);

struct CokerStructure {
    std::vector<Int> torsion;   // invariant factors > 1
    std::vector<Int> factors;   // all nonzero invariant factors
    int free_rank = 0;
    std::optional<Int> order;   // product of factors when free_rank == 0
    std::string str() const;    // e.g. "Z/2 + Z/2", "0", "Z^2 + Z/3"
};

// Structure of Z^rows / A Z^cols.
CokerStructure cokernel_structure(const MatZ& A);

}  // namespace stratkit
