#include "stratkit/matrix.hpp"

namespace stratkit {

MatQ MatQ::identity(int n, const Field& f) {
    MatQ m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

MatQ MatQ::from_rows(const std::vector<std::vector<Scalar>>& rows, int cols, const Field& f) {
    MatQ m(static_cast<int>(rows.size()), cols, f);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw MathError("ragged rows");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool MatQ::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool MatQ::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

bool MatQ::operator==(const MatQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return false;
    return true;
}

MatQ MatQ::operator+(const MatQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("shape mismatch in +");
    MatQ r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("shape mismatch in -");
    MatQ r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (cols_ != o.rows_) throw MathError("shape mismatch in *");
    MatQ r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

MatQ MatQ::scaled(const Scalar& c) const {
    MatQ r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

MatQ MatQ::transpose() const {
    MatQ r(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

MatQ MatQ::col(int j) const {
    MatQ r(rows_, 1, field_);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

MatQ MatQ::cols_at(const std::vector<int>& idx) const {
    MatQ r(rows_, static_cast<int>(idx.size()), field_);
    for (int j = 0; j < r.cols(); ++j)
        for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
}

MatQ MatQ::hstack(const MatQ& o) const {
    if (rows_ != o.rows_) throw MathError("hstack shape mismatch");
    MatQ r(rows_, cols_ + o.cols_, field_);
    r.set_block(0, 0, *this);
    r.set_block(0, cols_, o);
    return r;
}

MatQ MatQ::vstack(const MatQ& o) const {
    if (cols_ != o.cols_) throw MathError("vstack shape mismatch");
    MatQ r(rows_ + o.rows_, cols_, field_);
    r.set_block(0, 0, *this);
    r.set_block(rows_, 0, o);
    return r;
}

void MatQ::set_block(int i0, int j0, const MatQ& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

MatQ MatQ::block(int i0, int j0, int r, int c) const {
    MatQ b(r, c, field_);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) b.at(i, j) = at(i0 + i, j0 + j);
    return b;
}

namespace {

// in-place Gauss-Jordan; returns pivot columns
std::vector<int> rref_inplace(MatQ& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = m.at(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

ReduceResult reduce(const MatQ& A) {
    ReduceResult res;
    res.rref = A;
    res.pivots = rref_inplace(res.rref);
    res.rank = static_cast<int>(res.pivots.size());
    const Field& f = A.field();

    // kernel basis: one column per free variable, canonical form
    std::vector<bool> is_pivot(A.cols(), false);
    for (int c : res.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < A.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    res.nullspace = MatQ(A.cols(), static_cast<int>(free_cols.size()), f);
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int fc = free_cols[k];
        res.nullspace.at(fc, k) = Scalar::one(f);
        for (int r = 0; r < res.rank; ++r) res.nullspace.at(res.pivots[r], k) = -res.rref.at(r, fc);
    }
    res.image = A.cols_at(res.pivots);
    return res;
}

int rank_of(const MatQ& A) {
    MatQ m = A;
    return static_cast<int>(rref_inplace(m).size());
}

SolveResult solve(const MatQ& A, const MatQ& b) {
    if (A.rows() != b.rows()) throw MathError("solve: shape mismatch");
    const Field& f = A.field();
    MatQ aug = A.hstack(b);
    auto pivots = rref_inplace(aug);
    SolveResult res;
    // inconsistent iff some pivot falls in the b-part
    for (int c : pivots)
        if (c >= A.cols()) return res;
    res.consistent = true;
    res.particular = MatQ(A.cols(), b.cols(), f);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
        for (int j = 0; j < b.cols(); ++j) res.particular.at(pivots[r], j) = aug.at(r, A.cols() + j);
    res.nullspace = reduce(A).nullspace;
    return res;
}

MatQ col_basis(const MatQ& A) {
    MatQ t = A.transpose();
    auto pivots = rref_inplace(t);
    MatQ b(A.rows(), static_cast<int>(pivots.size()), A.field());
    for (int r = 0; r < b.cols(); ++r)
        for (int i = 0; i < A.rows(); ++i) b.at(i, r) = t.at(r, i);
    return b;
}

std::vector<int> col_basis_pivot_rows(const MatQ& B) {
    std::vector<int> piv;
    for (int j = 0; j < B.cols(); ++j)
        for (int i = 0; i < B.rows(); ++i)
            if (!B.at(i, j).is_zero()) {
                piv.push_back(i);
                break;
            }
    return piv;
}

bool in_col_space(const MatQ& B, const MatQ& v) {
    if (v.cols() == 0) return true;
    if (B.cols() == 0) return v.is_zero();
    return solve(B, v).consistent;
}

MatQ quotient_projection(const MatQ& B, int dim) {
    const Field& f = B.field();
    auto piv = col_basis_pivot_rows(B);
    std::vector<bool> is_piv(dim, false);
    for (int i : piv) is_piv[i] = true;
    std::vector<int> rest;
    for (int i = 0; i < dim; ++i)
        if (!is_piv[i]) rest.push_back(i);
    MatQ pr(static_cast<int>(rest.size()), dim, f);
    for (int k = 0; k < pr.rows(); ++k) {
        pr.at(k, rest[k]) = Scalar::one(f);
        // subtract the span component determined by the pivot coordinates
        for (int j = 0; j < B.cols(); ++j) pr.at(k, piv[j]) = -B.at(rest[k], j);
    }
    return pr;
}

MatQ quotient_section(const MatQ& B, int dim) {
    const Field& f = B.field();
    auto piv = col_basis_pivot_rows(B);
    std::vector<bool> is_piv(dim, false);
    for (int i : piv) is_piv[i] = true;
    std::vector<int> rest;
    for (int i = 0; i < dim; ++i)
        if (!is_piv[i]) rest.push_back(i);
    MatQ sec(dim, static_cast<int>(rest.size()), f);
    for (int k = 0; k < sec.cols(); ++k) sec.at(rest[k], k) = Scalar::one(f);
    return sec;
}

MatQ span_union(const std::vector<MatQ>& parts, int dim, const Field& f) {
    MatQ all(dim, 0, f);
    for (const auto& p : parts) {
        if (p.rows() != dim) throw MathError("span_union: wrong height");
        all = all.hstack(p);
    }
    return col_basis(all);
}

Scalar det(const MatQ& A) {
    if (A.rows() != A.cols()) throw MathError("det: not square");
    MatQ m = A;
    const Field& f = A.field();
    Scalar d = Scalar::one(f);
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) return Scalar::zero(f);
        if (pr != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Scalar inv = m.at(c, c).inv();
        for (int i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar fac = m.at(i, c) * inv;
            for (int j = c; j < n; ++j) m.at(i, j) -= fac * m.at(c, j);
        }
    }
    return d;
}

}  // namespace stratkit
