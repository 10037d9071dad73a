#include "stratkit/smith.hpp"

namespace stratkit {

MatZ MatZ::identity(int n) {
    MatZ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatZ MatZ::from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    MatZ m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw MathError("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool MatZ::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool MatZ::is_upper_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < std::min(i, cols_); ++j)
            if (at(i, j) != 0) return false;
    return true;
}

bool MatZ::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

bool MatZ::zero_diagonal() const {
    for (int i = 0; i < std::min(rows_, cols_); ++i)
        if (at(i, i) != 0) return false;
    return true;
}

MatZ MatZ::operator+(const MatZ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("shape mismatch in +");
    MatZ r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

MatZ MatZ::operator*(const MatZ& o) const {
    if (cols_ != o.rows_) throw MathError("shape mismatch in *");
    MatZ r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

MatZ MatZ::transpose() const {
    MatZ r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Int MatZ::det() const {
    if (rows_ != cols_) throw MathError("det: not square");
    int n = rows_;
    if (n == 0) return 1;
    MatZ m = *this;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pr = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    pr = i;
                    break;
                }
            if (pr < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
    MatZ A, U, V;

    void row_swap(int i, int j) {
        for (int c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
        for (int r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    void row_add(int dst, int src, const Int& f) {  // row dst += f * row src
        for (int c = 0; c < A.cols(); ++c) A.at(dst, c) += f * A.at(src, c);
        for (int c = 0; c < U.cols(); ++c) U.at(dst, c) += f * U.at(src, c);
    }
    void col_add(int dst, int src, const Int& f) {
        for (int r = 0; r < A.rows(); ++r) A.at(r, dst) += f * A.at(r, src);
        for (int r = 0; r < V.rows(); ++r) V.at(r, dst) += f * V.at(r, src);
    }
    void row_negate(int i) {
        for (int c = 0; c < A.cols(); ++c) A.at(i, c) = -A.at(i, c);
        for (int c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
    }
};

}  // namespace

SnfResult smith(const MatZ& A) {
    SnfWork w{A, MatZ::identity(A.rows()), MatZ::identity(A.cols())};
    int n = std::min(A.rows(), A.cols());

    for (int k = 0; k < n; ++k) {
        // pivot: smallest |nonzero| in the trailing block, lowest row then column
        for (;;) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = k; i < w.A.rows(); ++i)
                for (int j = k; j < w.A.cols(); ++j) {
                    const Int& x = w.A.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                pi = -1;
                break;  // trailing block zero; done
            }
            if (pi != k) w.row_swap(pi, k);
            if (pj != k) w.col_swap(pj, k);

            bool clean = true;
            for (int i = k + 1; i < w.A.rows(); ++i)
                if (w.A.at(i, k) != 0) {
                    Int q = w.A.at(i, k) / w.A.at(k, k);
                    w.row_add(i, k, -q);
                    if (w.A.at(i, k) != 0) clean = false;
                }
            for (int j = k + 1; j < w.A.cols(); ++j)
                if (w.A.at(k, j) != 0) {
                    Int q = w.A.at(k, j) / w.A.at(k, k);
                    w.col_add(j, k, -q);
                    if (w.A.at(k, j) != 0) clean = false;
                }
            if (!clean) continue;  // remainders left; pick a smaller pivot

            // pivot must divide every remaining entry for the divisibility chain
            bool divides_all = true;
            for (int i = k + 1; i < w.A.rows() && divides_all; ++i)
                for (int j = k + 1; j < w.A.cols(); ++j)
                    if (w.A.at(i, j) % w.A.at(k, k) != 0) {
                        w.row_add(k, i, 1);  // pull the bad row up and restart the pivot
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (w.A.at(k, k) == 0) break;
        if (w.A.at(k, k) < 0) w.row_negate(k);
    }

    SnfResult res;
    res.U = w.U;
    res.D = w.A;
    res.V = w.V;
    for (int i = 0; i < n; ++i)
        if (res.D.at(i, i) != 0) res.invariant_factors.push_back(res.D.at(i, i));

    // internal consistency: U*A*V == D, divisibility chain, unimodularity
    if (!(res.U * A * res.V == res.D)) throw MathError("smith: transform mismatch");
    for (size_t i = 0; i + 1 < res.invariant_factors.size(); ++i)
        if (res.invariant_factors[i + 1] % res.invariant_factors[i] != 0)
            throw MathError("smith: divisibility chain broken");
    Int du = res.U.det(), dv = res.V.det();
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) throw MathError("smith: transforms not unimodular");
    return res;
}

CokerStructure cokernel_structure(const MatZ& A) {
    SnfResult s = smith(A);
    CokerStructure c;
    c.factors = s.invariant_factors;
    c.free_rank = A.rows() - static_cast<int>(s.invariant_factors.size());
    for (const auto& d : s.invariant_factors)
        if (d > 1) c.torsion.push_back(d);
    if (c.free_rank == 0) {
        Int ord = 1;
        for (const auto& d : s.invariant_factors) ord *= d;
        c.order = ord;
    }
    return c;
}

std::string CokerStructure::str() const {
    std::string s;
    for (int i = 0; i < free_rank; ++i) s += (s.empty() ? "Z" : " + Z");
    for (const auto& d : torsion) s += (s.empty() ? "Z/" : " + Z/") + d.str();
    return s.empty() ? "0" : s;
}

}  // namespace stratkit
