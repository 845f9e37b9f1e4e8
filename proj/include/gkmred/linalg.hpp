// Dense exact linear algebra over Q: row reduction, rank, kernels, solving,
// and subspaces with canonical (RREF) bases.

#pragma once

#include "gkmred/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gkm {

class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<RatVec>& rows) {
        if (rows.empty()) return RatMatrix();
        RatMatrix m(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("RatMatrix: ragged rows");
            for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static RatMatrix identity(size_t n) {
        RatMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    RatVec row(size_t i) const {
        RatVec r(cols_);
        for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    void append_row(const RatVec& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }

    friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

  private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

struct Rref {
    RatMatrix mat;               // reduced row echelon form, zero rows dropped
    std::vector<size_t> pivots;  // pivot column per kept row
    size_t rank() const { return pivots.size(); }
};

inline Rref row_reduce(const RatMatrix& m) {
    RatMatrix a = m;
    const size_t rows = a.rows(), cols = a.cols();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
        Rational inv = Rational(1) / a(r, c);
        for (size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational f = a(i, c);
            for (size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Rref out;
    out.pivots = pivots;
    out.mat = RatMatrix(pivots.size(), cols);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < cols; ++j) out.mat(i, j) = a(i, j);
    return out;
}

inline size_t rank(const RatMatrix& m) { return row_reduce(m).rank(); }

// Basis of { x : A x = 0 }, one row per free column.
inline std::vector<RatVec> nullspace(const RatMatrix& a) {
    Rref r = row_reduce(a);
    const size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(n);
        v[f] = Rational(1);
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of A x = b, or nullopt when inconsistent.
inline std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: size mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Rref r = row_reduce(aug);
    for (auto p : r.pivots)
        if (p == a.cols()) return std::nullopt;
    RatVec x(a.cols());
    for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.mat(i, a.cols());
    return x;
}

// A subspace of Q^n held as a canonical RREF basis, so equal subspaces
// compare equal as matrices.
class Subspace {
  public:
    Subspace() : ambient_(0) {}
    explicit Subspace(size_t ambient) : ambient_(ambient) {}

    static Subspace span(const std::vector<RatVec>& vectors, size_t ambient) {
        for (auto& v : vectors)
            if (v.size() != ambient) throw std::invalid_argument("span: ambient mismatch");
        Subspace s(ambient);
        if (!vectors.empty()) {
            Rref r = row_reduce(RatMatrix::from_rows(vectors));
            s.basis_ = r.mat;
        }
        return s;
    }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }

    bool contains(const RatVec& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("contains: ambient mismatch");
        // reduce v against the RREF rows
        RatVec w = v;
        for (size_t i = 0; i < basis_.rows(); ++i) {
            size_t p = pivot_col(i);
            if (!w[p].is_zero()) {
                Rational f = w[p];
                for (size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_(i, j);
            }
        }
        for (auto& x : w)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Subspace subspace_sum(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace_sum: ambient mismatch");
        std::vector<RatVec> rows;
        for (size_t i = 0; i < a.basis_.rows(); ++i) rows.push_back(a.basis_.row(i));
        for (size_t i = 0; i < b.basis_.rows(); ++i) rows.push_back(b.basis_.row(i));
        return span(rows, a.ambient_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

  private:
    size_t pivot_col(size_t i) const {
        for (size_t j = 0; j < ambient_; ++j)
            if (!basis_(i, j).is_zero()) return j;
        throw std::logic_error("Subspace: zero basis row");
    }

    size_t ambient_;
    RatMatrix basis_;
};

inline Subspace subspace_span(const std::vector<RatVec>& vectors, size_t ambient) {
    return Subspace::span(vectors, ambient);
}

inline bool subspace_member(const RatVec& v, const Subspace& s) { return s.contains(v); }

// Coordinates of v in the row span of `rows` (columns = rows.size()), if any.
inline std::optional<RatVec> coordinates_in_span(const std::vector<RatVec>& rows, const RatVec& v) {
    if (rows.empty()) return std::nullopt;
    const size_t n = rows[0].size();
    RatMatrix at(n, rows.size());
    for (size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].size() != n) throw std::invalid_argument("coordinates_in_span: ragged");
        for (size_t i = 0; i < n; ++i) at(i, j) = rows[j][i];
    }
    return solve_linear(at, v);
}

}  // namespace gkm
