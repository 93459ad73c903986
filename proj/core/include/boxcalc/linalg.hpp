#pragma once

#include "boxcalc/rational.hpp"

#include <cstddef>
#include <vector>

namespace boxcalc {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[0].size(); ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

RatMat to_rat_mat(const IntMat& m);

/// Exact determinant of a square integer matrix, fraction-free (Bareiss).
Int det(const IntMat& m);

Rat det(const RatMat& m);

struct RrefResult {
    RatMat reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row-echelon form: leftmost pivots, leading entries 1. Deterministic,
/// used as the canonical key for subspace identity.
RrefResult rref(const RatMat& m);

std::size_t rank(const RatMat& m);
std::size_t rank_of_int_rows(const std::vector<IntVec>& rows, std::size_t dim);

/// Basis of the right null space { x : m x = 0 }; empty when trivial.
std::vector<RatVec> kernel_basis(const RatMat& m);

/// Integer basis of { x in Z^cols : m x = 0 } (a saturated sublattice).
std::vector<IntVec> integer_kernel_basis(const IntMat& m);

struct SnfDecomposition {
    IntMat left;            // unimodular, rows x rows
    std::vector<Int> diag;  // min(rows, cols) entries, divisibility chain
    IntMat right;           // unimodular, cols x cols
};

/// Smith normal form: left * A * right = diag-matrix, |det left| = |det right| = 1,
/// diag[i] >= 0 and diag[i] | diag[i+1] for the nonzero prefix.
/// The result is verified by multiplying back on every call (desk-scale inputs).
SnfDecomposition smith_normal_form(const IntMat& m);

/// Exact inverse of a unimodular integer matrix.
IntMat unimodular_inverse(const IntMat& m);

RatMat rat_inverse(const RatMat& m);

/// Primitive sign-normalized integer covector vanishing on the span of
/// `vectors` (which must be a hyperplane of Q^dim). gcd of entries is 1 and
/// the first nonzero entry is positive.
IntVec primitive_normal(const std::vector<IntVec>& vectors, std::size_t dim);

/// Divide by the gcd of the entries and flip sign so the first nonzero entry
/// is positive. Returns the signed content c with v = c * primitive(v).
Int make_primitive(IntVec& v);

struct QuotientMap {
    std::size_t ambient_dim = 0;
    std::size_t subspace_dim = 0;
    /// (ambient_dim - subspace_dim) x ambient_dim integer matrix mapping
    /// Z^ambient onto Z^quotient with kernel the saturation of the subspace.
    IntMat projection;
    /// Integer right inverse of `projection` (a section of the quotient).
    IntMat section;
    /// Basis of the saturation of span(s) ∩ Z^ambient.
    std::vector<IntVec> saturation_basis;
};

/// Quotient of the standard lattice by the saturation of span(s_basis).
/// s_basis must be linearly independent. For an empty basis this is the
/// identity map.
QuotientMap lattice_quotient(const std::vector<IntVec>& s_basis, std::size_t ambient_dim);

Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);

}  // namespace boxcalc
