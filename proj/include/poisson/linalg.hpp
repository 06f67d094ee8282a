#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "poisson/rational.hpp"

namespace poisson {

// Sparse vector: (index, nonzero value) pairs in increasing index order.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;
using DenseVector = std::vector<Rational>;

SparseVector to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector& v, std::size_t size);

// Row-major sparse matrix over Q.
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols);

    // Assembles a matrix whose j-th column is columns[j].
    static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<SparseVector>& row_data() const noexcept { return data_; }
    const SparseVector& row(std::size_t i) const { return data_.at(i); }

    Rational at(std::size_t i, std::size_t j) const;
    std::size_t nonzeros() const;
    bool is_zero() const;

    SparseMatrix transposed() const;
    SparseVector apply(const SparseVector& x) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<SparseVector> data_;
};

// Rank by fraction-free elimination over Z: rows are scaled to primitive integer
// vectors and combined by cross-multiplication, never dividing.
std::size_t rank(const SparseMatrix& m);

// Incremental reduced row echelon form over Q. Every stored row has leading
// coefficient 1 and is zero in every other pivot column.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    const std::map<std::size_t, SparseVector>& pivots() const noexcept { return pivots_; }

    // Reduces v against the stored rows.
    SparseVector reduce(SparseVector v) const;

    // Adds v to the row space; returns false when it was already in the span.
    bool insert(SparseVector v);

private:
    std::size_t cols_;
    std::map<std::size_t, SparseVector> pivots_;
};

RowReducer row_reduce(const SparseMatrix& m);

// Basis of {x : m x = 0}, one vector per free column, in increasing free-column order.
std::vector<DenseVector> kernel_basis(const SparseMatrix& m);

// Some x with m x = b, or nullopt. Free variables are set to zero.
std::optional<DenseVector> solve(const SparseMatrix& m, const DenseVector& b);

// Dense square matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

    Rational determinant() const;
    // Throws NotInvertibleError when singular.
    RationalMatrix inverse() const;
    RationalMatrix transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace poisson
