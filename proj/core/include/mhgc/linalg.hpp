#pragma once

/// @file linalg.hpp
/// Exact rational vectors and dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mhgc {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "n", "-n" or "n/d". Throws Error(BadRational) on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);
/// Canonical text: "n" for integers, "n/d" in lowest terms otherwise.
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }
bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

/// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    /// Columns given as vectors of length `rows`.
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Scalar>& data() const noexcept { return data_; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);

    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix transpose(const Matrix& m);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& m, const Scalar& c);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& c);
/// y += c * x
void axpy(Vector& y, const Scalar& c, const Vector& x);
Scalar dot(const Vector& a, const Vector& b);

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Applies `m` to the middle leg of `x`, viewed as an (outer, m.cols(), inner) array.
Vector apply_on_leg(const Matrix& m, const Vector& x, std::size_t outer, std::size_t inner);
/// Reorders x in V1⊗V2 (dims n1, n2) into V2⊗V1.
Vector flip(const Vector& x, std::size_t n1, std::size_t n2);
/// Permutation matrix of the leg swap V1⊗V2 → V2⊗V1.
Matrix flip_matrix(std::size_t n1, std::size_t n2);

/// Exact rank by fraction-free (Bareiss) elimination on a denominator-cleared copy.
std::size_t rank(const Matrix& m);

/// Right kernel basis; vectors are read off the reduced row echelon form,
/// one per free column, so the output is canonical.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Throws Error(SingularMatrix) if `m` is not square or not invertible.
Matrix invert(const Matrix& m);

/// A particular solution of m x = b with free variables set to zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Column-wise solve of m X = B.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Column-compressed sparse matrix; entries within a column are sorted by row.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

    static SparseMatrix from_dense(const Matrix& m);
    Matrix to_dense() const;

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const;

    const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }
    /// Replaces column j; zero entries are dropped and rows sorted.
    void set_column(std::size_t j, std::vector<Entry> entries);
    void set_column(std::size_t j, const Vector& dense);
    Vector dense_column(std::size_t j) const;

    Vector apply(const Vector& x) const;
    SparseMatrix transposed() const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

/// Inverse of a sparse matrix computed per connected component of its
/// row/column incidence graph. Throws Error(SingularMatrix) naming the size
/// and rank of the first non-invertible component.
SparseMatrix invert_blockwise(const SparseMatrix& m);

/// Factorization reused across many right-hand sides of a fixed system.
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& m);

    std::size_t rank() const noexcept { return pivots_.size(); }
    bool injective() const noexcept { return pivots_.size() == m_.cols(); }
    /// Columns of the matrix holding a pivot, ascending.
    const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }
    /// Rows of the matrix forming an invertible core with the pivot columns.
    const std::vector<std::size_t>& pivot_rows() const noexcept { return pivot_rows_; }

    /// Particular solution (free variables zero) or nullopt if inconsistent.
    std::optional<Vector> solve(const Vector& b) const;

private:
    Matrix m_;
    std::vector<std::size_t> pivot_rows_;
    std::vector<std::size_t> pivots_;
    Matrix core_inverse_;
};

}  // namespace mhgc
