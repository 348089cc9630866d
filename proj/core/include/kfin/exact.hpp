#pragma once

// Exact rational scalars, dense matrices and canonical subspaces.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace kfin {

using BigInt = mpz_class;
/// Arbitrary precision rational, always kept in lowest terms by GMP.
using BigRational = mpq_class;
using Vector = std::vector<BigRational>;

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigRational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigRational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const BigRational> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const;
  const std::vector<BigRational>& entries() const { return entries_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> entries_;
};

struct RrefResult {
  Matrix reduced;  // same shape as the input; zero rows at the bottom
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form. Runs fraction-free integer elimination with
/// content stripping internally; the result is the unique rational RREF.
RrefResult rref(const Matrix& m);

namespace detail {
/// Textbook rational Gauss-Jordan. Reference path for validating rref().
RrefResult rref_rational(const Matrix& m);
}  // namespace detail

/// A linear subspace of Q^n stored as its reduced row echelon basis. Two
/// subspaces are equal as sets iff they compare equal.
class Subspace {
 public:
  /// The zero subspace of Q^n. Throws PreconditionError for n == 0.
  explicit Subspace(std::size_t ambient_dim);

  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }

  /// dim() x ambient_dim() matrix in RREF with no zero rows.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  bool operator==(const Subspace&) const = default;

 private:
  friend Subspace subspace_from_spanning(std::span<const Vector>, std::size_t);
  friend Subspace subspace_from_matrix(const Matrix&);

  std::size_t ambient_dim_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Span of `vectors` in Q^ambient_dim. Zero vectors are ignored.
/// Throws DimensionMismatch if a vector has the wrong length.
Subspace subspace_from_spanning(std::span<const Vector> vectors, std::size_t ambient_dim);

/// Row space of `m`.
Subspace subspace_from_matrix(const Matrix& m);

/// Exact membership test. Throws DimensionMismatch on length mismatch.
bool member(std::span<const BigRational> v, const Subspace& space);

/// {phi : phi(v) = 0 for all v in space} under the standard pairing.
Subspace annihilator(const Subspace& space);

/// Sum of two subspaces of the same ambient space.
Subspace sum(const Subspace& a, const Subspace& b);

/// Inverse of a square matrix; throws PreconditionError if singular.
Matrix inverse(const Matrix& m);

}  // namespace kfin
