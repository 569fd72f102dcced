#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dualhs/field.hpp"

namespace dualhs {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t size);
bool is_zero_vector(const Vector& v);

/// Sparse vector: (index, nonzero value) pairs in ascending index order.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Sorts and merges arbitrary (index, value) pairs, dropping zeros.
SparseVec sparse_combine(SparseVec entries);
/// sum_j v_j * columns[j].
SparseVec sparse_apply(const std::vector<SparseVec>& columns, const SparseVec& v);
SparseVec to_sparse(const Vector& v);
Vector to_dense(const Field& field, const SparseVec& v, std::size_t size);

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_ints(const Field& field,
                          const std::vector<std::vector<long long>>& rows);
  static Matrix from_rows(const Field& field, std::size_t cols,
                          const std::vector<Vector>& rows);
  static Matrix from_columns(const Field& field, std::size_t rows,
                             const std::vector<Vector>& columns);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& scale(const Scalar& s);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult mat_rref(const Matrix& a);
std::size_t mat_rank(const Matrix& a);
/// Basis of the right null space {v : A v = 0}.
std::vector<Vector> mat_kernel(const Matrix& a);
/// Some x with A x = b, or nullopt when b is outside the column space.
std::optional<Vector> mat_solve(const Matrix& a, const Vector& b);

/// Row-sparse matrix; the structured Hom/Ext systems are assembled here and
/// eliminated without densifying.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseMatrix(const Field& field, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Accumulates value into entry (row, col).
  void add(std::size_t row, std::size_t col, const Scalar& value);
  /// Rows in ascending column order with zero entries removed.
  std::vector<std::vector<Entry>> normalized_rows() const;

  std::size_t rank() const;
  std::vector<Vector> kernel() const;
  Matrix to_dense() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> data_;
};

/// Rank of the span of the given vectors (all of equal length).
std::size_t span_rank(const Field& field, std::size_t length,
                      const std::vector<Vector>& vectors);

/// Reduced echelon basis of a subspace of k^n with membership, reduction and
/// coordinate extraction.
class EchelonBasis {
 public:
  EchelonBasis(const Field& field, std::size_t length,
               const std::vector<Vector>& spanning);

  std::size_t dimension() const { return basis_.size(); }
  std::size_t length() const { return length_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v lies in
  /// the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const { return is_zero_vector(reduce(v)); }
  /// Coordinates of a member in terms of basis().
  Vector coordinates(const Vector& v) const;
  /// Coordinates not used as pivots: a basis of the quotient k^n / span.
  std::vector<std::size_t> free_columns() const;

 private:
  Field field_;
  std::size_t length_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace dualhs
