#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "triassoc/scalar.hpp"

namespace triassoc::lin {

using Vector = std::vector<Scalar>;

/// One nonzero entry of a sparse row.
struct Term {
  std::size_t index;
  Scalar value;
};
using SparseRow = std::vector<Term>;  // sorted by index, no zero values

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, std::span<const Scalar> b);
SparseRow to_sparse(std::span<const Scalar> v);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(const Field& field, std::size_t n);
  /// Rows given explicitly; every row must have `cols` entries.
  static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows);
  /// Integer literal convenience, used heavily by tests and generators.
  static Matrix from_ints(const Field& field, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  const std::vector<Scalar>& entries() const { return data_; }

  Matrix transpose() const;
  /// Rows of `this` followed by rows of `below`.
  Matrix stack(const Matrix& below) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix select_cols(std::span<const std::size_t> cols) const;

  bool is_zero() const;
  Vector apply(std::span<const Scalar> x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  bool operator==(const Matrix& other) const;

  /// Throws FieldMismatch if some entry belongs to another field.
  void check_field() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan reduction: leftmost column first, topmost nonzero row as
/// pivot. The reduced matrix keeps the input shape (zero rows at the bottom).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

}  // namespace triassoc::lin
