#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "triassoc/matrix.hpp"

namespace triassoc::lin {

/// Raised when a containment precondition (a ⊆ b, v ∈ S) fails.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// Linear subspace of F^n held by its reduced row-echelon basis.
///
/// The basis is canonical: two Subspace values describe the same set exactly
/// when their bases are equal entry-wise, so operator== is set equality.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const Field& field, std::size_t ambient_dim);
  static Subspace full(const Field& field, std::size_t ambient_dim);
  /// Span of the rows of `generators`.
  static Subspace span(const Matrix& generators);
  static Subspace span(const Field& field, std::size_t ambient_dim,
                       const std::vector<Vector>& generators);
  /// Adopts a matrix already known to be in RREF with no zero rows.
  static Subspace from_rref(Matrix basis, std::vector<std::size_t> pivots);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const;

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Remainder of v after clearing every pivot coordinate.
  Vector reduce(std::span<const Scalar> v) const;
  /// Coordinates of v in the stored basis; throws ContainmentError if v ∉ S.
  Vector coordinates(std::span<const Scalar> v) const;
  Vector combine(std::span<const Scalar> coords) const;
  /// Matrix whose columns are the basis vectors (ambient x dim).
  Matrix inclusion() const;

  bool operator==(const Subspace& other) const {
    return basis_ == other.basis_ && pivots_ == other.pivots_;
  }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space of m.
Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// Complement of a inside b: b's basis rows are visited in pivot order and
/// kept whenever they are independent of a plus the rows already kept.
/// Requires a ⊆ b.
Subspace complement(const Subspace& a, const Subspace& b);
/// Linear map (dim b − dim a) x ambient sending x ∈ b to its coordinates in
/// b/a, relative to the basis complement(a, b). Requires a ⊆ b.
Matrix quotient_coordinates(const Subspace& a, const Subspace& b);

}  // namespace triassoc::lin
