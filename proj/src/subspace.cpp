#include "triassoc/subspace.hpp"

#include <string>

#include "triassoc/row_echelon.hpp"

namespace triassoc::lin {

Subspace Subspace::zero(const Field& field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::span(const Matrix& generators) {
  generators.check_field();
  RowEchelon echelon(generators.field(), generators.cols());
  for (std::size_t r = 0; r < generators.rows(); ++r) echelon.insert(generators.row(r));
  return echelon.row_space();
}

Subspace Subspace::span(const Field& field, std::size_t ambient_dim,
                        const std::vector<Vector>& generators) {
  RowEchelon echelon(field, ambient_dim);
  for (const auto& g : generators) echelon.insert(g);
  return echelon.row_space();
}

Subspace Subspace::from_rref(Matrix basis, std::vector<std::size_t> pivots) {
  if (pivots.size() != basis.rows()) {
    throw DimensionMismatch("pivot count does not match basis rows");
  }
  return Subspace(std::move(basis), std::move(pivots));
}

Vector Subspace::basis_vector(std::size_t i) const {
  auto r = basis_.row(i);
  return Vector(r.begin(), r.end());
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " tested against subspace of F^" + std::to_string(ambient_dim()));
  }
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_.row(i));
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw ContainmentError("vector does not lie in the subspace");
  Vector c;
  c.reserve(dim());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Vector Subspace::combine(std::span<const Scalar> coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("coordinate count does not match dim");
  Vector v = zero_vector(field(), ambient_dim());
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(v, coords[i], basis_.row(i));
  return v;
}

Matrix Subspace::inclusion() const { return basis_.transpose(); }

Subspace kernel(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  RowEchelon echelon(m.field(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) echelon.insert(reduced.row(r));
  return echelon.null_space();
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

namespace {
void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspaces live in F^" + std::to_string(a.ambient_dim()) + " and F^" +
                            std::to_string(b.ambient_dim()));
  }
  if (!(a.field() == b.field())) throw FieldMismatch("subspaces over different fields");
}
}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return Subspace::span(a.basis().stack(b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.field(), a.ambient_dim());
  // (u, w) with u·A + w·B = 0 gives u·A ∈ a ∩ b; all such elements arise this way.
  const Matrix stacked = a.basis().stack(b.basis());
  const Subspace relations = kernel(stacked.transpose());
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < relations.dim(); ++i) {
    auto rel = relations.basis().row(i);
    Vector x = zero_vector(a.field(), a.ambient_dim());
    for (std::size_t j = 0; j < a.dim(); ++j) axpy(x, rel[j], a.basis().row(j));
    gens.push_back(std::move(x));
  }
  return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Subspace complement(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (!b.contains(a)) throw ContainmentError("complement requires a ⊆ b");
  RowEchelon seen(a.field(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) seen.insert(a.basis().row(i));
  std::vector<std::size_t> kept_rows;
  std::vector<std::size_t> kept_pivots;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (seen.insert(b.basis().row(i))) {
      kept_rows.push_back(i);
      kept_pivots.push_back(b.pivots()[i]);
    }
  }
  // A subset of RREF rows is itself in RREF.
  return Subspace::from_rref(b.basis().select_rows(kept_rows), std::move(kept_pivots));
}

Matrix quotient_coordinates(const Subspace& a, const Subspace& b) {
  const Subspace c = complement(a, b);
  const Matrix basis = a.basis().stack(c.basis());  // a basis of b
  // Restricting to b's pivot columns is injective on b, so basis_S is invertible.
  const Matrix restricted = basis.select_cols(b.pivots());
  const Matrix coord = inverse(restricted.transpose());  // x_S ↦ coefficients
  Matrix q(a.field(), c.dim(), a.ambient_dim());
  for (std::size_t r = 0; r < c.dim(); ++r) {
    for (std::size_t s = 0; s < b.pivots().size(); ++s) q(r, b.pivots()[s]) = coord(a.dim() + r, s);
  }
  return q;
}

}  // namespace triassoc::lin
