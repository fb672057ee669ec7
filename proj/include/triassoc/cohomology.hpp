#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "triassoc/trialgebra.hpp"

namespace triassoc {

struct CentralExtension;

/// Triple (f⊢, f⊣, f⊥) of bilinear maps B × B → F^k.
///
/// Coordinates are flattened as (product, i, j, coefficient) with the product
/// in kOps order and (i, j) row-major; see index().
class CochainTriple {
 public:
  CochainTriple(TriAlgebra base, std::size_t coeff_dim);
  CochainTriple(TriAlgebra base, std::size_t coeff_dim, Vector coords);

  static std::size_t ambient_dim(std::size_t n, std::size_t k) { return 3 * n * n * k; }
  static std::size_t index(std::size_t n, std::size_t k, Op op, std::size_t i, std::size_t j,
                           std::size_t t) {
    return ((static_cast<std::size_t>(op) * n + i) * n + j) * k + t;
  }

  const TriAlgebra& base() const { return base_; }
  std::size_t coeff_dim() const { return k_; }
  const Vector& coords() const { return coords_; }

  Vector value(Op op, std::size_t i, std::size_t j) const;
  void set(Op op, std::size_t i, std::size_t j, std::span<const Scalar> value);
  /// Bilinear extension to arbitrary vectors of the base.
  Vector evaluate(Op op, std::span<const Scalar> x, std::span<const Scalar> y) const;

  /// χ ∘ f for a linear map χ: F^k → F^k' given as a k' x k matrix.
  CochainTriple compose(const Matrix& chi) const;
  /// (x, y) ↦ f(βx, βy) on `new_base`, with β: new_base → base given as a matrix.
  CochainTriple pullback(const TriAlgebra& new_base, const Matrix& beta) const;
  /// Scalar-valued slice for coefficient coordinate t.
  CochainTriple component(std::size_t t) const;

  bool is_zero() const { return lin::is_zero(coords_); }

  friend CochainTriple operator+(const CochainTriple& a, const CochainTriple& b);
  friend CochainTriple operator-(const CochainTriple& a, const CochainTriple& b);
  friend CochainTriple operator*(const Scalar& s, const CochainTriple& a);
  bool operator==(const CochainTriple& other) const;

 private:
  TriAlgebra base_;
  std::size_t k_;
  Vector coords_;
};

/// k cochains with scalar values stacked into one F^k-valued cochain.
CochainTriple stack_cochains(const TriAlgebra& base, std::span<const CochainTriple> parts);

/// Cocycle conditions violated by f (1-based axiom indices, sorted).
std::vector<int> cocycle_violations(const CochainTriple& f);
bool is_cocycle(const CochainTriple& f);

/// Z²(B, F^k): kernel of the cocycle constraints instantiated on basis triples.
Subspace z2_space(const TriAlgebra& b, std::size_t k);
/// B²(B, F^k): image of ε ↦ (−ε(x⊢y), −ε(x⊣y), −ε(x⊥y)).
Subspace b2_space(const TriAlgebra& b, std::size_t k);
/// The coboundary of a linear map ε: B → F^k given as a k x n matrix.
CochainTriple coboundary(const TriAlgebra& b, const Matrix& epsilon);

struct CohomologyResult {
  TriAlgebra base;
  std::size_t coeff_dim = 0;
  Subspace z2;
  Subspace b2;
  std::size_t h2_dim = 0;
  /// Pivot-completion complement of B² in Z², as cochains.
  std::vector<CochainTriple> h2_reps;
  /// h2_dim x ambient; maps a cocycle to the coordinates of its class.
  Matrix class_map;

  /// Coordinates of the class of f relative to h2_reps; throws if f ∉ Z².
  Vector class_coordinates(const CochainTriple& f) const;
  /// Σ coords[r] · h2_reps[r].
  CochainTriple representative(std::span<const Scalar> coords) const;
};

CohomologyResult h2(const TriAlgebra& b, std::size_t k);

/// Raised when a map offered as a section is not a right inverse of the projection.
class NotASection : public Error {
 public:
  using Error::Error;
};

/// f_*(x, y) = μ(x)*μ(y) − μ(x*y), in coordinates of the extension's kernel basis.
CochainTriple section_cocycle(const CentralExtension& ext, const Matrix& section);

bool is_cohomologous(const CochainTriple& f, const CochainTriple& g);

}  // namespace triassoc
