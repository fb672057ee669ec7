#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triassoc/matrix.hpp"
#include "triassoc/subspace.hpp"

namespace triassoc {

using lin::Field;
using lin::Matrix;
using lin::Scalar;
using lin::Subspace;
using lin::Vector;

/// The three products of a triassociative algebra.
enum class Op : std::uint8_t { Vdash = 0, Dashv = 1, Perp = 2 };

inline constexpr std::array<Op, 3> kOps = {Op::Vdash, Op::Dashv, Op::Perp};

std::string_view op_name(Op op);        // "vdash", "dashv", "perp"
std::string_view op_symbol(Op op);      // "⊢", "⊣", "⊥"
std::optional<Op> parse_op(std::string_view name);

/// One defining identity (x inner_left y) outer_left z = x outer_right (y inner_right z).
struct Axiom {
  Op inner_left;
  Op outer_left;
  Op outer_right;
  Op inner_right;
};

/// The eleven identities, indexed 1..11 by position + 1. Axioms 1-5 are the
/// diassociative identities of (L, ⊢, ⊣); 1, 2 and 11 are associativity of
/// ⊢, ⊣ and ⊥.
inline constexpr std::array<Axiom, 11> kAxioms = {{
    {Op::Vdash, Op::Vdash, Op::Vdash, Op::Vdash},  //  1 (x⊢y)⊢z = x⊢(y⊢z)
    {Op::Dashv, Op::Dashv, Op::Dashv, Op::Dashv},  //  2 (x⊣y)⊣z = x⊣(y⊣z)
    {Op::Dashv, Op::Vdash, Op::Vdash, Op::Vdash},  //  3 (x⊣y)⊢z = x⊢(y⊢z)
    {Op::Dashv, Op::Dashv, Op::Dashv, Op::Vdash},  //  4 (x⊣y)⊣z = x⊣(y⊢z)
    {Op::Vdash, Op::Dashv, Op::Vdash, Op::Dashv},  //  5 (x⊢y)⊣z = x⊢(y⊣z)
    {Op::Perp, Op::Vdash, Op::Vdash, Op::Vdash},   //  6 (x⊥y)⊢z = x⊢(y⊢z)
    {Op::Dashv, Op::Dashv, Op::Dashv, Op::Perp},   //  7 (x⊣y)⊣z = x⊣(y⊥z)
    {Op::Vdash, Op::Perp, Op::Vdash, Op::Perp},    //  8 (x⊢y)⊥z = x⊢(y⊥z)
    {Op::Perp, Op::Dashv, Op::Perp, Op::Dashv},    //  9 (x⊥y)⊣z = x⊥(y⊣z)
    {Op::Dashv, Op::Perp, Op::Perp, Op::Vdash},    // 10 (x⊣y)⊥z = x⊥(y⊢z)
    {Op::Perp, Op::Perp, Op::Perp, Op::Perp},      // 11 (x⊥y)⊥z = x⊥(y⊥z)
}};

inline constexpr std::array<int, 5> kDiassociativeAxioms = {1, 2, 3, 4, 5};

std::string axiom_text(int index);

/// Structure constants are inconsistent with the declared dimension or field.
class MalformedAlgebra : public Error {
 public:
  using Error::Error;
};

/// An operation that presumes the eleven identities was handed an algebra
/// violating them.
class UnvalidatedAlgebra : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

/// Finite-dimensional triassociative algebra given by structure constants
/// e_i * e_j = Σ_k c_*[i][j][k] e_k.
///
/// Values are immutable and share their storage, so copies are cheap.
class TriAlgebra {
 public:
  /// Dense tensors, index (i * n + j) * n + k, one per product in kOps order.
  using Tensors = std::array<std::vector<Scalar>, 3>;

  TriAlgebra();
  TriAlgebra(Field field, std::size_t dim, Tensors tensors, std::string name = {});

  static TriAlgebra abelian(const Field& field, std::size_t dim, std::string name = {});

  const Field& field() const;
  std::size_t dim() const;
  const std::string& name() const;
  TriAlgebra renamed(std::string name) const;

  const Scalar& coeff(Op op, std::size_t i, std::size_t j, std::size_t k) const;
  /// Nonzero coordinates of e_i * e_j.
  std::span<const lin::Term> product_terms(Op op, std::size_t i, std::size_t j) const;
  Vector basis_product(Op op, std::size_t i, std::size_t j) const;
  const Tensors& tensors() const;

  /// Bilinear product of arbitrary vectors.
  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y, Op op) const;

  /// Same object or identical structure constants.
  bool same_as(const TriAlgebra& other) const;
  bool operator==(const TriAlgebra& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Mutable staging area for structure constants.
class TriAlgebraBuilder {
 public:
  TriAlgebraBuilder(Field field, std::size_t dim);

  TriAlgebraBuilder& set(Op op, std::size_t i, std::size_t j, const Vector& value);
  TriAlgebraBuilder& set(Op op, std::size_t i, std::size_t j, std::size_t k, Scalar value);
  TriAlgebraBuilder& name(std::string name);
  TriAlgebra build() const;

 private:
  Field field_;
  std::size_t dim_;
  TriAlgebra::Tensors tensors_;
  std::string name_;
};

/// A linear subspace of a particular algebra.
struct AlgSubspace {
  AlgSubspace(TriAlgebra parent, Subspace space);

  TriAlgebra parent;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
};

struct AxiomViolation {
  int axiom;                          // 1..11
  std::array<std::size_t, 3> triple;  // basis indices (i, j, k), 0-based
  Vector defect;                      // lhs − rhs
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;

  bool passed() const { return violations.empty(); }
  /// Sorted, de-duplicated axiom indices that failed somewhere.
  std::vector<int> violated_axioms() const;
};

/// Checks the eleven identities on every basis triple.
ValidationReport validate_axioms(const TriAlgebra& a);
/// Checks only the listed identities (1-based indices).
ValidationReport validate_axioms(const TriAlgebra& a, std::span<const int> axioms);
/// Throws UnvalidatedAlgebra unless every identity holds.
void require_valid(const TriAlgebra& a);

/// Associativity of a single product, checked independently of kAxioms.
bool is_associative(const TriAlgebra& a, Op op);

Vector multiply(const TriAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y, Op op);

/// S◊T: span of all products s * t over the three products.
AlgSubspace product_subspace(const AlgSubspace& s, const AlgSubspace& t);
AlgSubspace derived(const TriAlgebra& a);
AlgSubspace center(const TriAlgebra& a);
bool is_ideal(const AlgSubspace& s);

struct Quotient {
  TriAlgebra algebra;
  Matrix projection;  // dim(L/I) x dim L
  Matrix section;     // dim L x dim(L/I), columns = complement basis
};

/// L/I on the pivot-completion complement basis of I.
Quotient quotient_algebra(const TriAlgebra& a, const AlgSubspace& ideal);

/// Hom(L, F^k) for trivial coefficients: k x n matrices (vectorized row-major)
/// whose rows vanish on L′.
Subspace hom_to_field(const TriAlgebra& a, std::size_t k);

/// Structure constants in the basis given by the columns of the invertible p.
TriAlgebra change_basis(const TriAlgebra& a, const Matrix& p);

/// External direct sum with the blocks placed diagonally.
TriAlgebra direct_sum(const TriAlgebra& a, const TriAlgebra& b);

struct DimBoundReport {
  std::size_t central_quotient_dim = 0;  // n = dim(L/Z(L))
  std::size_t derived_dim = 0;
  std::size_t derived_bound = 0;  // 3n²
  bool derived_ok = true;
  bool derived_tight = false;
  // Present when a defining-pair kernel was supplied.
  bool has_pair = false;
  bool pair_is_defining = false;  // kernel ⊆ Z(K) ∩ K′
  std::size_t quotient_dim = 0;   // dim(K/M)
  std::size_t total_dim = 0;
  std::size_t total_bound = 0;  // dim(K/M)(3 dim(K/M) + 1)
  bool total_ok = true;
  bool total_tight = false;

  bool passed() const { return derived_ok && total_ok; }
};

/// Derived-ideal bound against dim(L/Z(L)); when `pair_kernel` is given the
/// algebra is treated as the first member of a defining pair and the total
/// dimension bound is checked too.
DimBoundReport check_dim_bounds(const TriAlgebra& a,
                                const std::optional<Subspace>& pair_kernel = std::nullopt);

struct BoundRow {
  std::string algebra_class;
  std::uint64_t n;
  std::uint64_t derived_bound;
  std::uint64_t total_bound;
};

/// Lie, Leibniz, Associative, Diassociative and Triassociative rows for n = 1..n_max.
std::vector<BoundRow> bound_table(std::uint64_t n_max);

}  // namespace triassoc
