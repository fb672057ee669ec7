#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "triassoc/extensions.hpp"

namespace triassoc {

/// Matrix of a linear map between coordinate spaces (codomain x domain).
///
/// Hom spaces use coordinates relative to their canonical subspace basis;
/// H² spaces use coset coordinates relative to the stored B² complement;
/// Hom(Z, F^k) uses the k x dim Z matrices vectorized row-major.
struct LinearMap {
  Matrix matrix;

  std::size_t domain_dim() const { return matrix.cols(); }
  std::size_t codomain_dim() const { return matrix.rows(); }
  std::size_t rank() const { return lin::rank(matrix); }
  bool is_zero() const { return matrix.is_zero(); }
};

LinearMap inf1(const TriAlgebra& l, const AlgSubspace& z, std::size_t k);
LinearMap res(const TriAlgebra& l, const AlgSubspace& z, std::size_t k);
/// Uses the quotient's pivot section unless `section` (dim L x dim L/Z,
/// right inverse of the canonical projection) is given.
LinearMap tra(const TriAlgebra& l, const AlgSubspace& z, std::size_t k,
              const std::optional<Matrix>& section = std::nullopt);
LinearMap inf2(const TriAlgebra& l, const AlgSubspace& z, std::size_t k);

/// Dimension of the block space (L/L′⊗Z ⊕ Z⊗L/L′)³.
std::size_t tensor_block_dim(const TriAlgebra& l, const AlgSubspace& z);

/// H²(L, F) → (L/L′⊗Z ⊕ Z⊗L/L′)³.
///
/// Block order: product, then f(u_a, z_b) at a·dim Z + b, then f(z_b, u_a)
/// at p·dim Z + b·p + a, where u_a runs over the coset basis of L/L′ (p of
/// them) and z_b over the basis of Z.
LinearMap delta_map(const TriAlgebra& l, const AlgSubspace& z);
/// δ evaluated on an arbitrary scalar cocycle (not just representatives).
Vector delta_of(const CochainTriple& f, const AlgSubspace& z);

struct FiveTermReport {
  /// Hom(L/Z,A), Hom(L,A), Hom(Z,A), H²(L/Z,A), H²(L,A).
  std::array<std::size_t, 5> dims{};
  /// Inf₁, Res, Tra, Inf₂.
  std::array<std::size_t, 4> ranks{};
  bool inf1_injective = false;
  bool exact_at_hom_l = false;
  bool exact_at_hom_z = false;
  bool exact_at_h2_quotient = false;
  bool composites_zero = false;

  bool passed() const {
    return inf1_injective && exact_at_hom_l && exact_at_hom_z && exact_at_h2_quotient &&
           composites_zero;
  }
};

FiveTermReport verify_five_term(const TriAlgebra& l, const AlgSubspace& z, std::size_t k);

struct InfDeltaReport {
  std::size_t h2_dim = 0;
  std::size_t block_dim = 0;
  std::size_t inf2_rank = 0;
  std::size_t delta_rank = 0;
  bool composite_zero = false;
  bool exact = false;  // im Inf₂ = ker δ

  bool passed() const { return composite_zero && exact; }
};

InfDeltaReport verify_inf_delta(const TriAlgebra& l, const AlgSubspace& z);

struct TraImageReport {
  std::size_t tra_rank = 0;
  std::size_t derived_center_dim = 0;  // dim(L′ ∩ Z)

  bool passed() const { return tra_rank == derived_center_dim; }
};

TraImageReport tra_image_theorem(const TriAlgebra& l, const AlgSubspace& z);

struct EquivalenceReport {
  bool delta_trivial = false;       // (1)
  bool inf2_surjective = false;     // (2), dual form
  bool multiplier_relation = false;  // (3) h2(L) + dim(L′∩Z) = h2(L/Z)
  bool inside_z_star = false;       // (4)
  std::size_t h2_l = 0;
  std::size_t h2_quotient = 0;
  std::size_t derived_center_dim = 0;

  bool agree() const {
    return delta_trivial == inf2_surjective && inf2_surjective == multiplier_relation &&
           multiplier_relation == inside_z_star;
  }
};

EquivalenceReport theorem_equivalence(const TriAlgebra& l, const AlgSubspace& z);

struct StallingsReport {
  /// M(L), M(L/Z), Z, L/L′, L/(Z+L′).
  std::array<std::size_t, 5> dims{};
  /// M(L)→M(L/Z), M(L/Z)→Z, Z→L/L′, L/L′→L/(Z+L′), read off the dual maps.
  std::array<std::size_t, 4> ranks{};
  bool first_injective = false;
  bool exact_at_hom_abelianization = false;
  bool exact_at_hom_z = false;
  bool exact_at_h2_quotient = false;
  /// rank-nullity at the Stallings nodes M(L/Z), Z and L/L′.
  bool dimension_identities = false;

  bool passed() const {
    return first_injective && exact_at_hom_abelianization && exact_at_hom_z &&
           exact_at_h2_quotient && dimension_identities;
  }
};

StallingsReport stallings_check(const TriAlgebra& l, const AlgSubspace& z);

}  // namespace triassoc
