#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "triassoc/extensions.hpp"
#include "triassoc/random.hpp"

namespace triassoc::gen {

TriAlgebra abelian(const Field& field, std::size_t n);

/// K = L ⊕ M for the n-dimensional abelian L: basis x_1..x_n followed by
/// m_ij, s_ij, t_ij with x_i⊢x_j = m_ij, x_i⊣x_j = s_ij, x_i⊥x_j = t_ij.
TriAlgebra cover_abelian(const Field& field, std::size_t n);

/// Two-dimensional algebra whose only nonzero product is e₁⊢e₁ = e₂.
TriAlgebra vdash_square(const Field& field);

/// One-dimensional algebra with e·e = e for all three products.
TriAlgebra unit(const Field& field);

/// Associative algebra viewed as a trialgebra with ⊢ = ⊣ = ⊥.
TriAlgebra from_associative(const Field& field, std::size_t n, const std::vector<Scalar>& tensor,
                            std::string name = {});

/// Upper triangular 2x2 matrices on the basis e11, e12, e22.
TriAlgebra upper_triangular(const Field& field);

/// x F[x] / (x^{m+1}) on the basis x, x², ..., x^m.
TriAlgebra truncated_polynomial(const Field& field, std::size_t m);

/// Random nonzero element of Z²(b, F), as a combination of the basis of z2.
CochainTriple random_cocycle(const TriAlgebra& b, const Subspace& z2, Rng& rng);

/// Extension of b by k random scalar cocycles, each rejection-sampled to be
/// nonzero. The result is validated.
CentralExtension random_extension(const TriAlgebra& b, std::size_t k, Rng& rng);

/// change_basis with a random invertible matrix.
TriAlgebra random_basis_change(const TriAlgebra& a, Rng& rng);

/// Deterministic mixed corpus of validated algebras of dimension ≤ max_dim:
/// abelian, the named small algebras, direct sums, random extensions and
/// random basis changes.
std::vector<TriAlgebra> random_corpus(const Field& field, std::size_t count, std::size_t max_dim,
                                      std::uint64_t seed);

/// Central ideals to probe: 0, the full center, each center basis line, and
/// a few random lines and planes inside the center.
std::vector<Subspace> sample_central_ideals(const TriAlgebra& l, Rng& rng, std::size_t random_count);

}  // namespace triassoc::gen
