#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "triassoc/cohomology.hpp"

namespace triassoc {

/// A triple failed the cocycle conditions; carries the violated indices.
class CocycleViolation : public Error {
 public:
  CocycleViolation(const std::string& what, std::vector<int> axioms)
      : Error(what), axioms_(std::move(axioms)) {}
  const std::vector<int>& axioms() const { return axioms_; }

 private:
  std::vector<int> axioms_;
};

/// A subspace offered as a central ideal is not inside the center.
class NotCentral : public Error {
 public:
  NotCentral(const std::string& what, Vector offending)
      : Error(what), offending_(std::move(offending)) {}
  const Vector& offending() const { return offending_; }

 private:
  Vector offending_;
};

/// 0 → kernel → total → base → 0 with the kernel inside Z(total).
struct CentralExtension {
  TriAlgebra total;
  Subspace kernel;    // inside F^{dim total}
  TriAlgebra base;
  Matrix projection;  // dim base x dim total
  Matrix section;     // dim total x dim base, projection * section = 1
  CochainTriple cocycle;  // section cocycle, values in kernel coordinates

  bool kernel_is_central() const;
  bool is_stem() const;
  bool projection_is_homomorphism() const;
  std::size_t kernel_dim() const { return kernel.dim(); }
};

/// Underlying algebra B ⊕ F^k with (x,a)*(y,c) = (x*y, f_*(x,y)); no checks.
TriAlgebra extension_algebra(const TriAlgebra& b, const CochainTriple& f);

/// Throws CocycleViolation when f ∉ Z²(b, F^k).
CentralExtension build_central_extension(const TriAlgebra& b, std::size_t k,
                                         const CochainTriple& f);

/// 0 → Z → L → L/Z → 0 for a central ideal Z; throws NotCentral otherwise.
CentralExtension natural_extension(const TriAlgebra& l, const Subspace& z);

/// Throws NotCentral unless z ⊆ Z(l).
void require_central(const TriAlgebra& l, const Subspace& z);

/// Factors out a complement E of kernel ∩ total′ in the kernel, leaving a
/// stem extension.
CentralExtension stem_reduction(const CentralExtension& ext);

/// Stem extension obtained from the scalar cocycles `cocycles` stacked into
/// one vector-valued cocycle.
CentralExtension stem_extension_from_cocycles(const TriAlgebra& l,
                                              std::span<const CochainTriple> cocycles);

struct Cover {
  CentralExtension extension;
  std::size_t multiplier_dim = 0;
};

/// Extension by the H²(L, F) representatives, reduced to a stem extension.
Cover cover(const TriAlgebra& l);

/// Image of the cover's center in L.
AlgSubspace z_star(const TriAlgebra& l);
bool is_unicentral(const TriAlgebra& l);

/// ω(Z(E)) for a central extension ω: E → L.
Subspace center_image(const CentralExtension& ext);

struct StemImageReport {
  Subspace z_star;
  Subspace center;
  bool unicentral = false;
  std::vector<Subspace> cover_images;    // one per randomized maximal stem extension
  std::vector<Subspace> partial_images;  // smaller stem extensions
  std::vector<std::size_t> partial_kernel_dims;
  Subspace trivial_image;                // identity extension L → L

  bool covers_agree = true;
  bool covers_equal_z_star = true;
  bool z_star_in_center = true;
  bool partials_bracketed = true;    // Z* ⊆ ω(Z(E)) ⊆ Z(L)
  bool final_theorem_holds = true;   // unicentral ⇒ every image equals Z(L)
  bool trivial_row_consistent = true;  // trivial image = Z* iff unicentral

  bool passed() const {
    return covers_agree && covers_equal_z_star && z_star_in_center && partials_bracketed &&
           final_theorem_holds && trivial_row_consistent;
  }
};

StemImageReport stem_center_image_check(const TriAlgebra& l, std::size_t trials,
                                        std::uint64_t seed = 1);

/// Isomorphism invariants of an algebra used to compare covers.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t derived_dim = 0;
  std::size_t center_dim = 0;
  std::size_t derived_center_dim = 0;
  std::size_t derived_square_dim = 0;  // dim K′◊K′
  std::size_t h2_dim = 0;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const TriAlgebra& k);

}  // namespace triassoc
