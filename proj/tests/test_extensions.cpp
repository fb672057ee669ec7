#include <doctest.h>

#include "support/oracles.hpp"
#include "triassoc/generators.hpp"

using namespace triassoc;

namespace {

const Field Q = Field::rationals();

Subspace line(std::size_t n, std::size_t i) { return Subspace::span(Q, n, {lin::unit_vector(Q, n, i)}); }

}  // namespace

TEST_CASE("extensions built from cocycles") {
  const TriAlgebra d2 = gen::vdash_square(Q);
  const CohomologyResult h = h2(d2, 1);
  const std::vector<CochainTriple> parts = {h.h2_reps[0], h.h2_reps[1]};
  const CentralExtension ext = build_central_extension(d2, 2, stack_cochains(d2, parts));
  CHECK(ext.total.dim() == 4);
  CHECK(validate_axioms(ext.total).passed());
  CHECK(ext.kernel_is_central());
  CHECK(ext.projection_is_homomorphism());
  CHECK(ext.is_stem());
  CHECK(ext.projection * ext.section == Matrix::identity(Q, 2));

  // f(e1, e2) ≠ 0 clashes with e1⊢e1 = e2
  CochainTriple bad(d2, 1);
  bad.set(Op::Vdash, 0, 1, std::vector<Scalar>{Q.one()});
  try {
    build_central_extension(d2, 1, bad);
    FAIL("accepted a non-cocycle");
  } catch (const CocycleViolation& err) {
    const auto expected = oracle::violated(oracle::extension(oracle::dense(d2), bad));
    CHECK(std::set<int>(err.axioms().begin(), err.axioms().end()) == expected);
    CHECK_FALSE(err.axioms().empty());
  }
}

TEST_CASE("natural extension and centrality") {
  const TriAlgebra d2 = gen::vdash_square(Q);
  const CentralExtension ext = natural_extension(d2, line(2, 1));
  CHECK(ext.base == gen::abelian(Q, 1));
  CHECK(ext.kernel_dim() == 1);
  CHECK(ext.is_stem());
  CHECK(ext.cocycle.value(Op::Vdash, 0, 0) == std::vector<Scalar>{Q.one()});

  try {
    natural_extension(d2, line(2, 0));
    FAIL("accepted a non-central ideal");
  } catch (const NotCentral& err) {
    CHECK(err.offending() == lin::unit_vector(Q, 2, 0));
  }
  CHECK_NOTHROW(require_central(gen::abelian(Q, 3), Subspace::full(Q, 3)));

  // split extensions are not stem
  const TriAlgebra s = direct_sum(d2, gen::abelian(Q, 1));
  CHECK_FALSE(natural_extension(s, line(3, 2)).is_stem());
}

TEST_CASE("stem reduction") {
  const TriAlgebra s = direct_sum(gen::vdash_square(Q), gen::abelian(Q, 1));
  const CentralExtension ext = natural_extension(s, Subspace::span(Q, 3, {lin::unit_vector(Q, 3, 1), lin::unit_vector(Q, 3, 2)}));
  const CentralExtension reduced = stem_reduction(ext);
  CHECK(reduced.is_stem());
  CHECK(reduced.kernel_dim() == 1);
  CHECK(reduced.total.dim() == 2);
  CHECK(reduced.base == ext.base);
  CHECK(reduced.projection * reduced.section == Matrix::identity(Q, reduced.base.dim()));
  CHECK(reduced.kernel_is_central());
  CHECK(reduced.projection_is_homomorphism());
}

TEST_CASE("covers of abelian algebras") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Cover c = cover(gen::abelian(Q, n));
    CHECK(c.multiplier_dim == 3 * n * n);
    CHECK(c.extension.total.dim() == n + 3 * n * n);
    CHECK(c.extension.is_stem());
    CHECK(validate_axioms(c.extension.total).passed());
    CHECK(fingerprint(c.extension.total) == fingerprint(gen::cover_abelian(Q, n)));
    CHECK(derived(c.extension.total).space == c.extension.kernel);
  }
}

TEST_CASE("covers of the small named algebras") {
  const Cover d = cover(gen::vdash_square(Q));
  CHECK(d.multiplier_dim == 2);
  CHECK(d.extension.total.dim() == 4);
  CHECK(cover(gen::unit(Q)).multiplier_dim == 0);
  CHECK(cover(gen::upper_triangular(Q)).multiplier_dim == 0);

  CHECK(z_star(gen::vdash_square(Q)).space == line(2, 1));
  CHECK(is_unicentral(gen::vdash_square(Q)));
  CHECK(z_star(gen::abelian(Q, 2)).dim() == 0);
  CHECK_FALSE(is_unicentral(gen::abelian(Q, 2)));
}

TEST_CASE("multiplier is an invariant of the cover") {
  Rng rng(13);
  for (const TriAlgebra& l : gen::random_corpus(Q, 10, 4, 55)) {
    const Cover a = cover(l);
    const Cover b = cover(gen::random_basis_change(l, rng));
    CHECK(a.multiplier_dim == b.multiplier_dim);
    CHECK(fingerprint(a.extension.total) == fingerprint(b.extension.total));
    CHECK(a.extension.kernel_is_central());
    CHECK(a.extension.is_stem());
    // the kernel of a cover lies in L*′ ∩ Z(L*)
    CHECK(derived(a.extension.total).space.contains(a.extension.kernel));
    CHECK(center(a.extension.total).space.contains(a.extension.kernel));
    // Z* is inside the center
    CHECK(center(l).space.contains(z_star(l).space));
  }
}

TEST_CASE("center images of stem extensions") {
  for (const TriAlgebra& l : {gen::vdash_square(Q), gen::abelian(Q, 2), gen::cover_abelian(Q, 1)}) {
    const StemImageReport rep = stem_center_image_check(l, 4, 3);
    CHECK(rep.passed());
    CHECK(rep.cover_images.size() == 4);
    for (const auto& img : rep.cover_images) CHECK(img == rep.z_star);
  }
  for (const TriAlgebra& l : gen::random_corpus(Q, 8, 4, 101)) CHECK(stem_center_image_check(l, 2, 9).passed());
}

TEST_CASE("prime field covers") {
  const Field f5 = Field::prime(5);
  const Cover c = cover(gen::abelian(f5, 2));
  CHECK(c.multiplier_dim == 12);
  CHECK(c.extension.is_stem());
  CHECK(is_unicentral(gen::vdash_square(f5)));
}
