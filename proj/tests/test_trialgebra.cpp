#include <doctest.h>

#include "support/oracles.hpp"
#include "triassoc/generators.hpp"

using namespace triassoc;

namespace {

const Field Q = Field::rationals();

Vector e(std::size_t n, std::size_t i) { return lin::unit_vector(Q, n, i); }

Subspace span1(std::size_t n, std::size_t i) { return Subspace::span(Q, n, {e(n, i)}); }

}  // namespace

TEST_CASE("axiom numbering follows the printed list") {
  for (int i = 1; i <= 11; ++i) CHECK(axiom_text(i) == oracle::kPrinted[i - 1]);
  for (int i : kDiassociativeAxioms) {
    const auto [a, b, c, d] = oracle::parse_identity(oracle::kPrinted[i - 1]);
    for (int op : {a, b, c, d}) CHECK(op != 2);
  }
}

TEST_CASE("validate_axioms on the named algebras") {
  CHECK(validate_axioms(gen::abelian(Q, 3)).passed());
  CHECK(validate_axioms(gen::cover_abelian(Q, 1)).passed());
  CHECK(validate_axioms(gen::vdash_square(Q)).passed());
  CHECK(validate_axioms(gen::unit(Q)).passed());
  CHECK(validate_axioms(gen::upper_triangular(Q)).passed());
  CHECK(validate_axioms(gen::truncated_polynomial(Q, 4)).passed());

  // only e1 ⊢ e2 = e1
  const TriAlgebra bad = TriAlgebraBuilder(Q, 2).set(Op::Vdash, 0, 1, 0, Q.one()).build();
  const ValidationReport rep = validate_axioms(bad);
  REQUIRE_FALSE(rep.passed());
  bool found = false;
  for (const auto& v : rep.violations) {
    if (v.axiom == 1 && v.triple == std::array<std::size_t, 3>{0, 1, 1}) {
      found = true;
      CHECK(v.defect == e(2, 0));
    }
  }
  CHECK(found);
  const auto idx = rep.violated_axioms();
  CHECK(std::set<int>(idx.begin(), idx.end()) == oracle::violated(oracle::dense(bad)));
}

TEST_CASE("axiom report agrees with the printed-identity oracle on random tensors") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    TriAlgebraBuilder b(Q, 2);
    for (Op op : kOps)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          if (rng.uniform(0, 3) == 0) b.set(op, i, j, rng.vector(Q, 2, -1, 1));
    const TriAlgebra a = b.build();
    const auto idx = validate_axioms(a).violated_axioms();
    CHECK(std::set<int>(idx.begin(), idx.end()) == oracle::violated(oracle::dense(a)));
  }
}

TEST_CASE("malformed tensors are rejected") {
  TriAlgebra::Tensors t;
  for (auto& x : t) x.assign(7, Q.zero());
  CHECK_THROWS_AS(TriAlgebra(Q, 2, t), MalformedAlgebra);
}

TEST_CASE("multiply") {
  const TriAlgebra k = gen::cover_abelian(Q, 1);
  CHECK(multiply(k, e(4, 0), e(4, 0), Op::Vdash) == e(4, 1));
  CHECK(multiply(k, e(4, 0), e(4, 0), Op::Dashv) == e(4, 2));
  CHECK(multiply(k, e(4, 0), e(4, 0), Op::Perp) == e(4, 3));
  CHECK(lin::is_zero(multiply(gen::abelian(Q, 3), e(3, 0), e(3, 2), Op::Perp)));

  Rng rng(2);
  const TriAlgebra a = gen::random_corpus(Q, 1, 5, 9).front();
  const std::size_t n = a.dim();
  for (Op op : kOps) {
    const Vector x = rng.vector(Q, n), y = rng.vector(Q, n), z = rng.vector(Q, n);
    const Scalar two = Q.from_int(2);
    CHECK(multiply(a, lin::scale(two, x), lin::add(y, z), op) ==
          lin::add(lin::scale(two, multiply(a, x, y, op)), lin::scale(two, multiply(a, x, z, op))));
  }
}

TEST_CASE("derived ideal and center") {
  const TriAlgebra k = gen::cover_abelian(Q, 1);
  const Subspace m = Subspace::span(Q, 4, {e(4, 1), e(4, 2), e(4, 3)});
  CHECK(derived(k).space == m);
  CHECK(center(k).space == m);
  CHECK(product_subspace(derived(k), AlgSubspace(k, Subspace::full(Q, 4))).dim() == 0);

  const TriAlgebra d2 = gen::vdash_square(Q);
  CHECK(derived(d2).space == span1(2, 1));
  CHECK(center(d2).space == span1(2, 1));
  CHECK(derived(gen::abelian(Q, 3)).dim() == 0);
  CHECK(center(gen::abelian(Q, 3)).dim() == 3);
  CHECK(product_subspace(AlgSubspace(d2, Subspace::zero(Q, 2)), AlgSubspace(d2, Subspace::full(Q, 2))).dim() == 0);

  CHECK(is_ideal(AlgSubspace(d2, span1(2, 1))));
  CHECK_FALSE(is_ideal(AlgSubspace(d2, span1(2, 0))));
}

TEST_CASE("center from the definition") {
  for (const TriAlgebra& a : gen::random_corpus(Q, 12, 5, 77)) {
    const Subspace z = center(a).space;
    const std::size_t n = a.dim();
    for (std::size_t r = 0; r < z.dim(); ++r)
      for (std::size_t i = 0; i < n; ++i)
        for (Op op : kOps) {
          CHECK(lin::is_zero(multiply(a, z.basis_vector(r), e(n, i), op)));
          CHECK(lin::is_zero(multiply(a, e(n, i), z.basis_vector(r), op)));
        }
    // anything outside fails for some product
    const Subspace outside = lin::complement(z, Subspace::full(Q, n));
    for (std::size_t r = 0; r < outside.dim(); ++r) {
      bool kills = true;
      for (std::size_t i = 0; i < n; ++i)
        for (Op op : kOps)
          kills = kills && lin::is_zero(multiply(a, outside.basis_vector(r), e(n, i), op)) &&
                  lin::is_zero(multiply(a, e(n, i), outside.basis_vector(r), op));
      CHECK_FALSE(kills);
    }
  }
}

TEST_CASE("structural properties over a random corpus") {
  Rng rng(8);
  for (const TriAlgebra& a : gen::random_corpus(Q, 25, 6, 2024)) {
    CHECK(validate_axioms(a).passed());
    for (Op op : kOps) CHECK(is_associative(a, op));
    CHECK(validate_axioms(a, kDiassociativeAxioms).passed());
    CHECK(is_ideal(center(a)));
    CHECK(is_ideal(derived(a)));

    const TriAlgebra b = change_basis(a, rng.invertible(Q, a.dim()));
    CHECK(validate_axioms(b).passed());
    CHECK(center(b).dim() == center(a).dim());
    CHECK(derived(b).dim() == derived(a).dim());

    const Quotient q = quotient_algebra(a, derived(a));
    CHECK(validate_axioms(q.algebra).passed());
    CHECK(derived(q.algebra).dim() == 0);

    // monotonicity of ◊
    const AlgSubspace full(a, Subspace::full(Q, a.dim()));
    CHECK(product_subspace(full, full).space.contains(product_subspace(center(a), full).space));
    CHECK(product_subspace(full, full).space.contains(product_subspace(derived(a), derived(a)).space));
  }
}

TEST_CASE("quotients") {
  const TriAlgebra k = gen::cover_abelian(Q, 1);
  const Quotient q = quotient_algebra(k, center(k));
  CHECK(q.algebra == gen::abelian(Q, 1));
  CHECK(q.projection * q.section == Matrix::identity(Q, 1));

  const TriAlgebra d2 = gen::vdash_square(Q);
  CHECK(quotient_algebra(d2, AlgSubspace(d2, span1(2, 1))).algebra == gen::abelian(Q, 1));
  CHECK(quotient_algebra(d2, AlgSubspace(d2, Subspace::zero(Q, 2))).algebra == d2);
  CHECK_THROWS_AS(quotient_algebra(d2, AlgSubspace(d2, span1(2, 0))), NotAnIdeal);
}

TEST_CASE("homomorphisms to the field") {
  CHECK(hom_to_field(gen::abelian(Q, 3), 1).dim() == 3);
  CHECK(hom_to_field(gen::vdash_square(Q), 1).dim() == 1);
  CHECK(hom_to_field(gen::cover_abelian(Q, 1), 1).dim() == 1);
  CHECK(hom_to_field(gen::vdash_square(Q), 3).dim() == 3);
}

TEST_CASE("dimension bounds") {
  const TriAlgebra k = gen::cover_abelian(Q, 1);
  const DimBoundReport r = check_dim_bounds(k, center(k).space);
  CHECK(r.central_quotient_dim == 1);
  CHECK(r.derived_dim == 3);
  CHECK(r.derived_bound == 3);
  CHECK(r.derived_tight);
  CHECK(r.pair_is_defining);
  CHECK(r.total_tight);
  CHECK(r.passed());

  const DimBoundReport ab = check_dim_bounds(gen::abelian(Q, 2));
  CHECK(ab.derived_dim == 0);
  CHECK(ab.derived_bound == 0);
  CHECK(ab.passed());

  for (const TriAlgebra& a : gen::random_corpus(Q, 50, 6, 5)) CHECK(check_dim_bounds(a).passed());
}

TEST_CASE("bound table") {
  const auto rows = bound_table(2);
  REQUIRE(rows.size() == 10);
  auto find = [&](const std::string& cls, std::uint64_t n) {
    for (const auto& r : rows)
      if (r.algebra_class == cls && r.n == n) return std::pair{r.derived_bound, r.total_bound};
    FAIL("row missing");
    return std::pair<std::uint64_t, std::uint64_t>{};
  };
  CHECK(find("Triassociative", 1) == std::pair<std::uint64_t, std::uint64_t>{3, 4});
  CHECK(find("Triassociative", 2) == std::pair<std::uint64_t, std::uint64_t>{12, 14});
  CHECK(find("Lie", 1) == std::pair<std::uint64_t, std::uint64_t>{0, 1});
}

TEST_CASE("prime fields") {
  const Field f5 = Field::prime(5);
  const TriAlgebra k = gen::cover_abelian(f5, 2);
  CHECK(validate_axioms(k).passed());
  CHECK(center(k).dim() == 12);
  CHECK(derived(k).dim() == 12);
  CHECK_THROWS_AS(direct_sum(gen::abelian(f5, 1), gen::abelian(Q, 1)), FieldMismatch);
}
