#include "triassoc/sequences.hpp"

namespace triassoc {

namespace {

Matrix reshape(const Field& field, std::span<const Scalar> v, std::size_t rows, std::size_t cols) {
  return Matrix(field, rows, cols, Vector(v.begin(), v.end()));
}

Vector vectorize(const Matrix& m) { return m.entries(); }

Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

// Functionals on F^n vanishing on s.
Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.field(), s.ambient_dim());
  return lin::kernel(s.basis());
}

bool exact(const LinearMap& in, const LinearMap& out) {
  return lin::kernel(out.matrix) == lin::image(in.matrix);
}

bool composite_zero(const LinearMap& in, const LinearMap& out) {
  return (out.matrix * in.matrix).is_zero();
}

// Everything the maps share: the natural extension 0 → Z → L → L/Z → 0.
struct Setting {
  TriAlgebra l;
  Subspace z;
  std::size_t k;
  CentralExtension ext;

  const TriAlgebra& quotient() const { return ext.base; }
  const Field& field() const { return l.field(); }
};

Setting make_setting(const TriAlgebra& l, const AlgSubspace& z, std::size_t k) {
  if (!z.parent.same_as(l)) throw DimensionMismatch("subspace belongs to a different algebra");
  return Setting{l, z.space, k, natural_extension(l, z.space)};
}

LinearMap inf1_map(const Setting& s, const Subspace& hom_q, const Subspace& hom_l) {
  const std::size_t q = s.quotient().dim();
  std::vector<Vector> cols;
  for (std::size_t r = 0; r < hom_q.dim(); ++r) {
    const Matrix chi = reshape(s.field(), hom_q.basis().row(r), s.k, q);
    cols.push_back(hom_l.coordinates(vectorize(chi * s.ext.projection)));
  }
  return {from_columns(s.field(), hom_l.dim(), cols)};
}

LinearMap res_map(const Setting& s, const Subspace& hom_l) {
  const Matrix iota = s.z.inclusion();
  std::vector<Vector> cols;
  for (std::size_t r = 0; r < hom_l.dim(); ++r) {
    const Matrix phi = reshape(s.field(), hom_l.basis().row(r), s.k, s.l.dim());
    cols.push_back(vectorize(phi * iota));
  }
  return {from_columns(s.field(), s.k * s.z.dim(), cols)};
}

LinearMap tra_map(const Setting& s, const CohomologyResult& h2_q, const Matrix& section) {
  const std::size_t dz = s.z.dim();
  const CochainTriple f = section_cocycle(s.ext, section);
  std::vector<Vector> cols;
  for (std::size_t t = 0; t < s.k; ++t) {
    for (std::size_t b = 0; b < dz; ++b) {
      Matrix chi(s.field(), s.k, dz);
      chi(t, b) = s.field().one();
      cols.push_back(h2_q.class_coordinates(f.compose(chi)));
    }
  }
  return {from_columns(s.field(), h2_q.h2_dim, cols)};
}

LinearMap inf2_map(const Setting& s, const CohomologyResult& h2_q, const CohomologyResult& h2_l) {
  std::vector<Vector> cols;
  for (const auto& rep : h2_q.h2_reps) {
    cols.push_back(h2_l.class_coordinates(rep.pullback(s.l, s.ext.projection)));
  }
  return {from_columns(s.field(), h2_l.h2_dim, cols)};
}

LinearMap delta_from(const AlgSubspace& z, const CohomologyResult& h2_l) {
  std::vector<Vector> cols;
  for (const auto& rep : h2_l.h2_reps) cols.push_back(delta_of(rep, z));
  return {from_columns(z.parent.field(), tensor_block_dim(z.parent, z), cols)};
}

}  // namespace

LinearMap inf1(const TriAlgebra& l, const AlgSubspace& z, std::size_t k) {
  const Setting s = make_setting(l, z, k);
  return inf1_map(s, hom_to_field(s.quotient(), k), hom_to_field(l, k));
}

LinearMap res(const TriAlgebra& l, const AlgSubspace& z, std::size_t k) {
  const Setting s = make_setting(l, z, k);
  return res_map(s, hom_to_field(l, k));
}

LinearMap tra(const TriAlgebra& l, const AlgSubspace& z, std::size_t k,
              const std::optional<Matrix>& section) {
  const Setting s = make_setting(l, z, k);
  return tra_map(s, h2(s.quotient(), k), section ? *section : s.ext.section);
}

LinearMap inf2(const TriAlgebra& l, const AlgSubspace& z, std::size_t k) {
  const Setting s = make_setting(l, z, k);
  return inf2_map(s, h2(s.quotient(), k), h2(l, k));
}

std::size_t tensor_block_dim(const TriAlgebra& l, const AlgSubspace& z) {
  return 6 * (l.dim() - derived(l).dim()) * z.dim();
}

Vector delta_of(const CochainTriple& f, const AlgSubspace& z) {
  const TriAlgebra& l = f.base();
  if (f.coeff_dim() != 1) throw DimensionMismatch("δ is defined for scalar cocycles");
  if (!z.parent.same_as(l)) throw DimensionMismatch("subspace belongs to a different algebra");
  require_central(l, z.space);
  const Subspace cosets = lin::complement(derived(l).space, Subspace::full(l.field(), l.dim()));
  const std::size_t p = cosets.dim();
  const std::size_t dz = z.dim();
  Vector out = lin::zero_vector(l.field(), 6 * p * dz);
  for (Op op : kOps) {
    const std::size_t offset = static_cast<std::size_t>(op) * 2 * p * dz;
    for (std::size_t a = 0; a < p; ++a) {
      const Vector u = cosets.basis_vector(a);
      for (std::size_t b = 0; b < dz; ++b) {
        const Vector zb = z.space.basis_vector(b);
        out[offset + a * dz + b] = f.evaluate(op, u, zb)[0];
        out[offset + p * dz + b * p + a] = f.evaluate(op, zb, u)[0];
      }
    }
  }
  return out;
}

LinearMap delta_map(const TriAlgebra& l, const AlgSubspace& z) {
  if (!z.parent.same_as(l)) throw DimensionMismatch("subspace belongs to a different algebra");
  require_central(l, z.space);
  return delta_from(z, h2(l, 1));
}

FiveTermReport verify_five_term(const TriAlgebra& l, const AlgSubspace& z, std::size_t k) {
  const Setting s = make_setting(l, z, k);
  const Subspace hom_q = hom_to_field(s.quotient(), k);
  const Subspace hom_l = hom_to_field(l, k);
  const CohomologyResult h2_q = h2(s.quotient(), k);
  const CohomologyResult h2_l = h2(l, k);
  const LinearMap maps[4] = {inf1_map(s, hom_q, hom_l), res_map(s, hom_l),
                             tra_map(s, h2_q, s.ext.section), inf2_map(s, h2_q, h2_l)};

  FiveTermReport rep;
  rep.dims = {hom_q.dim(), hom_l.dim(), k * s.z.dim(), h2_q.h2_dim, h2_l.h2_dim};
  for (std::size_t i = 0; i < 4; ++i) rep.ranks[i] = maps[i].rank();
  rep.inf1_injective = rep.ranks[0] == rep.dims[0];
  rep.exact_at_hom_l = exact(maps[0], maps[1]);
  rep.exact_at_hom_z = exact(maps[1], maps[2]);
  rep.exact_at_h2_quotient = exact(maps[2], maps[3]);
  rep.composites_zero = composite_zero(maps[0], maps[1]) && composite_zero(maps[1], maps[2]) &&
                        composite_zero(maps[2], maps[3]);
  return rep;
}

InfDeltaReport verify_inf_delta(const TriAlgebra& l, const AlgSubspace& z) {
  const Setting s = make_setting(l, z, 1);
  const CohomologyResult h2_q = h2(s.quotient(), 1);
  const CohomologyResult h2_l = h2(l, 1);
  const LinearMap in = inf2_map(s, h2_q, h2_l);
  const LinearMap delta = delta_from(z, h2_l);

  InfDeltaReport rep;
  rep.h2_dim = h2_l.h2_dim;
  rep.block_dim = delta.codomain_dim();
  rep.inf2_rank = in.rank();
  rep.delta_rank = delta.rank();
  rep.composite_zero = composite_zero(in, delta);
  rep.exact = exact(in, delta);
  return rep;
}

TraImageReport tra_image_theorem(const TriAlgebra& l, const AlgSubspace& z) {
  TraImageReport rep;
  rep.tra_rank = tra(l, z, 1).rank();
  rep.derived_center_dim = lin::intersection(derived(l).space, z.space).dim();
  return rep;
}

EquivalenceReport theorem_equivalence(const TriAlgebra& l, const AlgSubspace& z) {
  const Setting s = make_setting(l, z, 1);
  const CohomologyResult h2_q = h2(s.quotient(), 1);
  const CohomologyResult h2_l = h2(l, 1);

  EquivalenceReport rep;
  rep.h2_l = h2_l.h2_dim;
  rep.h2_quotient = h2_q.h2_dim;
  rep.derived_center_dim = lin::intersection(derived(l).space, z.space).dim();
  rep.delta_trivial = delta_from(z, h2_l).is_zero();
  rep.inf2_surjective = inf2_map(s, h2_q, h2_l).rank() == h2_l.h2_dim;
  rep.multiplier_relation = rep.h2_l + rep.derived_center_dim == rep.h2_quotient;
  rep.inside_z_star = z_star(l).space.contains(z.space);
  return rep;
}

StallingsReport stallings_check(const TriAlgebra& l, const AlgSubspace& z) {
  const Setting s = make_setting(l, z, 1);
  const Field& field = l.field();
  const std::size_t n = l.dim();
  const Subspace d = derived(l).space;
  const Subspace d_plus_z = lin::sum(d, z.space);
  const Subspace hom_l = hom_to_field(l, 1);
  const Subspace hom_top = annihilator(d_plus_z);
  const CohomologyResult h2_q = h2(s.quotient(), 1);
  const CohomologyResult h2_l = h2(l, 1);

  std::vector<Vector> cols;
  for (std::size_t r = 0; r < hom_top.dim(); ++r) {
    cols.push_back(hom_l.coordinates(hom_top.basis_vector(r)));
  }
  const LinearMap top{from_columns(field, hom_l.dim(), cols)};
  const LinearMap restriction = res_map(s, hom_l);
  const LinearMap transgression = tra_map(s, h2_q, s.ext.section);
  const LinearMap inflation = inf2_map(s, h2_q, h2_l);

  StallingsReport rep;
  rep.dims = {h2_l.h2_dim, h2_q.h2_dim, z.dim(), n - d.dim(), n - d_plus_z.dim()};
  rep.ranks = {inflation.rank(), transgression.rank(), restriction.rank(), rep.dims[4]};
  rep.first_injective = top.rank() == hom_top.dim();
  rep.exact_at_hom_abelianization = exact(top, restriction);
  rep.exact_at_hom_z = exact(restriction, transgression);
  rep.exact_at_h2_quotient = exact(transgression, inflation);
  rep.dimension_identities = rep.ranks[0] + rep.ranks[1] == rep.dims[1] &&
                             rep.ranks[1] + rep.ranks[2] == rep.dims[2] &&
                             rep.ranks[2] + rep.ranks[3] == rep.dims[3];
  return rep;
}

}  // namespace triassoc
