#include "triassoc/extensions.hpp"

#include <string>

#include "triassoc/random.hpp"

namespace triassoc {

namespace {

Matrix projection_onto_first(const Field& field, std::size_t n, std::size_t total) {
  Matrix p(field, n, total);
  for (std::size_t i = 0; i < n; ++i) p(i, i) = field.one();
  return p;
}

Matrix inclusion_of_first(const Field& field, std::size_t n, std::size_t total) {
  return projection_onto_first(field, n, total).transpose();
}

Subspace span_of_images(const Matrix& map, const Subspace& s) {
  std::vector<Vector> gens;
  gens.reserve(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) gens.push_back(map.apply(s.basis().row(r)));
  return Subspace::span(map.field(), map.rows(), gens);
}

}  // namespace

bool CentralExtension::kernel_is_central() const {
  return center(total).space.contains(kernel);
}

bool CentralExtension::is_stem() const {
  return kernel_is_central() && derived(total).space.contains(kernel);
}

bool CentralExtension::projection_is_homomorphism() const {
  const std::size_t m = total.dim();
  for (Op op : kOps) {
    for (std::size_t i = 0; i < m; ++i) {
      const Vector pi = projection.column(i);
      for (std::size_t j = 0; j < m; ++j) {
        if (projection.apply(total.basis_product(op, i, j)) !=
            base.multiply(pi, projection.column(j), op)) {
          return false;
        }
      }
    }
  }
  return true;
}

TriAlgebra extension_algebra(const TriAlgebra& b, const CochainTriple& f) {
  const std::size_t n = b.dim();
  const std::size_t k = f.coeff_dim();
  TriAlgebraBuilder builder(b.field(), n + k);
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector v = b.basis_product(op, i, j);
        const Vector fv = f.value(op, i, j);
        v.insert(v.end(), fv.begin(), fv.end());
        builder.set(op, i, j, v);
      }
    }
  }
  return builder.build();
}

CentralExtension build_central_extension(const TriAlgebra& b, std::size_t k,
                                         const CochainTriple& f) {
  require_valid(b);
  if (!f.base().same_as(b) || f.coeff_dim() != k) {
    throw DimensionMismatch("cocycle does not match the base algebra or coefficient dimension");
  }
  if (auto bad = cocycle_violations(f); !bad.empty()) {
    std::string list;
    for (int a : bad) list += (list.empty() ? "" : ",") + std::to_string(a);
    throw CocycleViolation("not a 2-cocycle; violated conditions: " + list, std::move(bad));
  }
  const std::size_t n = b.dim();
  const Field& field = b.field();
  std::vector<Vector> kernel_gens;
  for (std::size_t t = 0; t < k; ++t) kernel_gens.push_back(lin::unit_vector(field, n + k, n + t));
  return CentralExtension{extension_algebra(b, f),
                          Subspace::span(field, n + k, kernel_gens),
                          b,
                          projection_onto_first(field, n, n + k),
                          inclusion_of_first(field, n, n + k),
                          f};
}

void require_central(const TriAlgebra& l, const Subspace& z) {
  if (z.ambient_dim() != l.dim()) throw DimensionMismatch("subspace lives in the wrong space");
  const Subspace zl = center(l).space;
  for (std::size_t r = 0; r < z.dim(); ++r) {
    Vector v = z.basis_vector(r);
    if (!zl.contains(v)) throw NotCentral("subspace is not contained in the center", std::move(v));
  }
}

CentralExtension natural_extension(const TriAlgebra& l, const Subspace& z) {
  require_valid(l);
  require_central(l, z);
  Quotient q = quotient_algebra(l, AlgSubspace(l, z));
  CentralExtension ext{l, z, q.algebra, q.projection, q.section,
                       CochainTriple(q.algebra, z.dim())};
  ext.cocycle = section_cocycle(ext, ext.section);
  return ext;
}

CentralExtension stem_reduction(const CentralExtension& ext) {
  const Subspace in_derived = lin::intersection(ext.kernel, derived(ext.total).space);
  const Subspace e = lin::complement(in_derived, ext.kernel);
  if (e.dim() == 0) return ext;
  Quotient q = quotient_algebra(ext.total, AlgSubspace(ext.total, e));
  CentralExtension out{q.algebra,
                       span_of_images(q.projection, ext.kernel),
                       ext.base,
                       ext.projection * q.section,
                       q.projection * ext.section,
                       CochainTriple(ext.base, 0)};
  out.cocycle = section_cocycle(out, out.section);
  return out;
}

CentralExtension stem_extension_from_cocycles(const TriAlgebra& l,
                                              std::span<const CochainTriple> cocycles) {
  const CochainTriple f = stack_cochains(l, cocycles);
  return stem_reduction(build_central_extension(l, cocycles.size(), f));
}

Cover cover(const TriAlgebra& l) {
  const CohomologyResult r = h2(l, 1);
  Cover c{stem_extension_from_cocycles(l, r.h2_reps), 0};
  c.multiplier_dim = c.extension.kernel.dim();
  return c;
}

Subspace center_image(const CentralExtension& ext) {
  return span_of_images(ext.projection, center(ext.total).space);
}

AlgSubspace z_star(const TriAlgebra& l) {
  return AlgSubspace(l, center_image(cover(l).extension));
}

bool is_unicentral(const TriAlgebra& l) { return z_star(l).space == center(l).space; }

StemImageReport stem_center_image_check(const TriAlgebra& l, std::size_t trials,
                                        std::uint64_t seed) {
  Rng rng(seed);
  const Field& field = l.field();
  const std::size_t n = l.dim();
  const CohomologyResult r = h2(l, 1);
  const std::size_t h = r.h2_dim;

  StemImageReport rep;
  rep.center = center(l).space;
  rep.z_star = z_star(l).space;
  rep.unicentral = rep.z_star == rep.center;
  rep.z_star_in_center = rep.center.contains(rep.z_star);

  // Random bases of H² with random coboundaries added give other covers.
  auto random_cocycles = [&](std::size_t count) {
    const Matrix p = count == h ? rng.invertible(field, h) : rng.matrix(field, count, h);
    std::vector<CochainTriple> out;
    for (std::size_t s = 0; s < count; ++s) {
      CochainTriple f = coboundary(l, rng.matrix(field, 1, n));
      for (std::size_t t = 0; t < h; ++t) f = f + p(s, t) * r.h2_reps[t];
      out.push_back(std::move(f));
    }
    return out;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const auto fs = random_cocycles(h);
    rep.cover_images.push_back(center_image(stem_extension_from_cocycles(l, fs)));
    if (h > 1) {
      const auto count = static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(h) - 1));
      const auto ext = stem_extension_from_cocycles(l, random_cocycles(count));
      rep.partial_kernel_dims.push_back(ext.kernel.dim());
      rep.partial_images.push_back(center_image(ext));
    }
  }
  rep.trivial_image =
      center_image(natural_extension(l, Subspace::zero(field, n)));

  for (const auto& img : rep.cover_images) {
    if (!(img == rep.cover_images.front())) rep.covers_agree = false;
    if (!(img == rep.z_star)) rep.covers_equal_z_star = false;
  }
  for (const auto& img : rep.partial_images) {
    if (!img.contains(rep.z_star) || !rep.center.contains(img)) rep.partials_bracketed = false;
  }
  if (rep.unicentral) {
    auto all_center = [&](const std::vector<Subspace>& v) {
      for (const auto& img : v) {
        if (!(img == rep.center)) return false;
      }
      return true;
    };
    rep.final_theorem_holds = all_center(rep.cover_images) && all_center(rep.partial_images) &&
                              rep.trivial_image == rep.center;
  }
  rep.trivial_row_consistent = (rep.trivial_image == rep.z_star) == rep.unicentral;
  return rep;
}

Fingerprint fingerprint(const TriAlgebra& k) {
  const AlgSubspace d = derived(k);
  const Subspace z = center(k).space;
  return Fingerprint{k.dim(),
                     d.dim(),
                     z.dim(),
                     lin::intersection(d.space, z).dim(),
                     product_subspace(d, d).dim(),
                     h2(k, 1).h2_dim};
}

}  // namespace triassoc
