#include "triassoc/generators.hpp"

#include <algorithm>
#include <string>

namespace triassoc::gen {

TriAlgebra abelian(const Field& field, std::size_t n) {
  return TriAlgebra::abelian(field, n, "abelian" + std::to_string(n));
}

TriAlgebra cover_abelian(const Field& field, std::size_t n) {
  const std::size_t dim = n + 3 * n * n;
  TriAlgebraBuilder b(field, dim);
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        b.set(op, i, j, n + (static_cast<std::size_t>(op) * n + i) * n + j, field.one());
      }
    }
  }
  return b.name("cover-abelian" + std::to_string(n)).build();
}

TriAlgebra vdash_square(const Field& field) {
  return TriAlgebraBuilder(field, 2).set(Op::Vdash, 0, 0, 1, field.one()).name("vdash-square").build();
}

TriAlgebra unit(const Field& field) {
  TriAlgebraBuilder b(field, 1);
  for (Op op : kOps) b.set(op, 0, 0, 0, field.one());
  return b.name("unit").build();
}

TriAlgebra from_associative(const Field& field, std::size_t n, const std::vector<Scalar>& tensor,
                            std::string name) {
  return TriAlgebra(field, n, {tensor, tensor, tensor}, std::move(name));
}

TriAlgebra upper_triangular(const Field& field) {
  // e11 = 0, e12 = 1, e22 = 2; e_ab e_cd = [b = c] e_ad.
  const std::size_t idx[2][2] = {{0, 1}, {0, 2}};  // [1][0] unused
  std::vector<Scalar> t(27, field.zero());
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = a; b < 2; ++b) {
      for (std::size_t d = b; d < 2; ++d) t[(idx[a][b] * 3 + idx[b][d]) * 3 + idx[a][d]] = field.one();
    }
  }
  return from_associative(field, 3, t, "upper-triangular");
}

TriAlgebra truncated_polynomial(const Field& field, std::size_t m) {
  std::vector<Scalar> t(m * m * m, field.zero());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; i + j + 1 < m; ++j) t[(i * m + j) * m + i + j + 1] = field.one();
  }
  return from_associative(field, m, t, "truncated-poly" + std::to_string(m));
}

CochainTriple random_cocycle(const TriAlgebra& b, const Subspace& z2, Rng& rng) {
  while (true) {
    const Vector c = rng.vector(b.field(), z2.dim(), -2, 2);
    if (lin::is_zero(c)) continue;
    return CochainTriple(b, 1, z2.combine(c));
  }
}

CentralExtension random_extension(const TriAlgebra& b, std::size_t k, Rng& rng) {
  const Subspace z2 = z2_space(b, 1);
  if (z2.dim() == 0 && k > 0) {
    // Only the zero cocycle exists; the extension is a direct sum.
    return build_central_extension(b, k, CochainTriple(b, k));
  }
  std::vector<CochainTriple> parts;
  for (std::size_t t = 0; t < k; ++t) parts.push_back(random_cocycle(b, z2, rng));
  return build_central_extension(b, k, stack_cochains(b, parts));
}

TriAlgebra random_basis_change(const TriAlgebra& a, Rng& rng) {
  return change_basis(a, rng.invertible(a.field(), a.dim()));
}

std::vector<TriAlgebra> random_corpus(const Field& field, std::size_t count, std::size_t max_dim,
                                      std::uint64_t seed) {
  Rng rng(seed);
  std::vector<TriAlgebra> seeds = {abelian(field, 1), abelian(field, 2), vdash_square(field),
                                   unit(field), truncated_polynomial(field, 3),
                                   upper_triangular(field)};
  std::vector<TriAlgebra> out;
  std::size_t attempt = 0;
  while (out.size() < count) {
    TriAlgebra a = seeds[attempt++ % seeds.size()];
    switch (rng.uniform(0, 3)) {
      case 0:
        break;
      case 1:
        if (a.dim() < max_dim) {
          const auto room = static_cast<long long>(max_dim - a.dim());
          a = random_extension(a, static_cast<std::size_t>(rng.uniform(1, std::min(room, 3LL))), rng)
                  .total;
        }
        break;
      case 2: {
        const TriAlgebra& other = seeds[static_cast<std::size_t>(rng.uniform(0, 3))];
        if (a.dim() + other.dim() <= max_dim) a = direct_sum(a, other);
        break;
      }
      default:
        if (a.dim() < max_dim) a = random_extension(a, 1, rng).total;
        if (a.dim() < max_dim) a = random_extension(a, 1, rng).total;
        break;
    }
    if (a.dim() > max_dim) continue;
    out.push_back(random_basis_change(a, rng).renamed("corpus" + std::to_string(out.size())));
  }
  return out;
}

std::vector<Subspace> sample_central_ideals(const TriAlgebra& l, Rng& rng,
                                            std::size_t random_count) {
  const Field& field = l.field();
  const Subspace z = center(l).space;
  std::vector<Subspace> out = {Subspace::zero(field, l.dim())};
  auto add = [&](const Subspace& s) {
    for (const auto& t : out) {
      if (t == s) return;
    }
    out.push_back(s);
  };
  add(z);
  for (std::size_t r = 0; r < z.dim(); ++r) add(Subspace::span(field, l.dim(), {z.basis_vector(r)}));
  if (z.dim() > 1) {
    for (std::size_t t = 0; t < random_count; ++t) {
      const auto size = static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(z.dim()) - 1));
      std::vector<Vector> gens;
      for (std::size_t g = 0; g < size; ++g) gens.push_back(z.combine(rng.vector(field, z.dim())));
      add(Subspace::span(field, l.dim(), gens));
    }
  }
  return out;
}

}  // namespace triassoc::gen
