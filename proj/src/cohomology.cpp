#include "triassoc/cohomology.hpp"

#include <map>
#include <string>

#include "triassoc/extensions.hpp"
#include "triassoc/row_echelon.hpp"

namespace triassoc {

using lin::RowEchelon;
using lin::SparseRow;

CochainTriple::CochainTriple(TriAlgebra base, std::size_t coeff_dim)
    : base_(std::move(base)),
      k_(coeff_dim),
      coords_(lin::zero_vector(base_.field(), ambient_dim(base_.dim(), coeff_dim))) {}

CochainTriple::CochainTriple(TriAlgebra base, std::size_t coeff_dim, Vector coords)
    : base_(std::move(base)), k_(coeff_dim), coords_(std::move(coords)) {
  if (coords_.size() != ambient_dim(base_.dim(), k_)) {
    throw DimensionMismatch("cochain has " + std::to_string(coords_.size()) +
                            " coordinates, expected 3*n^2*k = " +
                            std::to_string(ambient_dim(base_.dim(), k_)));
  }
}

Vector CochainTriple::value(Op op, std::size_t i, std::size_t j) const {
  const std::size_t n = base_.dim();
  const std::size_t start = index(n, k_, op, i, j, 0);
  return Vector(coords_.begin() + static_cast<std::ptrdiff_t>(start),
                coords_.begin() + static_cast<std::ptrdiff_t>(start + k_));
}

void CochainTriple::set(Op op, std::size_t i, std::size_t j, std::span<const Scalar> value) {
  if (value.size() != k_) throw DimensionMismatch("cochain value has wrong length");
  const std::size_t start = index(base_.dim(), k_, op, i, j, 0);
  for (std::size_t t = 0; t < k_; ++t) coords_[start + t] = value[t];
}

Vector CochainTriple::evaluate(Op op, std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t n = base_.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("cochain argument has wrong length");
  Vector out = lin::zero_vector(base_.field(), k_);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      const std::size_t start = index(n, k_, op, i, j, 0);
      for (std::size_t t = 0; t < k_; ++t) {
        if (!coords_[start + t].is_zero()) out[t].add_product(xy, coords_[start + t]);
      }
    }
  }
  return out;
}

CochainTriple CochainTriple::compose(const Matrix& chi) const {
  if (chi.cols() != k_) throw DimensionMismatch("compose: map domain does not match coefficients");
  const std::size_t n = base_.dim();
  CochainTriple out(base_, chi.rows());
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.set(op, i, j, chi.apply(value(op, i, j)));
    }
  }
  return out;
}

CochainTriple CochainTriple::pullback(const TriAlgebra& new_base, const Matrix& beta) const {
  if (beta.rows() != base_.dim() || beta.cols() != new_base.dim()) {
    throw DimensionMismatch("pullback: map shape does not match the bases");
  }
  const std::size_t m = new_base.dim();
  CochainTriple out(new_base, k_);
  for (Op op : kOps) {
    for (std::size_t i = 0; i < m; ++i) {
      const Vector bi = beta.column(i);
      for (std::size_t j = 0; j < m; ++j) out.set(op, i, j, evaluate(op, bi, beta.column(j)));
    }
  }
  return out;
}

CochainTriple CochainTriple::component(std::size_t t) const {
  if (t >= k_) throw DimensionMismatch("coefficient coordinate out of range");
  const std::size_t n = base_.dim();
  CochainTriple out(base_, 1);
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.coords_[index(n, 1, op, i, j, 0)] = coords_[index(n, k_, op, i, j, t)];
      }
    }
  }
  return out;
}

namespace {
void require_same_space(const CochainTriple& a, const CochainTriple& b) {
  if (!a.base().same_as(b.base()) || a.coeff_dim() != b.coeff_dim()) {
    throw DimensionMismatch("cochains over different bases or coefficient spaces");
  }
}
}  // namespace

CochainTriple operator+(const CochainTriple& a, const CochainTriple& b) {
  require_same_space(a, b);
  return CochainTriple(a.base_, a.k_, lin::add(a.coords_, b.coords_));
}

CochainTriple operator-(const CochainTriple& a, const CochainTriple& b) {
  require_same_space(a, b);
  return CochainTriple(a.base_, a.k_, lin::subtract(a.coords_, b.coords_));
}

CochainTriple operator*(const Scalar& s, const CochainTriple& a) {
  return CochainTriple(a.base_, a.k_, lin::scale(s, a.coords_));
}

bool CochainTriple::operator==(const CochainTriple& other) const {
  return base_.same_as(other.base_) && k_ == other.k_ && coords_ == other.coords_;
}

CochainTriple stack_cochains(const TriAlgebra& base, std::span<const CochainTriple> parts) {
  const std::size_t n = base.dim();
  const std::size_t k = parts.size();
  CochainTriple out(base, k);
  Vector coords = out.coords();
  for (std::size_t t = 0; t < k; ++t) {
    if (!parts[t].base().same_as(base) || parts[t].coeff_dim() != 1) {
      throw DimensionMismatch("stack_cochains expects scalar cochains on the given base");
    }
    for (Op op : kOps) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          coords[CochainTriple::index(n, k, op, i, j, t)] =
              parts[t].coords()[CochainTriple::index(n, 1, op, i, j, 0)];
        }
      }
    }
  }
  return CochainTriple(base, k, std::move(coords));
}

namespace {

// Constraint row for one cocycle condition at one basis triple (scalar
// coefficients): f_b(e_i a e_j, e_l) − f_c(e_i, e_j d e_l).
SparseRow constraint_row(const TriAlgebra& b, const Axiom& ax, std::size_t i, std::size_t j,
                         std::size_t l) {
  const std::size_t n = b.dim();
  std::map<std::size_t, Scalar> acc;
  for (const auto& t : b.product_terms(ax.inner_left, i, j)) {
    auto [it, fresh] = acc.try_emplace(CochainTriple::index(n, 1, ax.outer_left, t.index, l, 0),
                                       t.value);
    if (!fresh) it->second += t.value;
  }
  for (const auto& t : b.product_terms(ax.inner_right, j, l)) {
    auto [it, fresh] = acc.try_emplace(CochainTriple::index(n, 1, ax.outer_right, i, t.index, 0),
                                       -t.value);
    if (!fresh) it->second -= t.value;
  }
  SparseRow row;
  for (auto& [idx, v] : acc) {
    if (!v.is_zero()) row.push_back({idx, std::move(v)});
  }
  return row;
}

// Places a scalar-coefficient cochain vector into coefficient slot t of F^k.
Vector lift(const Field& field, std::size_t n, std::size_t k, std::span<const Scalar> v,
            std::size_t t) {
  Vector out = lin::zero_vector(field, CochainTriple::ambient_dim(n, k));
  for (std::size_t idx = 0; idx < v.size(); ++idx) out[idx * k + t] = v[idx];
  return out;
}

Subspace lift_all(const Subspace& scalar_space, std::size_t n, std::size_t k) {
  const Field& field = scalar_space.field();
  std::vector<Vector> gens;
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t r = 0; r < scalar_space.dim(); ++r) {
      gens.push_back(lift(field, n, k, scalar_space.basis().row(r), t));
    }
  }
  return Subspace::span(field, CochainTriple::ambient_dim(n, k), gens);
}

}  // namespace

std::vector<int> cocycle_violations(const CochainTriple& f) {
  const TriAlgebra& b = f.base();
  const std::size_t n = b.dim();
  const std::size_t k = f.coeff_dim();
  std::vector<int> violated;
  for (std::size_t a = 0; a < kAxioms.size(); ++a) {
    bool bad = false;
    for (std::size_t i = 0; i < n && !bad; ++i) {
      for (std::size_t j = 0; j < n && !bad; ++j) {
        for (std::size_t l = 0; l < n && !bad; ++l) {
          const SparseRow row = constraint_row(b, kAxioms[a], i, j, l);
          for (std::size_t t = 0; t < k && !bad; ++t) {
            Scalar residual = b.field().zero();
            for (const auto& term : row) residual.add_product(term.value, f.coords()[term.index * k + t]);
            bad = !residual.is_zero();
          }
        }
      }
    }
    if (bad) violated.push_back(static_cast<int>(a + 1));
  }
  return violated;
}

bool is_cocycle(const CochainTriple& f) { return cocycle_violations(f).empty(); }

Subspace z2_space(const TriAlgebra& b, std::size_t k) {
  require_valid(b);
  const std::size_t n = b.dim();
  // The conditions act coordinate-wise on F^k, so the system is k copies of
  // the scalar one.
  RowEchelon echelon(b.field(), CochainTriple::ambient_dim(n, 1));
  for (const Axiom& ax : kAxioms) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          SparseRow row = constraint_row(b, ax, i, j, l);
          if (!row.empty()) echelon.insert(std::move(row));
        }
      }
    }
  }
  const Subspace scalar = echelon.null_space();
  return k == 1 ? scalar : lift_all(scalar, n, k);
}

CochainTriple coboundary(const TriAlgebra& b, const Matrix& epsilon) {
  const std::size_t n = b.dim();
  if (epsilon.cols() != n) throw DimensionMismatch("coboundary: ε must be k x dim B");
  const std::size_t k = epsilon.rows();
  CochainTriple out(b, k);
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector v = epsilon.apply(b.basis_product(op, i, j));
        for (auto& x : v) x = -x;
        out.set(op, i, j, v);
      }
    }
  }
  return out;
}

Subspace b2_space(const TriAlgebra& b, std::size_t k) {
  require_valid(b);
  const std::size_t n = b.dim();
  RowEchelon echelon(b.field(), CochainTriple::ambient_dim(n, 1));
  for (std::size_t m = 0; m < n; ++m) {
    Matrix eps(b.field(), 1, n);
    eps(0, m) = b.field().one();
    echelon.insert(coboundary(b, eps).coords());
  }
  const Subspace scalar = echelon.row_space();
  return k == 1 ? scalar : lift_all(scalar, n, k);
}

Vector CohomologyResult::class_coordinates(const CochainTriple& f) const {
  if (!f.base().same_as(base) || f.coeff_dim() != coeff_dim) {
    throw DimensionMismatch("cochain does not belong to this cohomology space");
  }
  if (!z2.contains(f.coords())) throw lin::ContainmentError("cochain is not a cocycle");
  return class_map.apply(f.coords());
}

CochainTriple CohomologyResult::representative(std::span<const Scalar> coords) const {
  if (coords.size() != h2_dim) throw DimensionMismatch("class coordinate count mismatch");
  CochainTriple out(base, coeff_dim);
  for (std::size_t r = 0; r < h2_dim; ++r) out = out + coords[r] * h2_reps[r];
  return out;
}

CohomologyResult h2(const TriAlgebra& b, std::size_t k) {
  CohomologyResult r;
  r.base = b;
  r.coeff_dim = k;
  r.z2 = z2_space(b, k);
  r.b2 = b2_space(b, k);
  const Subspace reps = lin::complement(r.b2, r.z2);
  r.h2_dim = reps.dim();
  for (std::size_t i = 0; i < reps.dim(); ++i) r.h2_reps.emplace_back(b, k, reps.basis_vector(i));
  r.class_map = lin::quotient_coordinates(r.b2, r.z2);
  return r;
}

CochainTriple section_cocycle(const CentralExtension& ext, const Matrix& section) {
  const std::size_t n = ext.base.dim();
  const std::size_t total = ext.total.dim();
  if (section.rows() != total || section.cols() != n) {
    throw DimensionMismatch("section has the wrong shape");
  }
  if (!(ext.projection * section == Matrix::identity(ext.base.field(), n))) {
    throw NotASection("projection ∘ section is not the identity");
  }
  CochainTriple f(ext.base, ext.kernel.dim());
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector mi = section.column(i);
      for (std::size_t j = 0; j < n; ++j) {
        Vector v = ext.total.multiply(mi, section.column(j), op);
        v = lin::subtract(v, section.apply(ext.base.basis_product(op, i, j)));
        f.set(op, i, j, ext.kernel.coordinates(v));
      }
    }
  }
  return f;
}

bool is_cohomologous(const CochainTriple& f, const CochainTriple& g) {
  require_same_space(f, g);
  return b2_space(f.base(), f.coeff_dim()).contains((f - g).coords());
}

}  // namespace triassoc
