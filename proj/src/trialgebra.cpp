#include "triassoc/trialgebra.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "triassoc/row_echelon.hpp"

namespace triassoc {

using lin::RowEchelon;
using lin::SparseRow;
using lin::Term;

std::string_view op_name(Op op) {
  switch (op) {
    case Op::Vdash: return "vdash";
    case Op::Dashv: return "dashv";
    case Op::Perp: return "perp";
  }
  return "?";
}

std::string_view op_symbol(Op op) {
  switch (op) {
    case Op::Vdash: return "⊢";
    case Op::Dashv: return "⊣";
    case Op::Perp: return "⊥";
  }
  return "?";
}

std::optional<Op> parse_op(std::string_view name) {
  for (Op op : kOps) {
    if (op_name(op) == name) return op;
  }
  return std::nullopt;
}

std::string axiom_text(int index) {
  const Axiom& ax = kAxioms.at(static_cast<std::size_t>(index - 1));
  std::string s = "(x";
  s += op_symbol(ax.inner_left);
  s += "y)";
  s += op_symbol(ax.outer_left);
  s += "z = x";
  s += op_symbol(ax.outer_right);
  s += "(y";
  s += op_symbol(ax.inner_right);
  s += "z)";
  return s;
}

namespace {

std::size_t op_index(Op op) { return static_cast<std::size_t>(op); }

// Sparse accumulation of a few terms; products here touch only a handful of
// coordinates, so a flat vector beats a dense buffer.
class Accumulator {
 public:
  void add(std::size_t index, const Scalar& a, const Scalar& b) {
    for (auto& t : terms_) {
      if (t.index == index) {
        t.value.add_product(a, b);
        return;
      }
    }
    terms_.push_back({index, a * b});
  }
  void clear() { terms_.clear(); }
  bool is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.value.is_zero(); });
  }
  Vector dense(const Field& field, std::size_t n) const {
    Vector v = lin::zero_vector(field, n);
    for (const auto& t : terms_) v[t.index] += t.value;
    return v;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace

struct TriAlgebra::Data {
  Field field;
  std::size_t dim = 0;
  Tensors tensors;
  std::string name;
  std::vector<SparseRow> sparse;  // index (op * n + i) * n + j
};

TriAlgebra::TriAlgebra() : TriAlgebra(Field::rationals(), 0, Tensors{}) {}

TriAlgebra::TriAlgebra(Field field, std::size_t dim, Tensors tensors, std::string name) {
  auto data = std::make_shared<Data>();
  const std::size_t cube = dim * dim * dim;
  for (std::size_t t = 0; t < 3; ++t) {
    if (tensors[t].size() != cube) {
      throw MalformedAlgebra("tensor for " + std::string(op_name(kOps[t])) + " has " +
                             std::to_string(tensors[t].size()) + " entries, expected " +
                             std::to_string(dim) + "^3 = " + std::to_string(cube));
    }
    for (const auto& s : tensors[t]) {
      if (!(s.field() == field)) {
        throw MalformedAlgebra("structure constant from " + s.field().to_string() +
                               " in an algebra over " + field.to_string());
      }
    }
  }
  data->sparse.resize(3 * dim * dim);
  for (std::size_t t = 0; t < 3; ++t) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        auto& row = data->sparse[(t * dim + i) * dim + j];
        for (std::size_t k = 0; k < dim; ++k) {
          const Scalar& c = tensors[t][(i * dim + j) * dim + k];
          if (!c.is_zero()) row.push_back({k, c});
        }
      }
    }
  }
  data->field = field;
  data->dim = dim;
  data->tensors = std::move(tensors);
  data->name = std::move(name);
  data_ = std::move(data);
}

TriAlgebra TriAlgebra::abelian(const Field& field, std::size_t dim, std::string name) {
  Tensors t;
  for (auto& v : t) v.assign(dim * dim * dim, field.zero());
  return TriAlgebra(field, dim, std::move(t), std::move(name));
}

const Field& TriAlgebra::field() const { return data_->field; }
std::size_t TriAlgebra::dim() const { return data_->dim; }
const std::string& TriAlgebra::name() const { return data_->name; }
const TriAlgebra::Tensors& TriAlgebra::tensors() const { return data_->tensors; }

TriAlgebra TriAlgebra::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  TriAlgebra copy = *this;
  copy.data_ = std::move(data);
  return copy;
}

const Scalar& TriAlgebra::coeff(Op op, std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t n = dim();
  if (i >= n || j >= n || k >= n) throw DimensionMismatch("basis index out of range");
  return data_->tensors[op_index(op)][(i * n + j) * n + k];
}

std::span<const Term> TriAlgebra::product_terms(Op op, std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  return data_->sparse[(op_index(op) * n + i) * n + j];
}

Vector TriAlgebra::basis_product(Op op, std::size_t i, std::size_t j) const {
  Vector v = lin::zero_vector(field(), dim());
  for (const auto& t : product_terms(op, i, j)) v[t.index] = t.value;
  return v;
}

Vector TriAlgebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y, Op op) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) {
    throw DimensionMismatch("multiply: vectors of length " + std::to_string(x.size()) + ", " +
                            std::to_string(y.size()) + " in an algebra of dim " +
                            std::to_string(n));
  }
  Vector out = lin::zero_vector(field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& t : product_terms(op, i, j)) out[t.index].add_product(xy, t.value);
    }
  }
  return out;
}

bool TriAlgebra::same_as(const TriAlgebra& other) const {
  return data_ == other.data_ || *this == other;
}

bool TriAlgebra::operator==(const TriAlgebra& other) const {
  return field() == other.field() && dim() == other.dim() && tensors() == other.tensors();
}

TriAlgebraBuilder::TriAlgebraBuilder(Field field, std::size_t dim) : field_(field), dim_(dim) {
  for (auto& t : tensors_) t.assign(dim * dim * dim, field.zero());
}

TriAlgebraBuilder& TriAlgebraBuilder::set(Op op, std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_) throw MalformedAlgebra("product value has wrong length");
  for (std::size_t k = 0; k < dim_; ++k) set(op, i, j, k, value[k]);
  return *this;
}

TriAlgebraBuilder& TriAlgebraBuilder::set(Op op, std::size_t i, std::size_t j, std::size_t k,
                                          Scalar value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw MalformedAlgebra("basis index out of range");
  tensors_[op_index(op)][(i * dim_ + j) * dim_ + k] = std::move(value);
  return *this;
}

TriAlgebraBuilder& TriAlgebraBuilder::name(std::string name) {
  name_ = std::move(name);
  return *this;
}

TriAlgebra TriAlgebraBuilder::build() const { return TriAlgebra(field_, dim_, tensors_, name_); }

AlgSubspace::AlgSubspace(TriAlgebra parent_algebra, Subspace subspace)
    : parent(std::move(parent_algebra)), space(std::move(subspace)) {
  if (space.ambient_dim() != parent.dim()) {
    throw DimensionMismatch("subspace of F^" + std::to_string(space.ambient_dim()) +
                            " attached to an algebra of dim " + std::to_string(parent.dim()));
  }
}

std::vector<int> ValidationReport::violated_axioms() const {
  std::vector<int> out;
  for (const auto& v : violations) out.push_back(v.axiom);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValidationReport validate_axioms(const TriAlgebra& a, std::span<const int> axioms) {
  ValidationReport report;
  const std::size_t n = a.dim();
  Accumulator diff;
  const Scalar minus_one = -a.field().one();
  for (int index : axioms) {
    const Axiom& ax = kAxioms.at(static_cast<std::size_t>(index - 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          diff.clear();
          // (e_i a e_j) b e_k
          for (const auto& t : a.product_terms(ax.inner_left, i, j)) {
            for (const auto& u : a.product_terms(ax.outer_left, t.index, k)) {
              diff.add(u.index, t.value, u.value);
            }
          }
          // − e_i c (e_j d e_k)
          for (const auto& t : a.product_terms(ax.inner_right, j, k)) {
            const Scalar neg = minus_one * t.value;
            for (const auto& u : a.product_terms(ax.outer_right, i, t.index)) {
              diff.add(u.index, neg, u.value);
            }
          }
          if (!diff.is_zero()) {
            report.violations.push_back({index, {i, j, k}, diff.dense(a.field(), n)});
          }
        }
      }
    }
  }
  return report;
}

ValidationReport validate_axioms(const TriAlgebra& a) {
  static constexpr std::array<int, 11> all = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  return validate_axioms(a, all);
}

void require_valid(const TriAlgebra& a) {
  const auto report = validate_axioms(a);
  if (!report.passed()) {
    const auto& v = report.violations.front();
    throw UnvalidatedAlgebra("algebra violates axiom " + std::to_string(v.axiom) + " " +
                             axiom_text(v.axiom) + " on basis triple (" +
                             std::to_string(v.triple[0]) + "," + std::to_string(v.triple[1]) +
                             "," + std::to_string(v.triple[2]) + ")");
  }
}

bool is_associative(const TriAlgebra& a, Op op) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = lin::unit_vector(a.field(), n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = lin::unit_vector(a.field(), n, j);
      const Vector ij = a.multiply(ei, ej, op);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ek = lin::unit_vector(a.field(), n, k);
        if (a.multiply(ij, ek, op) != a.multiply(ei, a.multiply(ej, ek, op), op)) return false;
      }
    }
  }
  return true;
}

Vector multiply(const TriAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y, Op op) {
  return a.multiply(x, y, op);
}

namespace {
void require_same_parent(const AlgSubspace& s, const AlgSubspace& t) {
  if (!s.parent.same_as(t.parent)) {
    throw DimensionMismatch("subspaces belong to different algebras");
  }
}
}  // namespace

AlgSubspace product_subspace(const AlgSubspace& s, const AlgSubspace& t) {
  require_same_parent(s, t);
  const TriAlgebra& a = s.parent;
  RowEchelon echelon(a.field(), a.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto x = s.space.basis().row(i);
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const auto y = t.space.basis().row(j);
      for (Op op : kOps) echelon.insert(a.multiply(x, y, op));
    }
  }
  return AlgSubspace(a, echelon.row_space());
}

AlgSubspace derived(const TriAlgebra& a) {
  const std::size_t n = a.dim();
  RowEchelon echelon(a.field(), n);
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto terms = a.product_terms(op, i, j);
        if (!terms.empty()) echelon.insert(SparseRow(terms.begin(), terms.end()));
      }
    }
  }
  return AlgSubspace(a, echelon.row_space());
}

AlgSubspace center(const TriAlgebra& a) {
  const std::size_t n = a.dim();
  // One linear condition on z per (side, op, basis element, output coordinate).
  std::map<std::tuple<int, std::size_t, std::size_t, std::size_t>, SparseRow> rows;
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t b = 0; b < n; ++b) {
        for (const auto& t : a.product_terms(op, i, b)) {  // z_i e_i * e_b
          rows[{0, op_index(op), b, t.index}].push_back({i, t.value});
        }
        for (const auto& t : a.product_terms(op, b, i)) {  // e_b * z_i e_i
          rows[{1, op_index(op), b, t.index}].push_back({i, t.value});
        }
      }
    }
  }
  RowEchelon echelon(a.field(), n);
  for (auto& [key, row] : rows) echelon.insert(std::move(row));
  return AlgSubspace(a, echelon.null_space());
}

bool is_ideal(const AlgSubspace& s) {
  const TriAlgebra& a = s.parent;
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const auto x = s.space.basis().row(r);
    for (std::size_t b = 0; b < n; ++b) {
      const Vector e = lin::unit_vector(a.field(), n, b);
      for (Op op : kOps) {
        if (!s.space.contains(a.multiply(e, x, op))) return false;
        if (!s.space.contains(a.multiply(x, e, op))) return false;
      }
    }
  }
  return true;
}

Quotient quotient_algebra(const TriAlgebra& a, const AlgSubspace& ideal) {
  if (!ideal.parent.same_as(a)) throw DimensionMismatch("ideal belongs to a different algebra");
  if (!is_ideal(ideal)) throw NotAnIdeal("quotient requested by a subspace that is not an ideal");
  const Subspace whole = Subspace::full(a.field(), a.dim());
  const Subspace comp = lin::complement(ideal.space, whole);
  Matrix projection = lin::quotient_coordinates(ideal.space, whole);
  Matrix section = comp.inclusion();
  const std::size_t q = comp.dim();
  TriAlgebraBuilder builder(a.field(), q);
  for (Op op : kOps) {
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        const Vector v = a.multiply(comp.basis().row(i), comp.basis().row(j), op);
        builder.set(op, i, j, projection.apply(v));
      }
    }
  }
  std::string name = a.name().empty() ? std::string{} : a.name() + "/I";
  return {builder.name(std::move(name)).build(), std::move(projection), std::move(section)};
}

Subspace hom_to_field(const TriAlgebra& a, std::size_t k) {
  const std::size_t n = a.dim();
  const AlgSubspace d = derived(a);
  const Subspace annihilator =
      d.dim() == 0 ? Subspace::full(a.field(), n) : lin::kernel(d.space.basis());
  std::vector<Vector> gens;
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t r = 0; r < annihilator.dim(); ++r) {
      Vector v = lin::zero_vector(a.field(), k * n);
      for (std::size_t c = 0; c < n; ++c) v[t * n + c] = annihilator.basis()(r, c);
      gens.push_back(std::move(v));
    }
  }
  return Subspace::span(a.field(), k * n, gens);
}

TriAlgebra change_basis(const TriAlgebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("basis change matrix has wrong shape");
  const Matrix p_inv = lin::inverse(p);
  TriAlgebraBuilder builder(a.field(), n);
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector fi = p.column(i);
      for (std::size_t j = 0; j < n; ++j) {
        builder.set(op, i, j, p_inv.apply(a.multiply(fi, p.column(j), op)));
      }
    }
  }
  return builder.name(a.name()).build();
}

TriAlgebra direct_sum(const TriAlgebra& a, const TriAlgebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct sum over different fields");
  const std::size_t n = a.dim();
  const std::size_t m = b.dim();
  TriAlgebraBuilder builder(a.field(), n + m);
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (const auto& t : a.product_terms(op, i, j)) builder.set(op, i, j, t.index, t.value);
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (const auto& t : b.product_terms(op, i, j)) {
          builder.set(op, n + i, n + j, n + t.index, t.value);
        }
      }
    }
  }
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
  return builder.name(std::move(name)).build();
}

DimBoundReport check_dim_bounds(const TriAlgebra& a, const std::optional<Subspace>& pair_kernel) {
  DimBoundReport r;
  const AlgSubspace z = center(a);
  const AlgSubspace d = derived(a);
  r.central_quotient_dim = a.dim() - z.dim();
  r.derived_dim = d.dim();
  r.derived_bound = 3 * r.central_quotient_dim * r.central_quotient_dim;
  r.derived_ok = r.derived_dim <= r.derived_bound;
  r.derived_tight = r.derived_dim == r.derived_bound;
  if (pair_kernel) {
    r.has_pair = true;
    r.pair_is_defining = lin::intersection(z.space, d.space).contains(*pair_kernel);
    r.quotient_dim = a.dim() - pair_kernel->dim();
    r.total_dim = a.dim();
    r.total_bound = r.quotient_dim * (3 * r.quotient_dim + 1);
    r.total_ok = r.total_dim <= r.total_bound;
    r.total_tight = r.total_dim == r.total_bound;
  }
  return r;
}

std::vector<BoundRow> bound_table(std::uint64_t n_max) {
  std::vector<BoundRow> rows;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    rows.push_back({"Lie", n, n * (n - 1) / 2, n * (n + 1) / 2});
    rows.push_back({"Leibniz", n, n * n, n * (n + 1)});
    rows.push_back({"Associative", n, n * n, n * (n + 1)});
    rows.push_back({"Diassociative", n, 2 * n * n, n * (2 * n + 1)});
    rows.push_back({"Triassociative", n, 3 * n * n, n * (3 * n + 1)});
  }
  return rows;
}

}  // namespace triassoc
