#include "triassoc/row_echelon.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "triassoc/subspace.hpp"

namespace triassoc::lin {

namespace {

// a - factor * b, both sorted sparse rows.
SparseRow subtract_multiple(const SparseRow& a, const Scalar& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->index < ib->index)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->index < ia->index) {
      out.push_back({ib->index, -(factor * ib->value)});
      ++ib;
    } else {
      Scalar v = ia->value;
      v -= factor * ib->value;
      if (!v.is_zero()) out.push_back({ia->index, std::move(v)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

// Clears, in ascending order, every entry of `row` that sits on a pivot of
// `rows`, skipping the entry at `keep` (if any).
void eliminate(SparseRow& row, const std::map<std::size_t, SparseRow>& rows, std::size_t keep,
               bool has_keep) {
  std::size_t pos = 0;
  while (pos < row.size()) {
    const std::size_t idx = row[pos].index;
    auto it = rows.find(idx);
    if (it == rows.end() || (has_keep && idx == keep)) {
      ++pos;
      continue;
    }
    const Scalar factor = row[pos].value;
    row = subtract_multiple(row, factor, it->second);
    // Entries before idx are unchanged; idx itself is now zero.
    pos = 0;
    while (pos < row.size() && row[pos].index < idx) ++pos;
  }
}

}  // namespace

RowEchelon::RowEchelon(Field field, std::size_t cols) : field_(field), cols_(cols) {}

SparseRow RowEchelon::reduce(SparseRow row) const {
  eliminate(row, rows_, 0, false);
  return row;
}

bool RowEchelon::insert(SparseRow row) {
  for (const auto& t : row) {
    if (t.index >= cols_) {
      throw DimensionMismatch("row entry index " + std::to_string(t.index) +
                              " outside width " + std::to_string(cols_));
    }
    if (!(t.value.field() == field_)) {
      throw FieldMismatch("row entry from " + t.value.field().to_string() + " inserted into " +
                          field_.to_string() + " echelon form");
    }
  }
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Scalar inv = row.front().value.inverse();
  for (auto& t : row) t.value *= inv;
  const std::size_t pivot = row.front().index;
  rows_.emplace(pivot, std::move(row));
  return true;
}

bool RowEchelon::insert(std::span<const Scalar> row) {
  if (row.size() != cols_) {
    throw DimensionMismatch("row of length " + std::to_string(row.size()) +
                            " inserted into width " + std::to_string(cols_));
  }
  return insert(to_sparse(row));
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) p.push_back(pivot);
  return p;
}

Matrix RowEchelon::reduced_basis() const {
  std::map<std::size_t, SparseRow> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseRow row = it->second;
    eliminate(row, done, it->first, true);
    done.emplace(it->first, std::move(row));
  }
  Matrix m(field_, done.size(), cols_);
  std::size_t r = 0;
  for (const auto& [pivot, row] : done) {
    for (const auto& t : row) m(r, t.index) = t.value;
    ++r;
  }
  return m;
}

Subspace RowEchelon::row_space() const { return Subspace::from_rref(reduced_basis(), pivots()); }

Subspace RowEchelon::null_space() const {
  const Matrix reduced = reduced_basis();
  const std::vector<std::size_t> piv = pivots();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;

  RowEchelon kernel_rows(field_, cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    SparseRow v;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      if (!reduced(r, f).is_zero()) v.push_back({piv[r], -reduced(r, f)});
    }
    v.push_back({f, field_.one()});
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    kernel_rows.insert(std::move(v));
  }
  return kernel_rows.row_space();
}

}  // namespace triassoc::lin
