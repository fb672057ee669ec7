#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "triassoc/matrix.hpp"

namespace triassoc::lin {

class Subspace;

/// Incremental row-space builder over sparse rows.
///
/// Rows are reduced against the pivots collected so far and stored
/// normalized (leading coefficient 1). Large, very sparse systems such as
/// cocycle constraints or product spans go through here instead of a dense
/// Matrix.
class RowEchelon {
 public:
  RowEchelon(Field field, std::size_t cols);

  /// Returns true when the row was independent of the rows seen so far.
  bool insert(SparseRow row);
  bool insert(std::span<const Scalar> row);
  /// Reduces `row` against the stored pivots without inserting it.
  SparseRow reduce(SparseRow row) const;

  const Field& field() const { return field_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Fully reduced row-echelon basis of the row space, rows in pivot order.
  Matrix reduced_basis() const;
  std::vector<std::size_t> pivots() const;

  Subspace row_space() const;
  /// Right null space: vectors annihilated by every inserted row.
  Subspace null_space() const;

 private:
  Field field_;
  std::size_t cols_;
  std::map<std::size_t, SparseRow> rows_;  // keyed by pivot column
};

}  // namespace triassoc::lin
