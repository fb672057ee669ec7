#include "triassoc/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace triassoc::lin {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

namespace {
void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("vector lengths differ: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}
}  // namespace

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_same_length(a.size(), b.size());
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_same_length(a.size(), b.size());
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, std::span<const Scalar> v) {
  Vector r(v.begin(), v.end());
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& a, const Scalar& s, std::span<const Scalar> b) {
  require_same_length(a.size(), b.size());
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i].add_product(s, b[i]);
  }
}

SparseRow to_sparse(std::span<const Scalar> v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) row.push_back({i, v[i]});
  }
  return row;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("matrix entry count " + std::to_string(data_.size()) +
                            " does not match shape " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows) {
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    require_same_length(r.size(), cols);
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(field, rows.size(), cols, std::move(entries));
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Vector> converted;
  for (const auto& r : rows) {
    Vector v;
    for (long long x : r) v.push_back(field.from_int(x));
    converted.push_back(std::move(v));
  }
  return from_rows(field, cols, converted);
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::stack(const Matrix& below) const {
  if (cols_ != below.cols_) throw DimensionMismatch("stack: column counts differ");
  if (!(field_ == below.field_)) throw FieldMismatch("stack: fields differ");
  std::vector<Scalar> entries = data_;
  entries.insert(entries.end(), below.data_.begin(), below.data_.end());
  return Matrix(field_, rows_ + below.rows_, cols_, std::move(entries));
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix m(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
  }
  return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> cols) const {
  Matrix m(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
  }
  return m;
}

bool Matrix::is_zero() const { return lin::is_zero(data_); }

Vector Matrix::apply(std::span<const Scalar> x) const {
  require_same_length(x.size(), cols_);
  Vector y = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) y[r].add_product(a, x[c]);
    }
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
  }
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product over different fields");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j).add_product(x, y);
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionMismatch("matrix difference shape mismatch");
  }
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         data_ == other.data_;
}

void Matrix::check_field() const {
  for (const auto& s : data_) {
    if (!(s.field() == field_)) {
      throw FieldMismatch("matrix over " + field_.to_string() + " holds an entry from " +
                          s.field().to_string());
    }
  }
}

RrefResult rref(const Matrix& m) {
  m.check_field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < a.cols() && top < a.rows(); ++col) {
    std::size_t pivot_row = top;
    while (pivot_row < a.rows() && a(pivot_row, col).is_zero()) ++pivot_row;
    if (pivot_row == a.rows()) continue;
    if (pivot_row != top) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(pivot_row, c), a(top, c));
    }
    const Scalar inv = a(top, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) {
      if (!a(top, c).is_zero()) a(top, c) *= inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == top || a(r, col).is_zero()) continue;
      const Scalar factor = -a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(top, c).is_zero()) a(r, c).add_product(factor, a(top, c));
      }
    }
    pivots.push_back(col);
    ++top;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  auto [reduced, pivots] = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw std::domain_error("matrix is singular");
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced(r, n + c);
  }
  return inv;
}

}  // namespace triassoc::lin
