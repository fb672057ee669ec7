#pragma once

#include <cstdint>
#include <random>

#include "triassoc/matrix.hpp"

namespace triassoc {

/// Seeded generator whose output depends only on the seed (the modulo
/// mapping avoids implementation-defined std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long long uniform(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(engine_() % span);
  }
  bool coin() { return (engine_() & 1U) != 0; }

  lin::Scalar scalar(const lin::Field& field, long long lo = -3, long long hi = 3) {
    return field.from_int(uniform(lo, hi));
  }
  lin::Vector vector(const lin::Field& field, std::size_t n, long long lo = -3, long long hi = 3) {
    lin::Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(field, lo, hi));
    return v;
  }
  lin::Matrix matrix(const lin::Field& field, std::size_t rows, std::size_t cols,
                     long long lo = -3, long long hi = 3) {
    lin::Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(field, lo, hi);
    }
    return m;
  }
  /// Random invertible n x n matrix (rejection sampled).
  lin::Matrix invertible(const lin::Field& field, std::size_t n) {
    while (true) {
      lin::Matrix m = matrix(field, n, n, -2, 2);
      if (lin::rank(m) == n) return m;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace triassoc
