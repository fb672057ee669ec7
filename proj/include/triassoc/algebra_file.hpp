#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "triassoc/trialgebra.hpp"

namespace triassoc::io {

/// Malformed algebra document. `entry` is the offending product index when
/// the problem is inside "products", `line` the 1-based line for syntax errors.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::optional<std::size_t> entry = std::nullopt,
             std::optional<std::size_t> line = std::nullopt)
      : Error(what), entry_(entry), line_(line) {}
  std::optional<std::size_t> entry() const { return entry_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> entry_;
  std::optional<std::size_t> line_;
};

struct AlgebraFile {
  TriAlgebra algebra;
  /// Optional distinguished subspace, e.g. the kernel of a cover.
  std::optional<Subspace> kernel;
};

/// {"field": "Q" | "Fp:p", "dim": n, "name"?: s,
///  "products": [{"op": "vdash"|"dashv"|"perp", "i": i, "j": j, "value": [n scalars]}],
///  "kernel"?: [[n scalars], ...]}
AlgebraFile parse_algebra(std::string_view text);
AlgebraFile read_algebra(std::istream& in);
/// Reads a file, or standard input when path is "-".
AlgebraFile load_algebra(const std::string& path, std::istream& stdin_stream);

/// Canonical text: nonzero products only, in (op, i, j) order, one per line.
std::string emit_algebra(const TriAlgebra& a, const std::optional<Subspace>& kernel = std::nullopt);

}  // namespace triassoc::io
