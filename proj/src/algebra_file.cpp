#include "triassoc/algebra_file.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace triassoc::io {

using nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  const auto end = text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
  return 1 + static_cast<std::size_t>(std::count(text.begin(), end, '\n'));
}

Scalar parse_scalar(const Field& field, const json& v, const std::string& where,
                    std::optional<std::size_t> entry) {
  try {
    if (v.is_string()) return field.parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return field.from_int(v.get<long long>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what(), entry);
  }
  throw ParseError(where + ": scalars must be strings like \"-3/4\" or integers", entry);
}

Vector parse_vector(const Field& field, std::size_t n, const json& v, const std::string& where,
                    std::optional<std::size_t> entry) {
  if (!v.is_array()) throw ParseError(where + ": expected a list of scalars", entry);
  if (v.size() != n) {
    throw ParseError(where + ": expected " + std::to_string(n) + " scalars, got " +
                         std::to_string(v.size()),
                     entry);
  }
  Vector out;
  out.reserve(n);
  for (std::size_t c = 0; c < n; ++c) out.push_back(parse_scalar(field, v[c], where, entry));
  return out;
}

std::size_t parse_index(const json& obj, const char* key, std::size_t n, std::size_t entry) {
  const std::string where = "products[" + std::to_string(entry) + "]";
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw ParseError(where + ": missing integer \"" + key + "\"", entry);
  }
  const long long v = obj[key].get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw ParseError(where + ": index " + key + " = " + std::to_string(v) + " outside [0, " +
                         std::to_string(n) + ")",
                     entry);
  }
  return static_cast<std::size_t>(v);
}

std::string scalar_text(const Scalar& s) { return s.to_string(); }

}  // namespace

AlgebraFile parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), std::nullopt,
                     line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw ParseError("document must be an object");

  Field field = Field::rationals();
  if (doc.contains("field")) {
    if (!doc["field"].is_string()) throw ParseError("\"field\" must be a string");
    try {
      field = Field::parse(doc["field"].get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad field: ") + e.what());
    }
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0) {
    throw ParseError("missing non-negative integer \"dim\"");
  }
  const auto n = static_cast<std::size_t>(doc["dim"].get<long long>());

  TriAlgebraBuilder builder(field, n);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    builder.name(doc["name"].get<std::string>());
  }
  const json products = doc.value("products", json::array());
  if (!products.is_array()) throw ParseError("\"products\" must be a list");
  std::set<std::tuple<int, std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < products.size(); ++e) {
    const json& p = products[e];
    const std::string where = "products[" + std::to_string(e) + "]";
    if (!p.is_object()) throw ParseError(where + ": expected an object", e);
    if (!p.contains("op") || !p["op"].is_string()) throw ParseError(where + ": missing \"op\"", e);
    const auto op = parse_op(p["op"].get<std::string>());
    if (!op) {
      throw ParseError(where + ": unknown op \"" + p["op"].get<std::string>() +
                           "\" (expected vdash, dashv or perp)",
                       e);
    }
    const std::size_t i = parse_index(p, "i", n, e);
    const std::size_t j = parse_index(p, "j", n, e);
    if (!seen.emplace(static_cast<int>(*op), i, j).second) {
      throw ParseError(where + ": duplicate entry for (" + std::string(op_name(*op)) + ", " +
                           std::to_string(i) + ", " + std::to_string(j) + ")",
                       e);
    }
    if (!p.contains("value")) throw ParseError(where + ": missing \"value\"", e);
    builder.set(*op, i, j, parse_vector(field, n, p["value"], where, e));
  }

  AlgebraFile out{builder.build(), std::nullopt};
  if (doc.contains("kernel")) {
    const json& k = doc["kernel"];
    if (!k.is_array()) throw ParseError("\"kernel\" must be a list of vectors");
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < k.size(); ++r) {
      gens.push_back(parse_vector(field, n, k[r], "kernel[" + std::to_string(r) + "]", std::nullopt));
    }
    out.kernel = Subspace::span(field, n, gens);
  }
  return out;
}

AlgebraFile read_algebra(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_algebra(text);
}

AlgebraFile load_algebra(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return read_algebra(stdin_stream);
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return read_algebra(f);
}

std::string emit_algebra(const TriAlgebra& a, const std::optional<Subspace>& kernel) {
  const std::size_t n = a.dim();
  std::ostringstream out;
  out << "{\n  \"field\": " << json(a.field().to_string()).dump() << ",\n  \"dim\": " << n;
  if (!a.name().empty()) out << ",\n  \"name\": " << json(a.name()).dump();
  out << ",\n  \"products\": [";
  bool first = true;
  for (Op op : kOps) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a.product_terms(op, i, j).empty()) continue;
        json value = json::array();
        for (const auto& s : a.basis_product(op, i, j)) value.push_back(scalar_text(s));
        json entry = {{"op", std::string(op_name(op))}, {"i", i}, {"j", j}, {"value", value}};
        out << (first ? "\n    " : ",\n    ") << entry.dump();
        first = false;
      }
    }
  }
  out << (first ? "]" : "\n  ]");
  if (kernel) {
    out << ",\n  \"kernel\": [";
    for (std::size_t r = 0; r < kernel->dim(); ++r) {
      json v = json::array();
      for (const auto& s : kernel->basis_vector(r)) v.push_back(scalar_text(s));
      out << (r == 0 ? "\n    " : ",\n    ") << v.dump();
    }
    out << (kernel->dim() == 0 ? "]" : "\n  ]");
  }
  out << "\n}\n";
  return out.str();
}

}  // namespace triassoc::io
