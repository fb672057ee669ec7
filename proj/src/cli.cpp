#include "triassoc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "triassoc/algebra_file.hpp"
#include "triassoc/generators.hpp"
#include "triassoc/sequences.hpp"

namespace triassoc::cli {

namespace {

using nlohmann::json;

// Ordered key/value report printed either as "key = value" lines or as one
// JSON object with the same keys.
class Report {
 public:
  void add(std::string key, json value, std::string text = {}) {
    if (text.empty()) text = value.is_string() ? value.get<std::string>() : value.dump();
    items_.push_back({std::move(key), std::move(value), std::move(text)});
  }
  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      json obj = json::object();
      for (const auto& item : items_) obj[item.key] = item.value;
      out << obj.dump(2) << '\n';
      return;
    }
    for (const auto& item : items_) out << item.key << " = " << item.text << '\n';
  }

 private:
  struct Item {
    std::string key;
    json value;
    std::string text;
  };
  std::vector<Item> items_;
};

json vector_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

std::string vector_text(std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

void add_subspace(Report& r, const std::string& key, const Subspace& s) {
  json basis = json::array();
  std::string text = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vector v = s.basis_vector(i);
    basis.push_back(vector_json(v));
    text += (i ? ", " : "") + vector_text(v);
  }
  r.add(key + ".dim", s.dim());
  r.add(key + ".basis", basis, text + "}");
}

template <std::size_t N>
void add_counts(Report& r, const std::string& key, const std::array<std::size_t, N>& values) {
  json arr = json::array();
  std::string text;
  for (std::size_t i = 0; i < N; ++i) {
    arr.push_back(values[i]);
    text += (i ? " " : "") + std::to_string(values[i]);
  }
  r.add(key, arr, text);
}

std::string pass_text(bool ok) { return ok ? "pass" : "fail"; }

TriAlgebra load_valid(const std::string& path, std::istream& in) {
  TriAlgebra a = io::load_algebra(path, in).algebra;
  require_valid(a);
  return a;
}

// "e2" (1-based basis vector) or a comma separated coordinate list.
Vector parse_generator(const TriAlgebra& l, const std::string& spec) {
  const std::size_t n = l.dim();
  if (!spec.empty() && spec[0] == 'e') {
    std::size_t idx = 0;
    try {
      idx = std::stoul(spec.substr(1));
    } catch (const std::exception&) {
      throw io::ParseError("bad basis vector \"" + spec + "\"");
    }
    if (idx < 1 || idx > n) {
      throw io::ParseError("basis vector " + spec + " outside e1..e" + std::to_string(n));
    }
    return lin::unit_vector(l.field(), n, idx - 1);
  }
  Vector v;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = std::min(spec.find(',', start), spec.size());
    try {
      v.push_back(l.field().parse_scalar(spec.substr(start, end - start)));
    } catch (const std::exception& e) {
      throw io::ParseError("bad --z vector \"" + spec + "\": " + e.what());
    }
    start = end + 1;
  }
  if (v.size() != n) throw io::ParseError("--z vector \"" + spec + "\" needs " + std::to_string(n) + " entries");
  return v;
}

TriAlgebra named_base(const std::string& spec, const Field& field, std::istream& in) {
  auto numeric_suffix = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (spec.rfind(prefix, 0) != 0 || spec.size() == prefix.size()) return std::nullopt;
    const std::string digits = spec.substr(prefix.size());
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return std::nullopt;
    }
    return std::stoul(digits);
  };
  if (auto n = numeric_suffix("cover-abelian")) return gen::cover_abelian(field, *n);
  if (auto n = numeric_suffix("abelian")) return gen::abelian(field, *n);
  if (auto n = numeric_suffix("truncated-poly")) return gen::truncated_polynomial(field, *n);
  if (spec == "vdash-square") return gen::vdash_square(field);
  if (spec == "unit") return gen::unit(field);
  if (spec == "upper-triangular") return gen::upper_triangular(field);
  return load_valid(spec, in);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw io::ParseError("cannot write " + path);
  f << text;
}

struct Options {
  std::string path = "-";
  std::string out_path;
  bool as_json = false;
  std::size_t k = 1;
  std::size_t n = 1;
  std::uint64_t seed = 1;
  std::string field = "Q";
  std::string base = "abelian2";
  std::string kind;
  std::vector<std::string> z;
  bool all_central = false;
  bool reps = false;
  std::size_t samples = 3;
};

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  const TriAlgebra a = io::load_algebra(o.path, in).algebra;
  const ValidationReport v = validate_axioms(a);
  Report r;
  r.add("dim", a.dim());
  r.add("field", a.field().to_string());
  r.add("result", pass_text(v.passed()));
  json axioms = json::array();
  std::string text;
  for (int ax : v.violated_axioms()) {
    axioms.push_back(ax);
    text += (text.empty() ? "" : " ") + std::to_string(ax);
  }
  r.add("violated_axioms", axioms, text.empty() ? "none" : text);
  r.add("violations", v.violations.size());
  const std::size_t shown = std::min<std::size_t>(v.violations.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& w = v.violations[i];
    r.add("violation[" + std::to_string(i) + "]",
          json{{"axiom", w.axiom}, {"triple", w.triple}, {"defect", vector_json(w.defect)}},
          axiom_text(w.axiom) + " at (e" + std::to_string(w.triple[0] + 1) + ", e" +
              std::to_string(w.triple[1] + 1) + ", e" + std::to_string(w.triple[2] + 1) +
              "), defect " + vector_text(w.defect));
  }
  r.print(out, o.as_json);
  return v.passed() ? kExitPass : kExitTheoremFailure;
}

int cmd_invariants(const Options& o, std::istream& in, std::ostream& out) {
  const TriAlgebra a = load_valid(o.path, in);
  const Subspace d = derived(a).space;
  const Subspace z = center(a).space;
  Report r;
  r.add("dim", a.dim());
  r.add("derived_dim", d.dim());
  r.add("center_dim", z.dim());
  r.add("derived_center_dim", lin::intersection(d, z).dim());
  r.add("hom_dim", hom_to_field(a, 1).dim());
  r.print(out, o.as_json);
  return kExitPass;
}

int cmd_h2(const Options& o, std::istream& in, std::ostream& out) {
  const TriAlgebra a = load_valid(o.path, in);
  const CohomologyResult h = h2(a, o.k);
  Report r;
  r.add("coeff_dim", o.k);
  r.add("z2_dim", h.z2.dim());
  r.add("b2_dim", h.b2.dim());
  r.add("h2_dim", h.h2_dim);
  if (o.reps) {
    for (std::size_t i = 0; i < h.h2_reps.size(); ++i) {
      const auto& f = h.h2_reps[i];
      json nonzero = json::array();
      std::string text;
      for (Op op : kOps) {
        for (std::size_t x = 0; x < a.dim(); ++x) {
          for (std::size_t y = 0; y < a.dim(); ++y) {
            const Vector v = f.value(op, x, y);
            if (lin::is_zero(v)) continue;
            nonzero.push_back({{"op", op_name(op)}, {"i", x}, {"j", y}, {"value", vector_json(v)}});
            text += (text.empty() ? "" : "; ") + std::string(op_name(op)) + "(e" +
                    std::to_string(x + 1) + ", e" + std::to_string(y + 1) + ") = " + vector_text(v);
          }
        }
      }
      r.add("rep[" + std::to_string(i) + "]", nonzero, text);
    }
  }
  r.print(out, o.as_json);
  return kExitPass;
}

int cmd_multiplier(const Options& o, std::istream& in, std::ostream& out) {
  const TriAlgebra a = load_valid(o.path, in);
  Report r;
  r.add("multiplier_dim", h2(a, 1).h2_dim);
  r.print(out, o.as_json);
  return kExitPass;
}

int cmd_cover(const Options& o, std::istream& in, std::ostream& out) {
  const TriAlgebra a = load_valid(o.path, in);
  const Cover c = cover(a);
  const auto& ext = c.extension;
  const std::string name = a.name().empty() ? "cover" : "cover-of-" + a.name();
  const std::string file = io::emit_algebra(ext.total.renamed(name), ext.kernel);
  if (o.out_path.empty()) {
    out << file;
    return kExitPass;
  }
  write_output(o.out_path, file, out);
  Report r;
  r.add("cover_dim", ext.total.dim());
  r.add("multiplier_dim", c.multiplier_dim);
  r.add("stem", ext.is_stem());
  r.add("kernel_dim", ext.kernel.dim());
  r.add("written", o.out_path);
  r.print(out, o.as_json);
  return kExitPass;
}

int cmd_zstar(const Options& o, std::istream& in, std::ostream& out) {
  const TriAlgebra a = load_valid(o.path, in);
  const Subspace zs = z_star(a).space;
  const Subspace z = center(a).space;
  Report r;
  add_subspace(r, "z_star", zs);
  add_subspace(r, "center", z);
  r.add("unicentral", zs == z);
  r.print(out, o.as_json);
  return kExitPass;
}

int cmd_unicentral(const Options& o, std::istream& in, std::ostream& out) {
  const TriAlgebra a = load_valid(o.path, in);
  Report r;
  r.add("unicentral", is_unicentral(a));
  r.print(out, o.as_json);
  return kExitPass;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const TriAlgebra a = load_valid(o.path, in);
  std::vector<Subspace> ideals;
  if (o.all_central) {
    Rng rng(o.seed);
    ideals = gen::sample_central_ideals(a, rng, o.samples);
  } else {
    std::vector<Vector> gens;
    for (const auto& spec : o.z) gens.push_back(parse_generator(a, spec));
    const Subspace z = Subspace::span(a.field(), a.dim(), gens);
    require_central(a, z);
    ideals.push_back(z);
  }

  bool all_ok = true;
  Report r;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const std::string p = ideals.size() == 1 ? "z" : "z[" + std::to_string(i) + "]";
    const AlgSubspace z(a, ideals[i]);
    add_subspace(r, p, z.space);

    const FiveTermReport five = verify_five_term(a, z, o.k);
    add_counts(r, p + ".five_term.dims", five.dims);
    add_counts(r, p + ".five_term.ranks", five.ranks);
    r.add(p + ".five_term", pass_text(five.passed()));

    const InfDeltaReport id = verify_inf_delta(a, z);
    r.add(p + ".inf_delta.delta_rank", id.delta_rank);
    r.add(p + ".inf_delta", pass_text(id.passed()));

    const TraImageReport ti = tra_image_theorem(a, z);
    r.add(p + ".tra_image.rank", ti.tra_rank);
    r.add(p + ".tra_image.derived_center_dim", ti.derived_center_dim);
    r.add(p + ".tra_image", pass_text(ti.passed()));

    const EquivalenceReport eq = theorem_equivalence(a, z);
    json conds = {eq.delta_trivial, eq.inf2_surjective, eq.multiplier_relation, eq.inside_z_star};
    std::string ctext;
    for (const auto& c : conds) ctext += (ctext.empty() ? "" : " ") + c.dump();
    r.add(p + ".equivalence.conditions", conds, ctext);
    r.add(p + ".equivalence", pass_text(eq.agree()));

    const StallingsReport st = stallings_check(a, z);
    add_counts(r, p + ".stallings.dims", st.dims);
    add_counts(r, p + ".stallings.ranks", st.ranks);
    r.add(p + ".stallings", pass_text(st.passed()));

    all_ok = all_ok && five.passed() && id.passed() && ti.passed() && eq.agree() && st.passed();
  }
  r.add("result", pass_text(all_ok));
  r.print(out, o.as_json);
  return all_ok ? kExitPass : kExitTheoremFailure;
}

int cmd_gen(const Options& o, std::istream& in, std::ostream& out) {
  const Field field = Field::parse(o.field);
  std::optional<Subspace> kernel;
  TriAlgebra a;
  if (o.kind == "abelian") {
    a = gen::abelian(field, o.n);
  } else if (o.kind == "cover-abelian") {
    a = gen::cover_abelian(field, o.n);
  } else if (o.kind == "random-ext") {
    const TriAlgebra base = named_base(o.base, field, in);
    Rng rng(o.seed);
    const CentralExtension ext = gen::random_extension(base, o.k, rng);
    a = ext.total.renamed("random-ext");
    kernel = ext.kernel;
  } else {
    a = named_base(o.kind, field, in);
  }
  write_output(o.out_path, io::emit_algebra(a, kernel), out);
  return kExitPass;
}

int cmd_table(const Options& o, std::ostream& out) {
  Report r;
  for (const auto& row : bound_table(o.n)) {
    const std::string key = row.algebra_class + "[" + std::to_string(row.n) + "]";
    r.add(key, json{row.derived_bound, row.total_bound},
          std::to_string(row.derived_bound) + " " + std::to_string(row.total_bound));
  }
  r.print(out, o.as_json);
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact computations for finite-dimensional triassociative algebras"};
  app.require_subcommand(1);
  Options o;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", o.path, "algebra file, - for stdin")->capture_default_str();
    sub->add_flag("--json", o.as_json, "emit JSON instead of key = value lines");
    return sub;
  };
  auto* validate = with_file(app.add_subcommand("validate", "check the eleven identities"));
  auto* invariants = with_file(app.add_subcommand("invariants", "dimensions of L, L', Z(L), L'∩Z(L), Hom(L,F)"));
  auto* h2_cmd = with_file(app.add_subcommand("h2", "second cohomology with coefficients F^k"));
  h2_cmd->add_option("-k", o.k, "coefficient dimension")->capture_default_str();
  h2_cmd->add_flag("--reps", o.reps, "print class representatives");
  auto* multiplier = with_file(app.add_subcommand("multiplier", "dimension of the Schur multiplier"));
  auto* cover_cmd = with_file(app.add_subcommand("cover", "construct a cover"));
  cover_cmd->add_option("-o,--out", o.out_path, "write the cover here and print a report");
  auto* zstar = with_file(app.add_subcommand("zstar", "image of the cover's center"));
  auto* unicentral = with_file(app.add_subcommand("unicentral", "whether Z*(L) = Z(L)"));
  auto* verify = with_file(app.add_subcommand("verify", "exact sequence checks for central ideals"));
  verify->add_option("--z", o.z, "generator of Z: e<i> (1-based) or a comma separated vector; repeatable");
  verify->add_flag("--all-central", o.all_central, "sample central ideals: 0, the center, lines, random subspaces");
  verify->add_option("-k", o.k, "coefficient dimension for the five-term sequence")->capture_default_str();
  verify->add_option("--seed", o.seed, "seed for --all-central sampling")->capture_default_str();
  verify->add_option("--samples", o.samples, "random subspaces for --all-central")->capture_default_str();
  auto* gen_cmd = app.add_subcommand("gen", "generate an algebra file");
  gen_cmd->add_option("kind", o.kind,
                      "abelian | cover-abelian | random-ext | vdash-square | unit | upper-triangular | truncated-polyM")
      ->required();
  gen_cmd->add_option("-n", o.n, "dimension parameter")->capture_default_str();
  gen_cmd->add_option("-k", o.k, "kernel dimension for random-ext")->capture_default_str();
  gen_cmd->add_option("--base", o.base, "base for random-ext: a generator name or a file")->capture_default_str();
  gen_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  gen_cmd->add_option("--field", o.field, "Q or Fp:<prime>")->capture_default_str();
  gen_cmd->add_option("-o,--out", o.out_path, "output file (default stdout)");
  auto* table = app.add_subcommand("table", "dimension bounds for n = 1..N");
  table->add_option("-n", o.n, "largest n")->capture_default_str();
  table->add_flag("--json", o.as_json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, in, out);
    if (invariants->parsed()) return cmd_invariants(o, in, out);
    if (h2_cmd->parsed()) return cmd_h2(o, in, out);
    if (multiplier->parsed()) return cmd_multiplier(o, in, out);
    if (cover_cmd->parsed()) return cmd_cover(o, in, out);
    if (zstar->parsed()) return cmd_zstar(o, in, out);
    if (unicentral->parsed()) return cmd_unicentral(o, in, out);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (gen_cmd->parsed()) return cmd_gen(o, in, out);
    if (table->parsed()) return cmd_table(o, out);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what();
    if (e.line()) err << " (line " << *e.line() << ")";
    err << '\n';
    return kExitInputError;
  } catch (const NotCentral& e) {
    err << "error: " << e.what() << ": offending vector " << vector_text(e.offending()) << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace triassoc::cli
