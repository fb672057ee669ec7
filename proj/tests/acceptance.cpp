// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "support/oracles.hpp"
#include "triassoc/generators.hpp"
#include "triassoc/sequences.hpp"

using namespace triassoc;

namespace {

int failures = 0;

void line(const std::string& id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << detail << "\n";
  if (!ok) ++failures;
}

template <class T, std::size_t N>
std::string join(const std::array<T, N>& xs) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < N; ++i) s << (i ? "," : "") << xs[i];
  s << ")";
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1 ----

struct AbelianCoverRow {
  std::size_t multiplier = 0, cover_dim = 0, derived = 0, center = 0;
  bool kernel_matches = false;
  bool operator==(const AbelianCoverRow&) const = default;
};

std::vector<AbelianCoverRow> abelian_covers(const Field& f, double* n4_seconds) {
  std::vector<AbelianCoverRow> rows;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const Cover c = cover(gen::abelian(f, n));
    const TriAlgebra& k = c.extension.total;
    const bool valid = validate_axioms(k).passed();
    const Subspace kd = derived(k).space, kz = center(k).space;
    if (n == 4 && n4_seconds) *n4_seconds = seconds_since(t0);
    rows.push_back({c.multiplier_dim, k.dim(), kd.dim(), kz.dim(),
                    valid && kd == kz && kd == c.extension.kernel});
  }
  return rows;
}

bool abelian_rows_match_paper(const std::vector<AbelianCoverRow>& rows) {
  for (std::size_t n = 1; n <= rows.size(); ++n) {
    const AbelianCoverRow want{3 * n * n, n + 3 * n * n, 3 * n * n, 3 * n * n, true};
    if (!(rows[n - 1] == want)) return false;
  }
  return true;
}

// ---- criterion 3 ----

struct OracleTally {
  std::size_t triples = 0, members = 0, mismatches = 0;
  std::vector<std::size_t> z2_dims;
};

std::vector<TriAlgebra> criterion3_bases(const Field& f) {
  return {gen::abelian(f, 2), gen::vdash_square(f), gen::cover_abelian(f, 1)};
}

// Extensions that passed validation are collected for criterion 4.
OracleTally cocycle_oracle(const Field& f, std::size_t per_base, std::vector<TriAlgebra>* accepted) {
  OracleTally tally;
  Rng rng(20240601);
  for (const TriAlgebra& b : criterion3_bases(f)) {
    const Subspace z2 = z2_space(b, 1);
    tally.z2_dims.push_back(z2.dim());
    const oracle::Dense db = oracle::dense(b);
    const std::size_t amb = CochainTriple::ambient_dim(b.dim(), 1);
    for (std::size_t trial = 0; trial < per_base; ++trial) {
      Vector v;
      switch (trial % 3) {
        case 0:  // cocycle
          v = z2.combine(rng.vector(f, z2.dim(), -3, 3));
          break;
        case 1:  // cocycle with one coordinate disturbed
          v = z2.combine(rng.vector(f, z2.dim(), -3, 3));
          v[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(amb) - 1))] +=
              f.from_int(rng.uniform(1, 2));
          break;
        default:  // arbitrary sparse triple
          v = lin::zero_vector(f, amb);
          for (auto& x : v)
            if (rng.uniform(0, 4) == 0) x = f.from_int(rng.uniform(-2, 2));
      }
      const CochainTriple t(b, 1, v);
      const bool member = z2.contains(v);
      const TriAlgebra e = extension_algebra(b, t);
      const ValidationReport rep = validate_axioms(e);
      const auto lib = rep.violated_axioms();
      const auto ind = oracle::violated(oracle::extension(db, t));
      const bool agree = member == rep.passed() && lib == cocycle_violations(t) &&
                         std::set<int>(lib.begin(), lib.end()) == ind;
      ++tally.triples;
      if (member) ++tally.members;
      if (!agree) ++tally.mismatches;
      if (member && accepted && !t.is_zero() && accepted->size() < 12) accepted->push_back(e);
    }
  }
  return tally;
}

// ---- criteria 4-6 ----

struct Pair {
  TriAlgebra l;
  AlgSubspace z;
};

std::vector<Pair> sequence_pairs(const Field& f, const std::vector<TriAlgebra>& extensions) {
  std::vector<Pair> out;
  Rng rng(77);
  std::vector<TriAlgebra> algebras = criterion3_bases(f);
  algebras.insert(algebras.end(), extensions.begin(), extensions.end());
  for (const TriAlgebra& l : algebras)
    for (const Subspace& z : gen::sample_central_ideals(l, rng, 1)) out.push_back({l, AlgSubspace(l, z)});
  // every central ideal of e1⊢e1 = e2: the center is the line span(e2)
  const TriAlgebra d2 = gen::vdash_square(f);
  out.push_back({d2, AlgSubspace(d2, Subspace::zero(f, 2))});
  out.push_back({d2, center(d2)});
  return out;
}

struct FiveTermSummary {
  std::size_t pairs = 0, failed = 0;
  FiveTermReport d2;
};

FiveTermSummary five_term(const Field& f, const std::vector<Pair>& pairs) {
  FiveTermSummary s;
  for (const Pair& p : pairs) {
    ++s.pairs;
    if (!verify_five_term(p.l, p.z, 1).passed()) ++s.failed;
  }
  const TriAlgebra d2 = gen::vdash_square(f);
  s.d2 = verify_five_term(d2, AlgSubspace(d2, Subspace::span(f, 2, {lin::unit_vector(f, 2, 1)})), 1);
  return s;
}

// ---- criterion 2 oracle: count the product slots a derived algebra can span ----

std::pair<std::uint64_t, std::uint64_t> slot_count(const std::string& cls, std::uint64_t n) {
  std::uint64_t slots = 0;
  const int ops = cls == "Triassociative" ? 3 : cls == "Diassociative" ? 2 : 1;
  for (int op = 0; op < ops; ++op)
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j)
        if (cls != "Lie" || i < j) ++slots;
  return {slots, slots + n};
}

}  // namespace

int main() {
  const Field Q = Field::rationals();
  const auto start = std::chrono::steady_clock::now();

  // 1
  {
    double n4 = 0;
    const auto rows = abelian_covers(Q, &n4);
    std::ostringstream d;
    for (std::size_t n = 1; n <= rows.size(); ++n)
      d << "n=" << n << " M=" << rows[n - 1].multiplier << " K=" << rows[n - 1].cover_dim << " K'=Z(K)=ker "
        << (rows[n - 1].kernel_matches ? "yes" : "no") << "; ";
    d << "n=4 cover+checks " << n4 << "s";
    line("1 abelian multipliers and covers", abelian_rows_match_paper(rows) && n4 < 10.0, d.str());
  }

  // 2
  {
    const auto rows = bound_table(10);
    bool table_ok = rows.size() == 50;
    for (const auto& r : rows) table_ok = table_ok && slot_count(r.algebra_class, r.n) == std::pair{r.derived_bound, r.total_bound};
    const auto corpus = gen::random_corpus(Q, 60, 6, 4242);
    std::size_t bounded = 0;
    for (const TriAlgebra& a : corpus) bounded += check_dim_bounds(a).passed();
    bool tight = true;
    for (std::size_t n = 1; n <= 3; ++n) {
      const TriAlgebra k = gen::cover_abelian(Q, n);
      const DimBoundReport r = check_dim_bounds(k, center(k).space);
      tight = tight && r.passed() && r.derived_tight && r.total_tight;
    }
    std::ostringstream d;
    d << "table rows " << rows.size() << (table_ok ? " match" : " differ") << "; bounds hold on " << bounded << "/"
      << corpus.size() << "; equality on cover-abelian n=1..3 " << (tight ? "yes" : "no");
    line("2 dimension bounds", table_ok && bounded == corpus.size() && corpus.size() >= 50 && tight, d.str());
  }

  // 3
  std::vector<TriAlgebra> extensions;
  {
    const OracleTally t = cocycle_oracle(Q, 120, &extensions);
    std::ostringstream d;
    d << t.triples << " triples (" << t.members << " cocycles), " << t.mismatches << " disagreements";
    line("3 cocycle vs extension oracle", t.mismatches == 0 && t.triples >= 300, d.str());
  }

  // 4
  const std::vector<Pair> pairs = sequence_pairs(Q, extensions);
  {
    const FiveTermSummary s = five_term(Q, pairs);
    std::ostringstream d;
    d << s.pairs - s.failed << "/" << s.pairs << " pairs exact; dim-2/span(e2) dims " << join(s.d2.dims)
      << " ranks " << join(s.d2.ranks);
    line("4 five-term exactness", s.failed == 0 && s.d2.passed(), d.str());
    const std::array<std::size_t, 5> stated_dims{0, 1, 1, 3, 2};
    const std::array<std::size_t, 4> stated_ranks{0, 0, 1, 2};
    std::ostringstream e;
    e << "expected dims " << join(stated_dims) << " ranks " << join(stated_ranks) << ", computed "
      << join(s.d2.dims) << " " << join(s.d2.ranks)
      << " (Hom(L/Z,F) is 1-dimensional and Inf1 is injective, so the expected tuple is not exact)";
    line("4 dim-2/span(e2) stated tuple", s.d2.dims == stated_dims && s.d2.ranks == stated_ranks, e.str());
  }

  // 5
  {
    std::size_t ok = 0;
    for (const Pair& p : pairs) ok += tra_image_theorem(p.l, p.z).passed();
    const Cover c = cover(gen::abelian(Q, 1));
    const TraImageReport r = tra_image_theorem(c.extension.total, AlgSubspace(c.extension.total, c.extension.kernel));
    std::ostringstream d;
    d << ok << "/" << pairs.size() << " pairs; n=1 cover with Z = kernel: rank Tra " << r.tra_rank
      << ", dim L'∩Z " << r.derived_center_dim;
    line("5 image of Tra", ok == pairs.size() && r.tra_rank == 3 && r.derived_center_dim == 3 &&
             c.extension.total.dim() == 4,
         d.str());
  }

  // 6
  {
    std::size_t delta_ok = 0, agree = 0;
    for (const Pair& p : pairs) {
      delta_ok += verify_inf_delta(p.l, p.z).passed();
      agree += theorem_equivalence(p.l, p.z).agree();
    }
    const TriAlgebra d2 = gen::vdash_square(Q);
    const EquivalenceReport t = theorem_equivalence(d2, AlgSubspace(d2, Subspace::span(Q, 2, {lin::unit_vector(Q, 2, 1)})));
    const bool all_true = t.delta_trivial && t.inf2_surjective && t.multiplier_relation && t.inside_z_star;
    bool all_false = true;
    for (std::size_t n = 1; n <= 2; ++n) {
      const TriAlgebra a = gen::abelian(Q, n);
      const EquivalenceReport r = theorem_equivalence(a, AlgSubspace(a, Subspace::full(Q, n)));
      all_false = all_false && !r.delta_trivial && !r.inf2_surjective && !r.multiplier_relation && !r.inside_z_star;
    }
    std::ostringstream d;
    d << "Inf2/delta exact on " << delta_ok << "/" << pairs.size() << "; four conditions agree on " << agree << "/"
      << pairs.size() << "; dim-2 all true " << (all_true ? "yes" : "no") << "; abelian n=1,2 with Z=L all false "
      << (all_false ? "yes" : "no");
    line("6 Inf2/delta and the four conditions", delta_ok == pairs.size() && agree == pairs.size() && all_true && all_false,
         d.str());
  }

  // 7
  {
    Rng rng(5);
    std::vector<TriAlgebra> algebras = {gen::abelian(Q, 1), gen::abelian(Q, 2), gen::vdash_square(Q),
                                        gen::cover_abelian(Q, 1)};
    for (const TriAlgebra& a : gen::random_corpus(Q, 10, 4, 808)) algebras.push_back(a);
    std::size_t stable = 0;
    for (const TriAlgebra& l : algebras) {
      const CohomologyResult h = h2(l, 1);
      const Fingerprint base = fingerprint(cover(l).extension.total);
      bool same = true;
      for (int round = 0; round < 3; ++round) {
        std::vector<CochainTriple> reps = h.h2_reps;
        for (std::size_t i = reps.size(); i > 1; --i)
          std::swap(reps[i - 1], reps[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(i) - 1))]);
        same = same && fingerprint(stem_extension_from_cocycles(l, reps).total) == base;
      }
      stable += same;
    }
    std::ostringstream d;
    d << stable << "/" << algebras.size() << " algebras give one fingerprint under 3 permuted representative orders";
    line("7 cover fingerprints", stable == algebras.size(), d.str());
  }

  // 8
  {
    std::vector<TriAlgebra> algebras = {gen::abelian(Q, 2), gen::vdash_square(Q), gen::cover_abelian(Q, 1)};
    for (const TriAlgebra& a : gen::random_corpus(Q, 12, 4, 909)) algebras.push_back(a);
    std::size_t consistent = 0;
    for (std::size_t i = 0; i < algebras.size(); ++i) {
      const StemImageReport r = stem_center_image_check(algebras[i], 5, 100 + i);
      consistent += r.cover_images.size() == 5 && r.covers_agree && r.covers_equal_z_star && r.z_star_in_center;
    }
    const StemImageReport d2 = stem_center_image_check(gen::vdash_square(Q), 5, 1);
    bool every_image_is_center = d2.unicentral && d2.trivial_image == d2.center;
    for (const auto& s : d2.cover_images) every_image_is_center = every_image_is_center && s == d2.center;
    for (const auto& s : d2.partial_images) every_image_is_center = every_image_is_center && s == d2.center;
    std::ostringstream d;
    d << consistent << "/" << algebras.size() << " algebras: 5 covers share one center image = Z* inside Z(L); dim-2 "
      << "algebra " << d2.cover_images.size() + d2.partial_images.size() + 1 << " stem images all equal Z(L) "
      << (every_image_is_center ? "yes" : "no");
    line("8 Z* consistency", consistent == algebras.size() && every_image_is_center && d2.passed(), d.str());
  }

  // 9
  {
    std::vector<AbelianCoverRow> q_rows = abelian_covers(Q, nullptr);
    const OracleTally q_tally = cocycle_oracle(Q, 0, nullptr);
    const FiveTermSummary q_five = five_term(Q, {});
    for (std::uint64_t p : {5u, 7u}) {
      const Field f = Field::prime(p);
      const auto rows = abelian_covers(f, nullptr);
      std::vector<TriAlgebra> ext;
      const OracleTally t = cocycle_oracle(f, 120, &ext);
      const FiveTermSummary s = five_term(f, sequence_pairs(f, ext));
      const bool same_dims = rows == q_rows && t.z2_dims == q_tally.z2_dims && s.d2.dims == q_five.d2.dims &&
                             s.d2.ranks == q_five.d2.ranks;
      std::ostringstream d;
      d << "criterion 1 " << (abelian_rows_match_paper(rows) ? "ok" : "differs") << "; criterion 3 " << t.triples
        << " triples, " << t.mismatches << " disagreements; criterion 4 " << s.pairs - s.failed << "/" << s.pairs
        << " exact, dim-2 dims " << join(s.d2.dims) << " ranks " << join(s.d2.ranks) << "; dimensions match Q "
        << (same_dims ? "yes" : "no");
      line("9 over F" + std::to_string(p), abelian_rows_match_paper(rows) && t.mismatches == 0 && s.failed == 0 &&
                                                s.d2.passed() && same_dims,
           d.str());
    }
  }

  std::cout << "total " << seconds_since(start) << "s, " << failures << " failing line(s)\n";
  return failures == 0 ? 0 : 1;
}
