#pragma once

/**
 * @file acceptance.hpp
 * @brief The end-to-end verification suite, shared by the acceptance test
 * binary and `pretzelsurg selfcheck`.
 *
 * Every check is exact; there are no tolerances. Cube bounds default to the
 * full scale and can be capped with AcceptanceOptions::range_cap.
 */

#include "chainfill.hpp"
#include "classify.hpp"
#include "extrat.hpp"
#include "grouppres.hpp"
#include "oracles.hpp"
#include "pretzel.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace pretzelsurg {

struct AcceptanceOptions {
  std::int64_t range_cap = 0;  // 0: full scale
  std::size_t budget = kDefaultStateBudget;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0x5eed'2024;
};

struct CriterionResult {
  CriterionResult(int id, std::string title) : id(id), title(std::move(title)) {}

  int id = 0;
  std::string title;
  bool passed = false;
  std::size_t undecided = 0;  // engine runs that hit the state budget
  std::string detail;
};

namespace acceptance {

inline std::int64_t scaled(const AcceptanceOptions& o, std::int64_t full) {
  return o.range_cap > 0 ? std::min(o.range_cap, full) : full;
}

inline void for_cube(std::int64_t b, const std::function<void(const PretzelParams&)>& fn) {
  for (std::int64_t p = -b; p <= b; ++p)
    for (std::int64_t q = -b; q <= b; ++q)
      for (std::int64_t r = -b; r <= b; ++r) fn({p, q, r});
}

/// Collects the first few failures of a criterion.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) text_ += (text_.empty() ? "" : "; ") + what;
  }
  std::size_t count() const { return count_; }
  std::string str() const {
    return count_ > 5 ? text_ + "; ... (" + std::to_string(count_) + " total)" : text_;
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

/// The closed-form hyperbolicity test agrees with the 5-chain engine on
/// every non-trivial triple of the cube, with no undecided runs.
inline CriterionResult oracle_equivalence(const AcceptanceOptions& o) {
  const std::int64_t b = scaled(o, 4);
  const auto report = cross_check(b, o.budget, o.jobs);
  CriterionResult res{1, "closed-form hyperbolicity == 5-chain orbit engine on [-" + std::to_string(b) + "," +
                             std::to_string(b) + "]^3"};
  res.undecided = report.undecided;
  res.passed = report.passed() && report.undecided == 0 && report.checked > 0;
  std::ostringstream d;
  d << report.checked << " triples, " << report.skipped_unknots << " unknots skipped, " << report.mismatches.size()
    << " mismatches, " << report.undecided << " undecided, max orbit " << report.max_orbit;
  for (std::size_t i = 0; i < std::min<std::size_t>(3, report.mismatches.size()); ++i)
    d << "; " << report.mismatches[i].params.str() << " -> " << verdict_name(report.mismatches[i].verdict);
  res.detail = d.str();
  return res;
}

/// One-component fillings (α, φ, φ) of the 3-chain link are exceptional
/// exactly for α ∈ {0, 1, 2, 3, ∞}.
inline CriterionResult three_chain_single_fillings(const AcceptanceOptions& o) {
  CriterionResult res{2, "3-chain (a, phi, phi) exceptional exactly for a in {0,1,2,3,inf}"};
  const std::set<ExtRat> expected{0, 1, 2, 3, ExtRat::infinity()};
  std::set<ExtRat> slopes{ExtRat::infinity()};
  for (long long a = -20; a <= 20; ++a)
    for (long long d = -20; d <= 20; ++d)
      if (d != 0) slopes.insert(ExtRat::normalize(a, d));
  Failures fail;
  std::set<ExtRat> found;
  for (const auto& a : slopes) {
    const Decision dec = orbit_decide({LinkKind::chain3, {Slope(a), Slope::unfilled(), Slope::unfilled()}}, o.budget);
    if (dec.verdict == Verdict::undecided) {
      ++res.undecided;
      fail.add(a.str() + " undecided");
      continue;
    }
    const bool exc = dec.verdict == Verdict::exceptional;
    if (exc) found.insert(a);
    if (exc != (expected.count(a) > 0)) fail.add(a.str() + " -> " + verdict_name(dec.verdict));
    if (exc != one_filling_3chain_exceptional(a)) fail.add(a.str() + " disagrees with the closed form");
  }
  res.passed = fail.count() == 0 && found == expected;
  res.detail = std::to_string(slopes.size()) + " slopes, " + std::to_string(found.size()) + " exceptional" +
               (fail.count() ? "; " + fail.str() : "");
  return res;
}

/// Anharmonic orbits of -1, 0 and ∞ under the 5- and 4-chain entry maps.
inline CriterionResult orbit_tables(const AcceptanceOptions&) {
  CriterionResult res{3, "orbit tables under the 5-chain and 4-chain entry maps"};
  const ExtRat inf = ExtRat::infinity();
  auto q = [](long long n, long long d) { return ExtRat::normalize(n, d); };
  struct Row {
    const char* name;
    const std::vector<MoebiusMap>& maps;
    ExtRat start;
    std::set<ExtRat> expected;
  };
  const std::vector<Row> rows{
      {"5-chain orbit of -1", five_chain_entry_maps(), -1, {-1, q(1, 2), 2}},
      {"5-chain orbit of inf", five_chain_entry_maps(), inf, {0, 1, inf}},
      {"4-chain orbit of -1", four_chain_entry_maps(), -1, {-1, q(1, 2), q(3, 2), 3}},
      {"4-chain orbit of 0", four_chain_entry_maps(), 0, {0, 2}},
      {"4-chain orbit of inf", four_chain_entry_maps(), inf, {1, inf}},
  };
  Failures fail;
  for (const auto& row : rows)
    if (anharmonic_orbit(row.start, row.maps) != row.expected) fail.add(row.name);
  res.passed = fail.count() == 0;
  res.detail = fail.count() ? fail.str() : "5 orbits reproduced";
  return res;
}

/// With -2, -1, 0, 1 absent, no guarded 5-chain move ever fires and the
/// cut manifold is hyperbolic.
inline CriterionResult guard_dormancy(const AcceptanceOptions& o) {
  const std::int64_t b = scaled(o, 6);
  CriterionResult res{4, "guarded 5-chain moves dormant when -2,-1,0,1 are absent, on [-" + std::to_string(b) + "," +
                             std::to_string(b) + "]^3"};
  Failures fail;
  std::size_t n = 0;
  for_cube(b, [&](const PretzelParams& k) {
    if (k.has(-2) || k.has(-1) || k.has(0) || k.has(1)) return;
    ++n;
    const Decision d = hyperbolic_oracle(k, o.budget);
    if (d.verdict == Verdict::undecided) ++res.undecided;
    if (d.guarded_applications != 0) fail.add(k.str() + " fired a guarded move");
    if (d.verdict != Verdict::hyperbolic) fail.add(k.str() + " -> " + verdict_name(d.verdict));
  });
  res.passed = fail.count() == 0;
  res.detail = std::to_string(n) + " triples" + (fail.count() ? "; " + fail.str() : "");
  return res;
}

inline CriterionResult polynomial_identities(const AcceptanceOptions& o) {
  const std::int64_t b = scaled(o, 10);
  const std::int64_t fb = scaled(o, 6);
  CriterionResult res{5, "Alexander/Jones identities on [-" + std::to_string(b) + "," + std::to_string(b) +
                             "]^3, Fox oracle on [-" + std::to_string(fb) + "," + std::to_string(fb) + "]^3"};
  Failures fail;
  const LaurentPoly divisor = LaurentPoly::t(1) + LaurentPoly(2) + LaurentPoly::t(-1);
  for_cube(b, [&](const PretzelParams& k) {
    const LaurentPoly a = alexander(k);
    if (!a.is_symmetric()) fail.add(k.str() + " alexander not symmetric");
    if (a.eval_at_one() != 1) fail.add(k.str() + " alexander(1) != 1");
    LaurentPoly v;
    try {
      v = jones(k);
    } catch (const std::domain_error&) {
      fail.add(k.str() + " jones numerator not divisible");
      return;
    }
    if ((v == LaurentPoly(1)) != is_unknot(k)) fail.add(k.str() + " jones == 1 disagrees with the unknot test");
    if (std::abs(k.p) <= fb && std::abs(k.q) <= fb && std::abs(k.r) <= fb &&
        !equal_up_to_unit(fox_alexander(k), a))
      fail.add(k.str() + " fox != closed form");
  });
  res.passed = fail.count() == 0;
  res.detail = fail.count() ? fail.str() : "all identities hold";
  return res;
}

inline CriterionResult homology(const AcceptanceOptions& o) {
  const std::int64_t b = scaled(o, 6);
  CriterionResult res{6, "H1 of knot group/0-surgery = Z, cut manifold = Z^2 on [-" + std::to_string(b) + "," +
                             std::to_string(b) + "]^3; SNF == gcd-of-minors on 200 matrices"};
  Failures fail;
  const AbelianInvariants z{1, {}}, z2{2, {}};
  const std::size_t relabel[2] = {words::b, words::a};  // A ↦ b, C ↦ a
  for_cube(b, [&](const PretzelParams& k) {
    if (abelian_invariants(lin_presentation(k)) != z) fail.add(k.str() + " knot group");
    if (abelian_invariants(zero_surgery_presentation(k)) != z) fail.add(k.str() + " 0-surgery");
    const auto cut = cut_manifold_presentation(k);
    const auto xp = xpqr_presentation(k);
    if (abelian_invariants(cut) != z2) fail.add(k.str() + " cut manifold");
    if (abelian_invariants(xp) != z2) fail.add(k.str() + " surgery presentation");
    if (xp.relators[0].relabeled(relabel).reduced() != cut.relators[0].reduced())
      fail.add(k.str() + " relabeling does not carry one relator to the other");
  });
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = std::min(dim(rng), 4), cols = dim(rng);
    IntMatrix m(rows, std::vector<Integer>(cols));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const auto snf = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < snf.size(); ++i)
      if (snf[i + 1] != 0 && (snf[i] == 0 || snf[i + 1] % snf[i] != 0)) fail.add("SNF divisibility, trial " + std::to_string(trial));
    if (snf != oracle::invariant_factors(m)) fail.add("SNF != minors, trial " + std::to_string(trial));
  }
  res.passed = fail.count() == 0;
  res.detail = fail.count() ? fail.str() : "all invariants match";
  return res;
}

inline bool same_up_to_chirality(const JsjResult& a, const JsjResult& b) {
  if (a.case_label != b.case_label || a.tori != b.tori || a.pieces.size() != b.pieces.size()) return false;
  auto flipped = b.pieces;
  for (auto& piece : flipped)
    if (piece.chirality) piece.chirality = *piece.chirality == Chirality::left ? Chirality::right : Chirality::left;
  std::sort(flipped.begin(), flipped.end());
  return a.pieces == flipped;
}

inline CriterionResult classification_totality(const AcceptanceOptions& o) {
  const std::int64_t b = scaled(o, 10);
  CriterionResult res{7, "case table total, cyclic-invariant and mirror-compatible on [-" + std::to_string(b) + "," +
                             std::to_string(b) + "]^3"};
  Failures fail;
  std::size_t counts[8] = {};
  for_cube(b, [&](const PretzelParams& k) {
    const JsjResult j = classify(k);
    const std::string lit = oracle::literal_case(k);
    if (j.case_label != lit) fail.add(k.str() + " " + j.case_label + " vs literal " + lit);
    const int c = j.case_label.back() - '0';
    if (c >= 1 && c <= 7) ++counts[c];
    for (const auto& rot : {cyclic_permute(k), cyclic_permute(cyclic_permute(k))}) {
      const JsjResult jr = classify(rot);
      if (jr.case_label != j.case_label || jr.tori != j.tori || jr.pieces != j.pieces)
        fail.add(k.str() + " not cyclic-invariant");
    }
    if (!same_up_to_chirality(classify(mirror(k)), j)) fail.add(k.str() + " mirror incompatible");
    const bool hyp = j.case_label == "1.1.7";
    if (hyp != (!is_unknot(k) && !cut_is_nonhyperbolic(k))) fail.add(k.str() + " 1.1.7 vs closed form");
    if (j.case_label == "1.1.4")
      for (const auto& piece : j.pieces)
        if (piece.kind != PieceKind::seifert_annulus || piece.order < 2) fail.add(k.str() + " 1.1.4 order");
  });
  res.passed = fail.count() == 0;
  std::ostringstream d;
  d << "counts";
  for (int c = 1; c <= 7; ++c) d << " 1.1." << c << "=" << counts[c];
  if (fail.count()) d << "; " << fail.str();
  res.detail = d.str();
  return res;
}

inline CriterionResult spot_values(const AcceptanceOptions&) {
  CriterionResult res{8, "case-table spot values"};
  struct Spot {
    PretzelParams k;
    const char* label;
    int tori;
    std::vector<JsjPiece> pieces;
  };
  std::vector<Spot> spots{
      {{-1, 0, 9}, "1.1.1", 0, {JsjPiece::of(PieceKind::sphere_cross_circle)}},
      {{-1, 1, 5}, "1.1.3", 1, {JsjPiece::seifert(5)}},
      {{2, -1, 3}, "1.1.4", 2, {JsjPiece::seifert(2), JsjPiece::seifert(3)}},
      {{3, 0, 4}, "1.1.4", 2, {JsjPiece::seifert(4), JsjPiece::seifert(5)}},
      {{-2, 1, 7}, "1.1.5", 1, {JsjPiece::seifert(2)}},
      {{2, -2, 2}, "1.1.6", 2, {JsjPiece::of(PieceKind::sigma03_cross_circle), JsjPiece::trefoil(Chirality::left)}},
      {{-3, 1, -3}, "1.1.6", 2, {JsjPiece::of(PieceKind::sigma03_cross_circle), JsjPiece::trefoil(Chirality::right)}},
      {{1, 1, 1}, "1.1.7", 1, {JsjPiece::of(PieceKind::hyperbolic)}},
  };
  Failures fail;
  for (auto& s : spots) {
    std::sort(s.pieces.begin(), s.pieces.end());
    const JsjResult j = classify(s.k);
    if (j.case_label != s.label || j.tori != s.tori || j.pieces != s.pieces) fail.add(s.k.str());
  }
  res.passed = fail.count() == 0;
  res.detail = fail.count() ? fail.str() : std::to_string(spots.size()) + " spot values reproduced";
  return res;
}

/// The smaller chain-link fillings available when r = 1 agree with the closed form.
inline CriterionResult reduced_links(const AcceptanceOptions& o) {
  const std::int64_t b = scaled(o, 6);
  CriterionResult res{9, "4-chain and 3-chain shortcuts for r = 1 agree with the closed form on [-" +
                             std::to_string(b) + "," + std::to_string(b) + "]^2"};
  Failures fail;
  std::size_t n = 0;
  for (std::int64_t p = -b; p <= b; ++p)
    for (std::int64_t q = -b; q <= b; ++q) {
      const PretzelParams k{p, q, 1};
      if (is_unknot(k)) continue;
      const auto t = reduced_tuple(k);
      if (!t) continue;
      ++n;
      const Decision d = orbit_decide(*t, o.budget);
      if (d.verdict == Verdict::undecided) ++res.undecided;
      if (d.verdict == Verdict::undecided || (d.verdict == Verdict::exceptional) != cut_is_nonhyperbolic(k))
        fail.add(k.str() + " " + t->str() + " -> " + verdict_name(d.verdict));
    }
  res.passed = fail.count() == 0 && n > 0;
  res.detail = std::to_string(n) + " triples" + (fail.count() ? "; " + fail.str() : "");
  return res;
}

}  // namespace acceptance

inline std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& o = {},
    const std::function<void(const CriterionResult&)>& on_result = nullptr) {
  using namespace acceptance;
  std::vector<CriterionResult> out;
  for (auto* fn : {oracle_equivalence, three_chain_single_fillings, orbit_tables, guard_dormancy,
                   polynomial_identities, homology, classification_totality, spot_values, reduced_links}) {
    out.push_back(fn(o));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace pretzelsurg
