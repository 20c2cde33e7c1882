#pragma once

/**
 * @file classify.hpp
 * @brief JSJ decomposition of the 0-surgery on P(2p+1, 2q+1, 2r+1).
 *
 * classify() is an ordered case table: the first matching case wins, which
 * makes "not in the cases above" literal. The hyperbolicity of the cut
 * manifold is decided in closed form by cut_is_nonhyperbolic() and checked
 * independently by running the 5-chain filling engine on the slope tuple
 * (-r, 1/(q+1), -p, φ, φ).
 */

#include "chainfill.hpp"
#include "pretzel.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace pretzelsurg {

enum class PieceKind {
  seifert_annulus,        // annulus base, one exceptional fiber of order ≥ 2
  annulus_cross_circle,   // annulus base, no exceptional fiber (T² × I)
  sigma03_cross_circle,   // three-holed sphere × S¹
  trefoil_complement,
  torus_bundle_period_six,
  sphere_cross_circle,
  hyperbolic,
};

enum class Chirality { left, right };

inline std::string piece_kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::seifert_annulus: return "seifert_annulus";
    case PieceKind::annulus_cross_circle: return "annulus_cross_circle";
    case PieceKind::sigma03_cross_circle: return "sigma03_cross_circle";
    case PieceKind::trefoil_complement: return "trefoil_complement";
    case PieceKind::torus_bundle_period_six: return "torus_bundle_period_six";
    case PieceKind::sphere_cross_circle: return "sphere_cross_circle";
    case PieceKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

inline std::string chirality_name(Chirality c) { return c == Chirality::left ? "left" : "right"; }

struct JsjPiece {
  PieceKind kind;
  std::int64_t order = 0;                 // seifert_annulus only
  std::optional<Chirality> chirality;     // trefoil_complement only

  static JsjPiece seifert(std::int64_t order) {
    if (order < 2) throw std::invalid_argument("exceptional fiber order must be at least 2");
    return {PieceKind::seifert_annulus, order, std::nullopt};
  }
  static JsjPiece trefoil(Chirality c) { return {PieceKind::trefoil_complement, 0, c}; }
  static JsjPiece of(PieceKind k) { return {k, 0, std::nullopt}; }

  std::string str() const {
    switch (kind) {
      case PieceKind::seifert_annulus:
        return "Seifert over annulus, one exceptional fiber of order " + std::to_string(order);
      case PieceKind::annulus_cross_circle: return "annulus x S^1 (T^2 x I)";
      case PieceKind::sigma03_cross_circle: return "Sigma_{0,3} x S^1";
      case PieceKind::trefoil_complement: return chirality_name(*chirality) + "-handed trefoil complement";
      case PieceKind::torus_bundle_period_six: return "torus bundle with periodic monodromy of order 6";
      case PieceKind::sphere_cross_circle: return "S^2 x S^1";
      case PieceKind::hyperbolic: return "hyperbolic";
    }
    return "?";
  }

  friend bool operator==(const JsjPiece&, const JsjPiece&) = default;
  friend auto operator<=>(const JsjPiece&, const JsjPiece&) = default;
};

struct JsjResult {
  std::string case_label;          // "1.1.1" … "1.1.7"
  int tori = 0;
  std::vector<JsjPiece> pieces;    // sorted
  std::vector<std::string> trace;  // normalization moves, in order
};

namespace detail {

/// Rotate so that `value` sits in the q slot; records the rotations.
inline PretzelParams rotate_to_q(PretzelParams k, std::int64_t value, std::vector<std::string>& trace) {
  for (int i = 0; i < 3 && k.q != value; ++i) {
    k = cyclic_permute(k);
    trace.push_back("cyclic_permute");
  }
  return k;
}

inline JsjResult make(std::string label, int tori, std::vector<JsjPiece> pieces,
                      std::vector<std::string> trace = {}) {
  std::sort(pieces.begin(), pieces.end());
  return {std::move(label), tori, std::move(pieces), std::move(trace)};
}

}  // namespace detail

inline JsjResult classify(const PretzelParams& k) {
  using detail::make;
  using T = std::array<std::int64_t, 3>;

  if (is_unknot(k)) return make("1.1.1", 0, {JsjPiece::of(PieceKind::sphere_cross_circle)});
  if (is_trefoil(k)) return make("1.1.2", 0, {JsjPiece::of(PieceKind::torus_bundle_period_six)});

  // -1 or 0 present: the cut manifold splits along one torus into two
  // annulus-based Seifert pieces of orders |p|,|r| (q = -1) or |p+1|,|r+1| (q = 0).
  for (std::int64_t marker : {std::int64_t{-1}, std::int64_t{0}}) {
    if (!k.has(marker)) continue;
    std::vector<std::string> trace;
    const PretzelParams n = detail::rotate_to_q(k, marker, trace);
    const std::int64_t shift = marker == 0 ? 1 : 0;
    const std::int64_t orders[2] = {std::abs(n.p + shift), std::abs(n.r + shift)};
    std::vector<JsjPiece> pieces;
    for (auto o : orders)
      if (o >= 2) pieces.push_back(JsjPiece::seifert(o));
    if (pieces.size() == 2) return make("1.1.4", 2, std::move(pieces), std::move(trace));
    // One regular side: the two pieces glue into a single Seifert piece.
    if (pieces.empty()) pieces.push_back(JsjPiece::of(PieceKind::annulus_cross_circle));
    return make("1.1.3", 1, std::move(pieces), std::move(trace));
  }

  if (k.has(-2) && k.has(1)) return make("1.1.5", 1, {JsjPiece::seifert(2)});

  const auto s = k.sorted();
  if (s == T{-2, 2, 2})
    return make("1.1.6", 2, {JsjPiece::of(PieceKind::sigma03_cross_circle), JsjPiece::trefoil(Chirality::left)});
  if (s == T{-3, -3, 1})
    return make("1.1.6", 2, {JsjPiece::of(PieceKind::sigma03_cross_circle), JsjPiece::trefoil(Chirality::right)});

  return make("1.1.7", 1, {JsjPiece::of(PieceKind::hyperbolic)});
}

/// Closed-form test: the cut manifold of a non-trivial knot is non-hyperbolic
/// iff -1 or 0 is a parameter, {-2,1} ⊆ {p,q,r}, or {p,q,r} is {-2,2,2} or {-3,-3,1}.
inline bool cut_is_nonhyperbolic(const PretzelParams& k) {
  using T = std::array<std::int64_t, 3>;
  if (is_unknot(k)) throw std::invalid_argument("cut_is_nonhyperbolic: unknot " + k.str());
  const auto s = k.sorted();
  return k.has(-1) || k.has(0) || (k.has(-2) && k.has(1)) || s == T{-2, 2, 2} || s == T{-3, -3, 1};
}

/// (-r, 1/(q+1), -p, φ, φ) on the 5-chain link.
inline FillingTuple cut_manifold_tuple(const PretzelParams& k) {
  return {LinkKind::chain5,
          {Slope(ExtRat(-k.r)), Slope(ExtRat::normalize(1, k.q + 1)), Slope(ExtRat(-k.p)), Slope::unfilled(),
           Slope::unfilled()}};
}

/// Smaller chain-link fillings available when 1 is a parameter in a fixed slot:
///   p = r = 1            → 3-chain ((2q+3)/(q+1), φ, φ)
///   q = -3, r = 1        → 3-chain (p+3, φ, φ)
///   p = -3, r = 1        → 3-chain (φ, φ, q+3)
///   r = 1                → 4-chain ((q+2)/(q+1), -p, φ, φ)
inline std::optional<FillingTuple> reduced_tuple(const PretzelParams& k) {
  const Slope phi = Slope::unfilled();
  if (k.r != 1) return std::nullopt;
  if (k.p == 1) return FillingTuple{LinkKind::chain3, {Slope(ExtRat::normalize(2 * k.q + 3, k.q + 1)), phi, phi}};
  if (k.q == -3) return FillingTuple{LinkKind::chain3, {Slope(ExtRat(k.p + 3)), phi, phi}};
  if (k.p == -3) return FillingTuple{LinkKind::chain3, {phi, phi, Slope(ExtRat(k.q + 3))}};
  return FillingTuple{LinkKind::chain4, {Slope(ExtRat::normalize(k.q + 2, k.q + 1)), Slope(ExtRat(-k.p)), phi, phi}};
}

/// The 5-chain engine's verdict on the cut manifold: exceptional means non-hyperbolic.
inline Decision hyperbolic_oracle(const PretzelParams& k, std::size_t budget = kDefaultStateBudget) {
  return orbit_decide(cut_manifold_tuple(k), budget);
}

struct OracleMismatch {
  PretzelParams params;
  bool closed_form_nonhyperbolic;
  Verdict verdict;
};

struct CrossCheckReport {
  std::size_t checked = 0;
  std::size_t skipped_unknots = 0;
  std::size_t max_orbit = 0;
  std::vector<OracleMismatch> mismatches;  // includes undecided triples, sorted
  std::size_t undecided = 0;

  bool passed() const { return mismatches.empty(); }
};

/// Compares the closed form with the 5-chain engine on every non-trivial
/// triple in [-bound, bound]³, using `jobs` worker threads.
inline CrossCheckReport cross_check(std::int64_t bound, std::size_t budget = kDefaultStateBudget,
                                    unsigned jobs = 1) {
  if (bound < 1) throw std::invalid_argument("cross_check: bound must be at least 1");
  std::vector<PretzelParams> triples;
  for (std::int64_t p = -bound; p <= bound; ++p)
    for (std::int64_t q = -bound; q <= bound; ++q)
      for (std::int64_t r = -bound; r <= bound; ++r) triples.push_back({p, q, r});

  CrossCheckReport report;
  std::mutex mu;
  std::size_t next = 0;
  auto worker = [&] {
    for (;;) {
      PretzelParams k;
      {
        std::lock_guard lock(mu);
        if (next == triples.size()) return;
        k = triples[next++];
      }
      if (is_unknot(k)) {
        std::lock_guard lock(mu);
        ++report.skipped_unknots;
        continue;
      }
      const bool expected = cut_is_nonhyperbolic(k);
      const Decision d = hyperbolic_oracle(k, budget);
      const bool agrees = d.verdict != Verdict::undecided &&
                          (d.verdict == Verdict::exceptional) == expected;
      std::lock_guard lock(mu);
      ++report.checked;
      report.max_orbit = std::max(report.max_orbit, d.states);
      if (d.verdict == Verdict::undecided) ++report.undecided;
      if (!agrees) report.mismatches.push_back({k, expected, d.verdict});
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const auto& a, const auto& b) { return a.params < b.params; });
  return report;
}

}  // namespace pretzelsurg
