#pragma once

/**
 * @file chainfill.hpp
 * @brief Exceptional-filling decisions for the minimally twisted chain links
 * with five (L10n113), four (L8n7) and three (L6a5) components.
 *
 * A filling of a chain link is non-hyperbolic exactly when, after some
 * composition of the link's moves, the slope tuple contains one of the
 * link's exceptional patterns. orbit_decide() runs that closure as a
 * breadth-first search over dihedral classes of tuples.
 *
 * Every move has the shape  new[i] = map_i(old[perm[i]])  with an optional
 * guard fixing the leading entries, so moves are stored as data and their
 * formal inverses are derived mechanically.
 */

#include "extrat.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pretzelsurg {

enum class LinkKind { chain5, chain4, chain3 };

constexpr std::size_t arity(LinkKind k) {
  switch (k) {
    case LinkKind::chain5: return 5;
    case LinkKind::chain4: return 4;
    case LinkKind::chain3: return 3;
  }
  return 0;
}

inline std::string link_name(LinkKind k) {
  switch (k) {
    case LinkKind::chain5: return "5chain";
    case LinkKind::chain4: return "4chain";
    case LinkKind::chain3: return "3chain";
  }
  return "?";
}

inline LinkKind parse_link(std::string_view s) {
  if (s == "5chain" || s == "L10n113") return LinkKind::chain5;
  if (s == "4chain" || s == "L8n7") return LinkKind::chain4;
  if (s == "3chain" || s == "L6a5" || s == "L6a7") return LinkKind::chain3;
  throw std::invalid_argument("unknown link: " + std::string(s));
}

class FillingTuple {
 public:
  FillingTuple(LinkKind kind, std::vector<Slope> slopes) : kind_(kind), slopes_(std::move(slopes)) {
    if (slopes_.size() != arity(kind_))
      throw std::invalid_argument("FillingTuple: " + link_name(kind_) + " takes " +
                                  std::to_string(arity(kind_)) + " slopes, got " +
                                  std::to_string(slopes_.size()));
  }

  LinkKind kind() const { return kind_; }
  std::size_t size() const { return slopes_.size(); }
  const Slope& operator[](std::size_t i) const { return slopes_[i]; }
  const std::vector<Slope>& slopes() const { return slopes_; }

  bool contains(const ExtRat& x) const {
    return std::any_of(slopes_.begin(), slopes_.end(), [&](const Slope& s) { return s.is(x); });
  }

  /// Index order i -> i+1 (mod n), starting at `start`.
  FillingTuple rotated(std::size_t start) const {
    std::vector<Slope> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(slopes_[(start + i) % size()]);
    return {kind_, std::move(out)};
  }
  FillingTuple reversed() const {
    return {kind_, std::vector<Slope>(slopes_.rbegin(), slopes_.rend())};
  }

  /// Lexicographically least tuple among all rotations and reflections.
  FillingTuple canonical() const {
    FillingTuple best = *this;
    for (std::size_t s = 0; s < size(); ++s) {
      FillingTuple r = rotated(s);
      if (r < best) best = r;
      FillingTuple f = r.reversed();
      if (f < best) best = f;
    }
    return best;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ", ";
      out += slopes_[i].str();
    }
    return out + ")";
  }

  friend bool operator==(const FillingTuple&, const FillingTuple&) = default;
  friend std::strong_ordering operator<=>(const FillingTuple& a, const FillingTuple& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.slopes_ <=> b.slopes_;
  }

 private:
  LinkKind kind_;
  std::vector<Slope> slopes_;
};

/// One move of a link's list (1-based `move`), possibly a formal inverse.
struct OpId {
  LinkKind link;
  int move;
  bool inverse = false;

  /// "c5.4", "c5.4^-1"
  std::string str() const {
    return "c" + std::to_string(arity(link)) + "." + std::to_string(move) + (inverse ? "^-1" : "");
  }
  friend bool operator==(const OpId&, const OpId&) = default;
};

/// Thrown when an OpId is applied to a tuple of a different link.
class OpMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

struct MoveSpec {
  std::vector<ExtRat> guard;           // required leading entries
  std::vector<std::size_t> perm;       // new[i] takes old[perm[i]]
  std::vector<MoebiusMap> maps;        // then map_i
  bool dihedral = false;               // rotation / reflection of the index cycle
  bool has_formal_inverse = false;

  MoveSpec inverted() const {
    MoveSpec inv = *this;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      inv.perm[perm[i]] = i;
      inv.maps[perm[i]] = maps[i].inverse();
    }
    return inv;
  }
};

inline MoebiusMap id() { return MoebiusMap::identity(); }

inline MoveSpec permute(std::vector<std::size_t> perm) {
  MoveSpec m;
  m.maps.assign(perm.size(), id());
  m.perm = std::move(perm);
  m.dihedral = true;
  return m;
}

inline MoveSpec entrywise(std::vector<ExtRat> guard, std::vector<std::size_t> perm,
                          std::vector<MoebiusMap> maps, bool has_inverse = false) {
  MoveSpec m;
  m.guard = std::move(guard);
  m.perm = std::move(perm);
  m.maps = std::move(maps);
  m.has_formal_inverse = has_inverse;
  return m;
}

inline std::vector<MoveSpec> build_moves(LinkKind k) {
  const MoebiusMap recip{0, 1, 1, 0};             // 1/x
  const MoebiusMap one_minus{-1, 1, 0, 1};        // 1 - x
  const MoebiusMap over_pred{1, 0, 1, -1};        // x/(x-1)
  const MoebiusMap dec = MoebiusMap::shift(-1);   // x - 1
  const MoebiusMap inc = MoebiusMap::shift(1);    // x + 1
  const ExtRat m1(-1), m2(-2);
  switch (k) {
    case LinkKind::chain5:
      return {
          permute({4, 0, 1, 2, 3}),
          permute({4, 3, 2, 1, 0}),
          entrywise({}, {1, 0, 2, 3, 4}, {recip, recip, one_minus, over_pred, one_minus}),
          entrywise({m1}, {0, 2, 3, 4, 1}, {id(), dec, id(), inc, id()}, true),
          entrywise({m1, m2, m2, m2}, {0, 1, 2, 3, 4}, {id(), id(), id(), id(), {-1, -6, 0, 1}}),
      };
    case LinkKind::chain4: {
      const MoebiusMap two_step{1, -2, 1, -1};    // (x-2)/(x-1)
      const MoebiusMap two_minus{-1, 2, 0, 1};    // 2 - x
      return {
          permute({3, 0, 1, 2}),
          permute({3, 2, 1, 0}),
          entrywise({}, {0, 1, 2, 3}, {two_step, two_step, two_step, two_step}),
          entrywise({}, {0, 1, 2, 3}, {two_minus, over_pred, two_minus, over_pred}),
          entrywise({m1}, {0, 2, 1, 3}, {id(), dec, inc, id()}, true),
          entrywise({m1, m2, m2}, {0, 1, 2, 3}, {id(), id(), id(), {-1, -4, 0, 1}}),
      };
    }
    case LinkKind::chain3: {
      const ExtRat half = ExtRat::normalize(1, 2);
      const ExtRat three_halves = ExtRat::normalize(3, 2);
      const ExtRat five_halves = ExtRat::normalize(5, 2);
      const MoebiusMap two_step{1, -2, 1, -1};
      return {
          permute({2, 1, 0}),
          permute({1, 0, 2}),
          entrywise({half}, {0, 1, 2}, {id(), {-1, 4, 0, 1}, {-1, 4, 0, 1}}),
          entrywise({three_halves}, {0, 1, 2}, {id(), {2, -5, 1, -2}, {2, -5, 1, -2}}),
          entrywise({five_halves}, {0, 1, 2}, {id(), {1, -3, 1, -2}, {2, -3, 1, -1}}, true),
          entrywise({ExtRat(4)}, {0, 1, 2}, {id(), two_step, two_step}),
          entrywise({m1, m2}, {0, 1, 2}, {id(), id(), {-1, -2, 0, 1}}),
          entrywise({m1, ExtRat(4)}, {0, 1, 2}, {id(), id(), recip}),
      };
    }
  }
  return {};
}

inline const std::vector<MoveSpec>& moves(LinkKind k) {
  static const std::vector<MoveSpec> c5 = build_moves(LinkKind::chain5);
  static const std::vector<MoveSpec> c4 = build_moves(LinkKind::chain4);
  static const std::vector<MoveSpec> c3 = build_moves(LinkKind::chain3);
  switch (k) {
    case LinkKind::chain5: return c5;
    case LinkKind::chain4: return c4;
    case LinkKind::chain3: return c3;
  }
  return c5;
}

inline const MoveSpec& move_spec(const OpId& op) {
  const auto& list = moves(op.link);
  if (op.move < 1 || static_cast<std::size_t>(op.move) > list.size())
    throw OpMismatch("no move " + op.str());
  const MoveSpec& m = list[op.move - 1];
  if (op.inverse && !m.has_formal_inverse) throw OpMismatch("move has no formal inverse: " + op.str());
  return m;
}

inline bool guard_holds(const MoveSpec& m, const FillingTuple& t) {
  for (std::size_t i = 0; i < m.guard.size(); ++i)
    if (!t[i].is(m.guard[i])) return false;
  return true;
}

inline FillingTuple apply_spec(const MoveSpec& m, const FillingTuple& t) {
  std::vector<Slope> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(m.maps[i](t[m.perm[i]]));
  return {t.kind(), std::move(out)};
}

}  // namespace detail

/// All OpIds of a link: every move, then formal inverses where defined.
inline std::vector<OpId> all_ops(LinkKind k) {
  std::vector<OpId> ops;
  const auto& list = detail::moves(k);
  for (std::size_t i = 0; i < list.size(); ++i) ops.push_back({k, static_cast<int>(i + 1), false});
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].has_formal_inverse) ops.push_back({k, static_cast<int>(i + 1), true});
  return ops;
}

inline bool is_guarded(const OpId& op) { return !detail::move_spec(op).guard.empty(); }
inline bool is_dihedral(const OpId& op) { return detail::move_spec(op).dihedral; }

/// Applies `op`; nullopt when its guard fails. Throws OpMismatch for a foreign op.
inline std::optional<FillingTuple> apply_op(const FillingTuple& t, const OpId& op) {
  if (op.link != t.kind()) throw OpMismatch(op.str() + " applied to a " + link_name(t.kind()) + " tuple");
  const auto& spec = detail::move_spec(op);
  if (!detail::guard_holds(spec, t)) return std::nullopt;
  if (op.inverse) return detail::apply_spec(spec.inverted(), t);
  return detail::apply_spec(spec, t);
}

/// Applies a witness path; throws std::runtime_error if a guard fails on the way.
inline FillingTuple replay(FillingTuple t, const std::vector<OpId>& path) {
  for (const auto& op : path) {
    auto next = apply_op(t, op);
    if (!next) throw std::runtime_error("replay: guard of " + op.str() + " fails at " + t.str());
    t = std::move(*next);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Exceptional patterns

struct PatternId {
  LinkKind link;
  std::size_t index;  // into exceptional_patterns(link)
  friend bool operator==(const PatternId&, const PatternId&) = default;
};

/// A scalar pattern is a single-entry tuple.
inline const std::vector<std::vector<ExtRat>>& exceptional_patterns(LinkKind k) {
  auto q = [](long long n, long long d) { return ExtRat::normalize(n, d); };
  const ExtRat inf = ExtRat::infinity();
  static const std::vector<std::vector<ExtRat>> c5{
      {inf},
      {-1, -2, -2, -1},
      {-2, q(-1, 2), 3, 3, q(-1, 2)},
      {-1, -2, -2, -3, -5},
      {-1, -2, -3, -2, -4},
      {-1, -3, -2, -2, -3},
      {-2, -2, -2, -2, -2},
  };
  static const std::vector<std::vector<ExtRat>> c4{
      {0}, {inf}, {-1, -2, -1}, {-2, -2, -2, -2}, {-1, -3, -2, -3}, {-1, -2, -3, -4},
  };
  static const std::vector<std::vector<ExtRat>> c3{
      {0}, {1}, {2}, {3}, {inf}, {-1, -1}, {-1, -3, -3}, {-2, -2, -2}, {q(2, 3), 4, 4},
  };
  switch (k) {
    case LinkKind::chain5: return c5;
    case LinkKind::chain4: return c4;
    case LinkKind::chain3: return c3;
  }
  return c5;
}

inline std::string pattern_str(const PatternId& id) {
  const auto& pat = exceptional_patterns(id.link).at(id.index);
  if (pat.size() == 1) return pat[0].str();
  std::string out = "(";
  for (std::size_t i = 0; i < pat.size(); ++i) out += (i ? "," : "") + pat[i].str();
  return out + ")";
}

/// First pattern occurring in `t`: a scalar anywhere, or a run of
/// consecutive entries in cyclic order read in either direction.
inline std::optional<PatternId> matches_exceptional(const FillingTuple& t) {
  const auto& pats = exceptional_patterns(t.kind());
  const std::size_t n = t.size();
  for (std::size_t pi = 0; pi < pats.size(); ++pi) {
    const auto& pat = pats[pi];
    if (pat.size() > n) continue;
    for (std::size_t start = 0; start < n; ++start) {
      for (int dir : {1, -1}) {
        bool ok = true;
        for (std::size_t j = 0; j < pat.size() && ok; ++j) {
          std::size_t idx = dir > 0 ? (start + j) % n : (start + n - j) % n;
          ok = t[idx].is(pat[j]);
        }
        if (ok) return PatternId{t.kind(), pi};
      }
    }
  }
  return std::nullopt;
}

/// A single filled entry α on the 3-chain link is exceptional iff α ∈ {0, 1, 2, 3, ∞}.
inline bool one_filling_3chain_exceptional(const ExtRat& a) {
  return a.is_infinite() || a == ExtRat(0) || a == ExtRat(1) || a == ExtRat(2) || a == ExtRat(3);
}

// ---------------------------------------------------------------------------
// Orbit search

enum class Verdict { exceptional, hyperbolic, undecided };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::exceptional: return "exceptional";
    case Verdict::hyperbolic: return "hyperbolic";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

struct Decision {
  Verdict verdict = Verdict::undecided;
  /// Exceptional: replayable path from the input to `reached`.
  std::vector<OpId> witness;
  std::optional<PatternId> pattern;
  std::optional<FillingTuple> reached;
  /// Dihedral classes visited: the orbit size when hyperbolic.
  std::size_t states = 0;
  /// Successful applications of guarded moves during the search.
  std::size_t guarded_applications = 0;
};

inline constexpr std::size_t kDefaultStateBudget = 100000;

namespace detail {

struct DihedralImage {
  FillingTuple tuple;
  std::vector<OpId> path;  // from the source tuple
};

/// All rotations/reflections of `t`, each with a path of dihedral moves.
inline std::vector<DihedralImage> dihedral_images(const FillingTuple& t) {
  std::vector<OpId> gens;
  for (const auto& op : all_ops(t.kind()))
    if (is_dihedral(op)) gens.push_back(op);
  std::vector<DihedralImage> images{{t, {}}};
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& g : gens) {
      FillingTuple next = apply_spec(move_spec(g), images[i].tuple);
      bool seen = std::any_of(images.begin(), images.end(),
                              [&](const DihedralImage& d) { return d.tuple == next; });
      if (seen) continue;
      auto path = images[i].path;
      path.push_back(g);
      images.push_back({std::move(next), std::move(path)});
    }
  }
  return images;
}

inline DihedralImage canonicalize(const FillingTuple& t) {
  auto images = dihedral_images(t);
  auto best = std::min_element(images.begin(), images.end(),
                               [](const auto& a, const auto& b) { return a.tuple < b.tuple; });
  return std::move(*best);
}

}  // namespace detail

/// Breadth-first closure of {t} under the link's moves and their formal
/// inverses, over dihedral classes. Stops at the first exceptional match.
inline Decision orbit_decide(const FillingTuple& t, std::size_t budget = kDefaultStateBudget) {
  if (budget == 0) throw std::invalid_argument("orbit_decide: budget must be positive");

  struct Node {
    FillingTuple tuple;       // canonical representative
    std::size_t parent;
    std::vector<OpId> steps;  // from the parent's representative to this one
  };
  std::vector<Node> nodes;
  std::set<FillingTuple> seen;
  Decision result;

  auto witness_to = [&](std::size_t i) {
    std::vector<std::size_t> chain{i};
    while (chain.back() != 0) chain.push_back(nodes[chain.back()].parent);
    std::vector<OpId> path;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      path.insert(path.end(), nodes[*it].steps.begin(), nodes[*it].steps.end());
    return path;
  };

  // Records the class of `raw`; true when it matches an exceptional pattern.
  // A match is reported on `raw` itself, so the witness ends at the move
  // that produced it.
  auto visit = [&](FillingTuple raw, detail::DihedralImage canon, std::size_t parent,
                   std::vector<OpId> steps) {
    const std::size_t id = nodes.size();
    seen.insert(canon.tuple);
    auto pat = matches_exceptional(raw);
    if (pat) {
      nodes.push_back({std::move(canon.tuple), parent, std::move(steps)});
      result.verdict = Verdict::exceptional;
      result.pattern = pat;
      result.reached = std::move(raw);
      result.witness = witness_to(id);
      return true;
    }
    steps.insert(steps.end(), canon.path.begin(), canon.path.end());
    nodes.push_back({std::move(canon.tuple), parent, std::move(steps)});
    return false;
  };

  std::vector<OpId> movers;
  for (const auto& op : all_ops(t.kind()))
    if (!is_dihedral(op)) movers.push_back(op);

  if (visit(t, detail::canonicalize(t), 0, {})) {
    result.states = nodes.size();
    return result;
  }

  for (std::size_t cur = 0; cur < nodes.size(); ++cur) {
    const FillingTuple base = nodes[cur].tuple;
    for (const auto& image : detail::dihedral_images(base)) {
      for (const auto& op : movers) {
        auto next = apply_op(image.tuple, op);
        if (!next) continue;
        if (is_guarded(op)) ++result.guarded_applications;
        auto canon = detail::canonicalize(*next);
        if (seen.count(canon.tuple)) continue;
        if (nodes.size() >= budget) {
          result.verdict = Verdict::undecided;
          result.states = nodes.size();
          return result;
        }
        auto steps = image.path;
        steps.push_back(op);
        if (visit(std::move(*next), std::move(canon), cur, std::move(steps))) {
          result.states = nodes.size();
          return result;
        }
      }
    }
  }
  result.verdict = Verdict::hyperbolic;
  result.states = nodes.size();
  return result;
}

}  // namespace pretzelsurg
