#pragma once

/**
 * @file grouppres.hpp
 * @brief Group presentations attached to a genus-one pretzel knot, their
 * abelianizations, and Fox-calculus Alexander polynomials.
 *
 *   knot group (Lin):   <a,b,t | t·a^{r+1}(ba)^q b·t⁻¹ = a^{r+1}(ba)^q,
 *                                t·b^{p+1}(ab)^q·t⁻¹ = b^{p+1}(ab)^q a>
 *   0-surgery:          the above plus b^p(ba)^{q+1}a^r = a^r(ab)^{q+1}b^p
 *   cut manifold:       <a,b | b^p(ba)^{q+1}a^r = a^r(ab)^{q+1}b^p>
 *   surgery side:       <A,C | A^p(AC)^{q+1}C^r = C^r(CA)^{q+1}A^p>
 *
 * Negative powers expand to inverse letters.
 */

#include "laurent.hpp"
#include "pretzel.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pretzelsurg {

struct Letter {
  std::size_t gen;
  int exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const auto& l : letters_)
      if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("Word: exponent must be ±1");
  }

  /// g^k as |k| letters.
  static Word gen(std::size_t g, std::int64_t k = 1) {
    Word w;
    const int e = k < 0 ? -1 : 1;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) w.letters_.push_back({g, e});
    return w;
  }

  Word inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
    return w;
  }

  /// w^k; negative k means (w⁻¹)^{-k}.
  Word pow(std::int64_t k) const {
    const Word base = k < 0 ? inverse() : *this;
    Word w;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) w *= base;
    return w;
  }

  Word& operator*=(const Word& o) {
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  Word reduced() const {
    Word w;
    for (const auto& l : letters_) {
      if (!w.letters_.empty() && w.letters_.back().gen == l.gen && w.letters_.back().exp == -l.exp)
        w.letters_.pop_back();
      else
        w.letters_.push_back(l);
    }
    return w;
  }
  bool is_reduced() const {
    for (std::size_t i = 1; i < letters_.size(); ++i)
      if (letters_[i].gen == letters_[i - 1].gen && letters_[i].exp == -letters_[i - 1].exp) return false;
    return true;
  }

  /// Replace generator g by image[g].
  Word relabeled(std::span<const std::size_t> image) const {
    Word w;
    for (const auto& l : letters_) w.letters_.push_back({image[l.gen], l.exp});
    return w;
  }

  std::vector<std::int64_t> exponent_sums(std::size_t generators) const {
    std::vector<std::int64_t> sums(generators, 0);
    for (const auto& l : letters_) sums.at(l.gen) += l.exp;
    return sums;
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Run-length form, e.g. "t a b^2 t^-1".
  std::string str(std::span<const std::string> names) const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      const long run = static_cast<long>(j - i) * letters_[i].exp;
      if (!out.empty()) out += " ";
      out += names[letters_[i].gen];
      if (run != 1) out += "^" + std::to_string(run);
      i = j;
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Adds lhs = rhs as the relator lhs·rhs⁻¹.
  void add_relation(const Word& lhs, const Word& rhs) { add_relator(lhs * rhs.inverse()); }
  void add_relator(Word w) {
    for (const auto& l : w.letters())
      if (l.gen >= generators.size()) throw std::invalid_argument("relator uses an undeclared generator");
    relators.push_back(std::move(w));
  }
  std::size_t index_of(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) throw std::invalid_argument("no generator " + name);
    return static_cast<std::size_t>(it - generators.begin());
  }

  std::string str() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
    out += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i)
      out += (i ? ", " : "") + relators[i].reduced().str(generators);
    return out + ">";
  }
};

namespace words {

// Generator indices used by the knot-side presentations.
inline constexpr std::size_t a = 0, b = 1, t = 2;

inline Word push_up_x(const PretzelParams& k) {  // a^{r+1}(ba)^q b
  return Word::gen(a, k.r + 1) * (Word::gen(b) * Word::gen(a)).pow(k.q) * Word::gen(b);
}
inline Word push_up_y(const PretzelParams& k) {  // b^{p+1}(ab)^q
  return Word::gen(b, k.p + 1) * (Word::gen(a) * Word::gen(b)).pow(k.q);
}
inline Word push_down_x(const PretzelParams& k) {  // a^{r+1}(ba)^q
  return Word::gen(a, k.r + 1) * (Word::gen(b) * Word::gen(a)).pow(k.q);
}
inline Word push_down_y(const PretzelParams& k) {  // b^{p+1}(ab)^q a
  return Word::gen(b, k.p + 1) * (Word::gen(a) * Word::gen(b)).pow(k.q) * Word::gen(a);
}

/// Both sides of x^p (xy)^{q+1} y^r = y^r (yx)^{q+1} x^p.
inline std::pair<Word, Word> longitude_sides(std::size_t x, std::size_t y, const PretzelParams& k) {
  Word lhs = Word::gen(x, k.p) * (Word::gen(x) * Word::gen(y)).pow(k.q + 1) * Word::gen(y, k.r);
  Word rhs = Word::gen(y, k.r) * (Word::gen(y) * Word::gen(x)).pow(k.q + 1) * Word::gen(x, k.p);
  return {lhs, rhs};
}

}  // namespace words

/// Knot group: generators a, b, t; t is the meridian.
inline Presentation lin_presentation(const PretzelParams& k) {
  using namespace words;
  Presentation P{{"a", "b", "t"}, {}};
  const Word tt = Word::gen(t);
  P.add_relation(tt * push_up_x(k) * tt.inverse(), push_down_x(k));
  P.add_relation(tt * push_up_y(k) * tt.inverse(), push_down_y(k));
  return P;
}

/// Fundamental group of the 0-surgery.
inline Presentation zero_surgery_presentation(const PretzelParams& k) {
  Presentation P = lin_presentation(k);
  auto [lhs, rhs] = words::longitude_sides(words::b, words::a, k);
  P.add_relation(lhs, rhs);
  return P;
}

/// Fundamental group of the 0-surgery cut along the capped-off Seifert torus.
inline Presentation cut_manifold_presentation(const PretzelParams& k) {
  Presentation P{{"a", "b"}, {}};
  auto [lhs, rhs] = words::longitude_sides(words::b, words::a, k);
  P.add_relation(lhs, rhs);
  return P;
}

/// The same group read off the chain-link surgery description (generators A, C).
inline Presentation xpqr_presentation(const PretzelParams& k) {
  Presentation P{{"A", "C"}, {}};
  auto [lhs, rhs] = words::longitude_sides(0, 1, k);
  P.add_relation(lhs, rhs);
  return P;
}

struct PeripheralWords {
  Word x_plus, y_plus, x_minus, y_minus;
};

/// Images of the boundary-torus generators in the cut-manifold group (generators a, b).
inline PeripheralWords peripheral_words(const PretzelParams& k) {
  return {words::push_up_x(k), words::push_up_y(k), words::push_down_x(k), words::push_down_y(k)};
}

// ---------------------------------------------------------------------------
// Abelianization

using IntMatrix = std::vector<std::vector<Integer>>;

/// Diagonal of the Smith normal form: min(rows, cols) nonnegative entries,
/// each dividing the next, zeros last.
inline std::vector<Integer> smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
  const std::size_t n = std::min(rows, cols);

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;  // trailing block is zero
      std::swap(m[k], m[pr]);
      for (auto& row : m) std::swap(row[k], row[pc]);

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        Integer f = m[i][k] / m[k][k];
        if (f != 0)
          for (std::size_t j = k; j < cols; ++j) m[i][j] -= f * m[k][j];
        if (m[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        Integer f = m[k][j] / m[k][k];
        if (f != 0)
          for (std::size_t i = k; i < rows; ++i) m[i][j] -= f * m[i][k];
        if (m[k][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility: fold an offending row into row k and retry.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (m[i][j] % m[k][k] != 0) {
            for (std::size_t c = k; c < cols; ++c) m[k][c] += m[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (m[k][k] == 0) break;
    if (m[k][k] < 0) m[k][k] = -m[k][k];
  }
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = m[i][i];
  return d;
}

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each ≥ 2, each dividing the next

  /// "Z^2", "Z + Z/2", "0"
  std::string str() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& d : torsion) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
  }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

inline IntMatrix relation_matrix(const Presentation& P) {
  IntMatrix m;
  for (const auto& w : P.relators) {
    std::vector<Integer> row;
    for (auto s : w.exponent_sums(P.generators.size())) row.emplace_back(s);
    m.push_back(std::move(row));
  }
  return m;
}

inline AbelianInvariants abelian_invariants(const Presentation& P) {
  const std::size_t gens = P.generators.size();
  AbelianInvariants inv;
  if (P.relators.empty()) {
    inv.free_rank = gens;
    return inv;
  }
  std::size_t nonzero = 0;
  for (const auto& d : smith_normal_form(relation_matrix(P))) {
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) inv.torsion.push_back(d);
  }
  inv.free_rank = gens - nonzero;
  return inv;
}

// ---------------------------------------------------------------------------
// Fox calculus

/// ∂w/∂x_j pushed into Z[t^±1], where generator g maps to t^{abelianizer[g]}.
inline LaurentPoly fox_derivative(const Word& w, std::size_t j, std::span<const std::int64_t> abelianizer) {
  LaurentPoly out;
  std::int64_t prefix = 0;
  for (const auto& l : w.letters()) {
    const std::int64_t g = abelianizer[l.gen];
    if (l.gen == j) {
      if (l.exp == 1)
        out.add_term(prefix, 1);
      else
        out.add_term(prefix - g, -1);
    }
    prefix += l.exp * g;
  }
  return out;
}

namespace detail {

inline LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  LaurentPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][c] * determinant(std::move(minor));
    if (c % 2) det -= term; else det += term;
  }
  return det;
}

}  // namespace detail

/// Alexander polynomial of a deficiency-one presentation: the Fox Jacobian
/// with the meridian's column deleted, normalized to be symmetric in
/// t ↔ t⁻¹ with a positive value at t = 1.
inline LaurentPoly fox_alexander(const Presentation& P, std::span<const std::int64_t> abelianizer,
                                 std::size_t meridian) {
  const std::size_t gens = P.generators.size();
  if (abelianizer.size() != gens) throw std::invalid_argument("fox_alexander: abelianizer size mismatch");
  if (meridian >= gens) throw std::invalid_argument("fox_alexander: meridian out of range");
  if (P.relators.size() + 1 != gens)
    throw std::invalid_argument("fox_alexander: presentation is not deficiency one");

  std::vector<std::vector<LaurentPoly>> jac;
  for (const auto& rel : P.relators) {
    std::vector<LaurentPoly> row;
    for (std::size_t g = 0; g < gens; ++g)
      if (g != meridian) row.push_back(fox_derivative(rel, g, abelianizer));
    jac.push_back(std::move(row));
  }
  LaurentPoly det = detail::determinant(std::move(jac));
  if (det.is_zero()) throw std::domain_error("fox_alexander: Fox matrix is singular");
  const auto span = det.max_degree() + det.min_degree();
  if (span % 2 != 0) throw std::domain_error("fox_alexander: determinant cannot be centred: " + det.str());
  det = det.shifted(-span / 2);
  if (det.eval_at_one() < 0 || (det.eval_at_one() == 0 && det.terms().rbegin()->second < 0)) det = -det;
  return det;
}

/// Fox oracle on the knot group: a, b ↦ 1 and t ↦ t, deleting the t column.
inline LaurentPoly fox_alexander(const PretzelParams& k) {
  const std::int64_t ab[3] = {0, 0, 1};
  return fox_alexander(lin_presentation(k), ab, words::t);
}

}  // namespace pretzelsurg
