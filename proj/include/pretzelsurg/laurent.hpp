#pragma once

// Integer Laurent polynomials in one variable t.

#include "extrat.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace pretzelsurg {

class LaurentPoly {
 public:
  using Exponent = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(long long c) { add_term(0, c); }  // NOLINT: constants

  static LaurentPoly monomial(const Integer& coef, Exponent e) {
    LaurentPoly p;
    p.add_term(e, coef);
    return p;
  }
  /// t^e
  static LaurentPoly t(Exponent e = 1) { return monomial(1, e); }

  void add_term(Exponent e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  Exponent min_degree() const { require_nonzero(); return terms_.begin()->first; }
  Exponent max_degree() const { require_nonzero(); return terms_.rbegin()->first; }
  Integer coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  const std::map<Exponent, Integer>& terms() const { return terms_; }

  Integer eval_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// p(t) ↦ p(t⁻¹)
  LaurentPoly invert_variable() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

  /// t^k · p
  LaurentPoly shifted(Exponent k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  bool is_symmetric() const { return *this == invert_variable(); }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  /// Exact quotient; throws std::domain_error on a nonzero remainder.
  LaurentPoly exact_div(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const Exponent dtop = divisor.max_degree();
    const Exponent dlow = divisor.min_degree();
    const Integer& lead = divisor.terms_.rbegin()->second;
    while (!rem.is_zero()) {
      const Exponent rtop = rem.max_degree();
      if (rtop - dtop < rem.min_degree() - dlow)
        throw std::domain_error("LaurentPoly: inexact division");
      const Integer& c = rem.terms_.rbegin()->second;
      if (c % lead != 0) throw std::domain_error("LaurentPoly: inexact division");
      LaurentPoly step = monomial(c / lead, rtop - dtop);
      quot += step;
      rem -= step * divisor;
    }
    return quot;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "7t - 13 + 7t^-1", highest degree first.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str();
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  void require_nonzero() const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly: zero polynomial has no degree");
  }

  std::map<Exponent, Integer> terms_;
};

/// a == ±t^k · b for some k.
inline bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  LaurentPoly s = b.shifted(a.min_degree() - b.min_degree());
  return a == s || a == -s;
}

}  // namespace pretzelsurg
