#pragma once

/**
 * @file pretzel.hpp
 * @brief Genus-one pretzel knots P(2p+1, 2q+1, 2r+1).
 *
 * Every integer triple names a knot, since all three twist counts are odd.
 * The mirror of P(l,m,n) is P(-l,-m,-n), which in the (p,q,r) coordinates
 * is k ↦ -k-1.
 */

#include "laurent.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

namespace pretzelsurg {

struct PretzelParams {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;

  std::array<std::int64_t, 3> sorted() const {
    std::array<std::int64_t, 3> v{p, q, r};
    std::sort(v.begin(), v.end());
    return v;
  }
  bool has(std::int64_t v) const { return p == v || q == v || r == v; }
  std::string str() const {
    return "(" + std::to_string(p) + ", " + std::to_string(q) + ", " + std::to_string(r) + ")";
  }
  /// The knot's twist counts (2p+1, 2q+1, 2r+1).
  std::string knot_name() const {
    return "P(" + std::to_string(2 * p + 1) + "," + std::to_string(2 * q + 1) + "," +
           std::to_string(2 * r + 1) + ")";
  }

  friend bool operator==(const PretzelParams&, const PretzelParams&) = default;
  friend auto operator<=>(const PretzelParams&, const PretzelParams&) = default;
};

/// (p,q,r) ↦ (q,r,p)
inline PretzelParams cyclic_permute(const PretzelParams& k) { return {k.q, k.r, k.p}; }

/// (p,q,r) ↦ (-p-1, -q-1, -r-1)
inline PretzelParams mirror(const PretzelParams& k) { return {-k.p - 1, -k.q - 1, -k.r - 1}; }

/// Unknotted exactly when both -1 and 0 occur among the parameters.
inline bool is_unknot(const PretzelParams& k) { return k.has(-1) && k.has(0); }

/// {p,q,r} is one of {-1,1,1}, {-1,-1,-1}, {0,0,0}, {0,-2,-2} as a multiset.
inline bool is_trefoil(const PretzelParams& k) {
  using T = std::array<std::int64_t, 3>;
  const auto s = k.sorted();
  return s == T{-1, 1, 1} || s == T{-1, -1, -1} || s == T{0, 0, 0} || s == T{-2, -2, 0};
}

/// c·t - (2c - 1) + c·t⁻¹ with c = (p+1)(q+1)(r+1) - pqr.
inline LaurentPoly alexander(const PretzelParams& k) {
  const Integer p = k.p, q = k.q, r = k.r;
  const Integer c = (p + 1) * (q + 1) * (r + 1) - p * q * r;
  LaurentPoly out;
  out.add_term(1, c);
  out.add_term(0, -(2 * c - 1));
  out.add_term(-1, c);
  return out;
}

/// The closed-form Jones polynomial; the division by t + 2 + t⁻¹ is exact.
inline LaurentPoly jones(const PretzelParams& k) {
  const std::int64_t s = k.p + k.q + k.r;
  LaurentPoly inner = -LaurentPoly::t(-2 * (s + 2)) - LaurentPoly::t(-2 * (s + 1)) +
                      LaurentPoly::t(-2 * (k.p + k.q + 1)) + LaurentPoly::t(-2 * (k.q + k.r + 1)) +
                      LaurentPoly::t(-2 * (k.r + k.p + 1));
  const LaurentPoly tri = LaurentPoly::t(1) + LaurentPoly(1) + LaurentPoly::t(-1);
  const LaurentPoly numerator = tri * inner + LaurentPoly(1);
  const LaurentPoly denominator = LaurentPoly::t(1) + LaurentPoly(2) + LaurentPoly::t(-1);
  return numerator.exact_div(denominator);
}

}  // namespace pretzelsurg
