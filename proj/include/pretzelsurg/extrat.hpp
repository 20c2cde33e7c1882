#pragma once

/**
 * @file extrat.hpp
 * @brief Exact arithmetic on the rational projective line Q ∪ {∞}.
 *
 * ExtRat is a point of the projective line, kept in lowest terms with a
 * positive denominator. There is exactly one infinity and no 0/0.
 * Slope adds the "unfilled" marker used for Dehn filling tuples, and
 * MoebiusMap is an integral fractional-linear map acting on both.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pretzelsurg {

using Integer = boost::multiprecision::cpp_int;

inline int sign(const Integer& v) { return v.sign(); }

class ExtRat {
 public:
  /// Zero.
  ExtRat() : num_(0), den_(1) {}
  ExtRat(long long n) : num_(n), den_(1) {}  // NOLINT: integers are points of the line
  explicit ExtRat(const Integer& n) : num_(n), den_(1) {}

  /// Reduce (num, den) to canonical form; den == 0 yields infinity.
  static ExtRat normalize(Integer num, Integer den) {
    if (num == 0 && den == 0)
      throw std::domain_error("ExtRat: 0/0 is indeterminate");
    ExtRat x;
    if (den == 0) {
      x.num_ = 1;
      x.den_ = 0;
      return x;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Integer g = boost::multiprecision::gcd(num, den);
    x.num_ = num / g;
    x.den_ = den / g;
    return x;
  }

  static ExtRat infinity() {
    ExtRat x;
    x.num_ = 1;
    x.den_ = 0;
    return x;
  }

  /// Accepts "n", "n/d" and "inf".
  static ExtRat parse(std::string_view text);

  bool is_infinite() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }
  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  /// "inf", "n" for integers, otherwise "n/d".
  std::string str() const {
    if (is_infinite()) return "inf";
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Finite values by magnitude; infinity sorts above every finite value.
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
      return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Integer num_;
  Integer den_;
};

inline ExtRat ExtRat::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Integer {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  if (text == "inf" || text == "infinity") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExtRat(parse_int(text));
  Integer n = parse_int(text.substr(0, slash));
  Integer d = parse_int(text.substr(slash + 1));
  if (n == 0 && d == 0) throw std::invalid_argument("0/0 is not a slope");
  return normalize(n, d);
}

/// A filling slope: a point of the projective line or the unfilled marker.
class Slope {
 public:
  Slope() = default;  // unfilled
  Slope(ExtRat value) : value_(std::move(value)) {}  // NOLINT
  Slope(long long n) : value_(ExtRat(n)) {}          // NOLINT

  static Slope unfilled() { return Slope(); }
  static Slope parse(std::string_view text) {
    if (text == "phi" || text == "-") return unfilled();
    return Slope(ExtRat::parse(text));
  }

  bool filled() const { return value_.has_value(); }
  const ExtRat& value() const {
    if (!value_) throw std::logic_error("Slope: unfilled slope has no value");
    return *value_;
  }
  bool is(const ExtRat& x) const { return value_ && *value_ == x; }

  std::string str() const { return value_ ? value_->str() : "phi"; }

  friend bool operator==(const Slope&, const Slope&) = default;
  /// Unfilled sorts first.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.filled() != b.filled())
      return a.filled() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!a.filled()) return std::strong_ordering::equal;
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<ExtRat> value_;
};

/// x ↦ (ax + b) / (cx + d) with ad − bc ≠ 0.
class MoebiusMap {
 public:
  MoebiusMap(Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (det() == 0) throw std::invalid_argument("MoebiusMap: singular matrix");
  }

  static MoebiusMap identity() { return {1, 0, 0, 1}; }
  /// x ↦ x + k
  static MoebiusMap shift(long long k) { return {1, k, 0, 1}; }

  Integer det() const { return a_ * d_ - b_ * c_; }

  ExtRat operator()(const ExtRat& x) const {
    if (x.is_infinite()) return ExtRat::normalize(a_, c_);
    return ExtRat::normalize(a_ * x.num() + b_ * x.den(), c_ * x.num() + d_ * x.den());
  }

  Slope operator()(const Slope& s) const {
    if (!s.filled()) return s;
    return Slope((*this)(s.value()));
  }

  /// Adjugate; represents the inverse map.
  MoebiusMap inverse() const { return {d_, -b_, -c_, a_}; }

  /// (m2 * m1)(x) == m2(m1(x))
  friend MoebiusMap operator*(const MoebiusMap& m2, const MoebiusMap& m1) {
    return {m2.a_ * m1.a_ + m2.b_ * m1.c_, m2.a_ * m1.b_ + m2.b_ * m1.d_,
            m2.c_ * m1.a_ + m2.d_ * m1.c_, m2.c_ * m1.b_ + m2.d_ * m1.d_};
  }

  /// Equality as maps: matrices proportional.
  friend bool operator==(const MoebiusMap& x, const MoebiusMap& y) {
    const Integer* u[4] = {&x.a_, &x.b_, &x.c_, &x.d_};
    const Integer* v[4] = {&y.a_, &y.b_, &y.c_, &y.d_};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (*u[i] * *v[j] != *u[j] * *v[i]) return false;
    return true;
  }

  bool is_identity() const { return *this == identity(); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

 private:
  Integer a_, b_, c_, d_;
};

/// Thrown when an orbit grows past its cap.
class OrbitCapExceeded : public std::runtime_error {
 public:
  explicit OrbitCapExceeded(std::size_t cap)
      : std::runtime_error("orbit exceeded cap of " + std::to_string(cap) + " points"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultOrbitCap = 1000;

/// Closure of {x} under the given maps. Throws OrbitCapExceeded past `cap` points.
inline std::set<ExtRat> anharmonic_orbit(const ExtRat& x, std::span<const MoebiusMap> maps,
                                         std::size_t cap = kDefaultOrbitCap) {
  if (maps.empty()) throw std::invalid_argument("anharmonic_orbit: no maps");
  std::set<ExtRat> orbit{x};
  std::vector<ExtRat> frontier{x};
  while (!frontier.empty()) {
    ExtRat y = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& m : maps) {
      auto [it, inserted] = orbit.insert(m(y));
      if (!inserted) continue;
      if (orbit.size() > cap) throw OrbitCapExceeded(cap);
      frontier.push_back(*it);
    }
  }
  return orbit;
}

/// Entry maps of the 5-chain moves: 1/x, 1 − x, x/(x − 1).
inline const std::vector<MoebiusMap>& five_chain_entry_maps() {
  static const std::vector<MoebiusMap> maps{{0, 1, 1, 0}, {-1, 1, 0, 1}, {1, 0, 1, -1}};
  return maps;
}

/// Entry maps of the 4-chain moves: (x − 2)/(x − 1), 2 − x, x/(x − 1).
inline const std::vector<MoebiusMap>& four_chain_entry_maps() {
  static const std::vector<MoebiusMap> maps{{1, -2, 1, -1}, {-1, 2, 0, 1}, {1, 0, 1, -1}};
  return maps;
}

}  // namespace pretzelsurg
