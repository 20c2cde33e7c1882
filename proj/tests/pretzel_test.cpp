#include <pretzelsurg/laurent.hpp>
#include <pretzelsurg/pretzel.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace pretzelsurg;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, long long>> terms) {
  LaurentPoly out;
  for (auto [e, c] : terms) out.add_term(e, c);
  return out;
}

bool same_or_mirror(const LaurentPoly& a, const LaurentPoly& b) { return a == b || a == b.invert_variable(); }

}  // namespace

TEST(Laurent, Arithmetic) {
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly x = t + 1, y = t - 1;
  EXPECT_EQ(x * y, LaurentPoly::t(2) - 1);
  EXPECT_EQ((x * y).exact_div(y), x);
  EXPECT_THROW((LaurentPoly::t(2) + 1).exact_div(x), std::domain_error);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(poly({{1, 7}, {0, -13}, {-1, 7}}).str(), "7t - 13 + 7t^-1");
  EXPECT_EQ(LaurentPoly(1).str(), "1");
}

TEST(Laurent, UnitsAndSymmetry) {
  const auto a = poly({{1, 1}, {0, -3}, {-1, 1}});
  EXPECT_TRUE(a.is_symmetric());
  EXPECT_TRUE(equal_up_to_unit(a.shifted(4), a));
  EXPECT_TRUE(equal_up_to_unit(-a.shifted(-2), a));
  EXPECT_FALSE(equal_up_to_unit(a, a + 1));
}

TEST(Laurent, RingProperties) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4), deg(-3, 3);
  auto random_poly = [&] {
    LaurentPoly p;
    for (int i = 0; i < 4; ++i) p.add_term(deg(rng), coef(rng));
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
    if (!b.is_zero()) {
      EXPECT_EQ((a * b).exact_div(b), a);
    }
  }
}

TEST(Pretzel, Moves) {
  EXPECT_EQ(cyclic_permute({1, -3, 5}), (PretzelParams{-3, 5, 1}));
  EXPECT_EQ(mirror({1, -2, 2}), (PretzelParams{-2, 1, -3}));
  for (std::int64_t p = -3; p <= 3; ++p)
    for (std::int64_t q = -3; q <= 3; ++q) EXPECT_EQ(mirror(mirror({p, q, 4})), (PretzelParams{p, q, 4}));
  EXPECT_EQ((PretzelParams{1, 1, 1}).knot_name(), "P(3,3,3)");
}

TEST(Pretzel, Recognition) {
  EXPECT_TRUE(is_unknot({-1, 0, 17}));
  EXPECT_FALSE(is_unknot({-1, -1, 3}));
  EXPECT_FALSE(is_unknot({1, 1, 1}));
  EXPECT_TRUE(is_trefoil({-1, 1, 1}));
  EXPECT_TRUE(is_trefoil({0, -2, -2}));
  EXPECT_TRUE(is_trefoil({0, 0, 0}));
  EXPECT_FALSE(is_trefoil({-1, -1, 1}));
}

TEST(Pretzel, AlexanderExamples) {
  EXPECT_EQ(alexander({-1, 0, 5}), LaurentPoly(1));
  EXPECT_EQ(alexander({1, 1, 1}), poly({{1, 7}, {0, -13}, {-1, 7}}));
  EXPECT_EQ(alexander({-1, 1, 1}), poly({{1, 1}, {0, -1}, {-1, 1}}));
}

// Values checked against standard knot tables.
TEST(Pretzel, KnownKnots) {
  const auto left_trefoil = poly({{-1, 1}, {-3, 1}, {-4, -1}});
  EXPECT_TRUE(same_or_mirror(jones({0, 0, 0}), left_trefoil));
  EXPECT_TRUE(same_or_mirror(jones({-1, -1, -1}), left_trefoil));
  const auto figure_eight = poly({{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}});
  EXPECT_EQ(jones({-1, -1, 1}), figure_eight);
  EXPECT_EQ(alexander({-1, -1, 1}), poly({{1, -1}, {0, 3}, {-1, -1}}));
  // 6_1 = P(5,-1,-1)
  EXPECT_TRUE(same_or_mirror(jones({2, -1, -1}), poly({{2, 1}, {1, -1}, {0, 2}, {-1, -2}, {-2, 1}, {-3, -1}, {-4, 1}})));
  // 9_46 = P(3,3,-3)
  EXPECT_TRUE(same_or_mirror(jones({1, 1, -2}),
                             poly({{0, 2}, {-1, -1}, {-2, 1}, {-3, -2}, {-4, 1}, {-5, -1}, {-6, 1}})));
  EXPECT_TRUE(equal_up_to_unit(alexander({1, 1, -2}), poly({{1, 2}, {0, -5}, {-1, 2}})));
}

TEST(Pretzel, JonesOfTheUnknotFamily) {
  EXPECT_EQ(jones({-1, 0, 3}), LaurentPoly(1));
  EXPECT_FALSE(jones({1, 1, 1}).is_constant());
}

TEST(Pretzel, InvariantsUnderSymmetry) {
  for (std::int64_t p = -5; p <= 5; ++p)
    for (std::int64_t q = -5; q <= 5; ++q)
      for (std::int64_t r = -5; r <= 5; ++r) {
        const PretzelParams k{p, q, r};
        EXPECT_EQ(alexander(cyclic_permute(k)), alexander(k));
        EXPECT_EQ(alexander({q, p, r}), alexander(k));
        EXPECT_EQ(alexander(mirror(k)), alexander(k));
        EXPECT_EQ(jones(cyclic_permute(k)), jones(k));
        EXPECT_EQ(jones(mirror(k)), jones(k).invert_variable());
        // V(1) = 1 for knots
        EXPECT_EQ(jones(k).eval_at_one(), 1);
      }
}
