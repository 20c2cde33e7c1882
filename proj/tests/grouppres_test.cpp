#include <pretzelsurg/grouppres.hpp>
#include <pretzelsurg/oracles.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace pretzelsurg;

namespace {

const AbelianInvariants Z{1, {}};
const AbelianInvariants Z2{2, {}};

Word random_word(std::mt19937& rng, std::size_t gens, int length) {
  std::uniform_int_distribution<std::size_t> g(0, gens - 1);
  std::uniform_int_distribution<int> e(-2, 2);
  Word w;
  for (int i = 0; i < length; ++i) w = w * Word::gen(g(rng), e(rng));
  return w;
}

}  // namespace

TEST(Word, FreeReduction) {
  const Word w = Word::gen(0) * Word::gen(1, 2) * Word::gen(1, -2) * Word::gen(0, -1);
  EXPECT_TRUE(w.reduced().empty());
  EXPECT_TRUE((w * w.inverse()).reduced().empty());
  EXPECT_EQ((Word::gen(0, 3) * Word::gen(0, -1)).reduced().str(std::vector<std::string>{"a"}), "a^2");
}

TEST(Word, InverseAndPowerProperties) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
    EXPECT_TRUE((u * u.inverse()).reduced().empty());
    EXPECT_EQ((u * v).inverse().reduced(), (v.inverse() * u.inverse()).reduced());
    EXPECT_EQ(u.pow(-2).reduced(), u.inverse().pow(2).reduced());
    EXPECT_TRUE(u.reduced().is_reduced());
  }
}

TEST(Presentation, LinPresentationShape) {
  const auto P = lin_presentation({0, 0, 0});
  EXPECT_EQ(P.str(), "<a, b, t | t a b t^-1 a^-1, t b t^-1 a^-1 b^-1>");
  Presentation bad{{"a"}, {}};
  EXPECT_THROW(bad.add_relator(Word::gen(3)), std::invalid_argument);
  EXPECT_THROW(P.index_of("z"), std::invalid_argument);
}

TEST(Presentation, SurgeryRelatorIsARelabeling) {
  const std::size_t image[2] = {words::b, words::a};
  for (const PretzelParams k : {PretzelParams{1, 1, 1}, {2, -2, 2}, {3, -4, 5}, {-1, 0, 3}})
    EXPECT_EQ(xpqr_presentation(k).relators[0].relabeled(image).reduced(),
              cut_manifold_presentation(k).relators[0].reduced());
}

TEST(Presentation, PeripheralWordExponentSums) {
  const PretzelParams k{2, 3, -4};
  const auto w = peripheral_words(k);
  // a^{r+1}(ba)^q b
  EXPECT_EQ(w.x_plus.exponent_sums(2), (std::vector<std::int64_t>{k.r + 1 + k.q, k.q + 1}));
  EXPECT_EQ(w.y_plus.exponent_sums(2), (std::vector<std::int64_t>{k.q, k.p + 1 + k.q}));
  EXPECT_EQ(w.x_minus.exponent_sums(2), (std::vector<std::int64_t>{k.r + 1 + k.q, k.q}));
  EXPECT_EQ(w.y_minus.exponent_sums(2), (std::vector<std::int64_t>{k.q + 1, k.p + 1 + k.q}));
}

TEST(SmithNormalForm, Examples) {
  EXPECT_EQ(smith_normal_form({{2, 4}, {6, 8}}), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(smith_normal_form({{0, 0}, {0, 0}, {0, 0}}), (std::vector<Integer>{0, 0}));
  EXPECT_EQ(smith_normal_form({{2, 0}, {0, 3}}), (std::vector<Integer>{1, 6}));
}

TEST(SmithNormalForm, AgreesWithDeterminantalDivisors) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = dim(rng), cols = dim(rng) + 1;
    IntMatrix m(rows, std::vector<Integer>(cols));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    EXPECT_EQ(smith_normal_form(m), oracle::invariant_factors(m));
  }
}

TEST(Abelianization, Examples) {
  EXPECT_EQ(abelian_invariants(lin_presentation({0, 0, 0})), Z);
  EXPECT_EQ(abelian_invariants(lin_presentation({3, -4, 5})), Z);
  EXPECT_EQ(abelian_invariants(zero_surgery_presentation({1, 1, 1})), Z);
  EXPECT_EQ(abelian_invariants(cut_manifold_presentation({2, -2, 2})), Z2);
  EXPECT_EQ(abelian_invariants(cut_manifold_presentation({1, 1, 1})), Z2);
  EXPECT_EQ(abelian_invariants(xpqr_presentation({1, 1, 1})), Z2);
  EXPECT_EQ(abelian_invariants(cut_manifold_presentation({2, -2, 2})).str(), "Z^2");
  Presentation torsion{{"x"}, {}};
  torsion.add_relator(Word::gen(0, 6));
  EXPECT_EQ(abelian_invariants(torsion).str(), "Z/6");
}

TEST(Fox, FundamentalFormula) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::int64_t> e(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, 3, 8);
    const std::int64_t ab[3] = {e(rng), e(rng), e(rng)};
    LaurentPoly lhs;
    for (std::size_t j = 0; j < 3; ++j) lhs = lhs + fox_derivative(w, j, ab) * (LaurentPoly::t(ab[j]) - 1);
    std::int64_t total = 0;
    const auto sums = w.exponent_sums(3);
    for (std::size_t j = 0; j < 3; ++j) total += sums[j] * ab[j];
    EXPECT_EQ(lhs, LaurentPoly::t(total) - 1);
  }
}

TEST(Fox, AlexanderExamples) {
  LaurentPoly expected;
  expected.add_term(1, 7);
  expected.add_term(0, -13);
  expected.add_term(-1, 7);
  EXPECT_EQ(fox_alexander({1, 1, 1}), expected);
  EXPECT_EQ(fox_alexander({-1, 0, 4}), LaurentPoly(1));
  EXPECT_EQ(fox_alexander({-1, 1, 1}), LaurentPoly::t(1) - 1 + LaurentPoly::t(-1));
}

TEST(Fox, RequiresDeficiencyOne) {
  const std::int64_t ab[3] = {0, 0, 1};
  EXPECT_THROW(fox_alexander(zero_surgery_presentation({1, 1, 1}), ab, words::t), std::invalid_argument);
}
