#include <pretzelsurg/extrat.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace pretzelsurg;

namespace {

ExtRat q(long long n, long long d) { return ExtRat::normalize(n, d); }

}  // namespace

TEST(ExtRat, NormalizesSignAndGcd) {
  EXPECT_EQ(q(6, -4), q(-3, 2));
  EXPECT_EQ(q(6, -4).str(), "-3/2");
  EXPECT_EQ(q(-5, 0), ExtRat::infinity());
  EXPECT_EQ(q(0, -7), ExtRat(0));
  EXPECT_THROW(q(0, 0), std::domain_error);
}

TEST(ExtRat, ParseAndRender) {
  for (const char* s : {"inf", "0", "-7", "13/6", "-1/2"}) EXPECT_EQ(ExtRat::parse(s).str(), s);
  EXPECT_EQ(ExtRat::parse("4/2").str(), "2");
  EXPECT_THROW(ExtRat::parse("1/0x"), std::exception);
  EXPECT_THROW(ExtRat::parse(""), std::exception);
}

TEST(ExtRat, InfinityIsAboveEverything) {
  EXPECT_LT(ExtRat(1000000), ExtRat::infinity());
  EXPECT_LT(q(-1, 2), q(1, 3));
}

TEST(Slope, PhiIsUnfilled) {
  const Slope phi = Slope::parse("phi");
  EXPECT_FALSE(phi.filled());
  EXPECT_EQ(phi.str(), "phi");
  EXPECT_EQ(Slope::parse("1/3").value(), q(1, 3));
  EXPECT_LT(phi, Slope(0));
}

TEST(Moebius, ActsOnTheProjectiveLine) {
  const MoebiusMap recip(0, 1, 1, 0);
  EXPECT_EQ(recip(ExtRat(0)), ExtRat::infinity());
  EXPECT_EQ(recip(ExtRat::infinity()), ExtRat(0));
  const MoebiusMap m(1, 0, 1, -1);  // x/(x-1)
  EXPECT_EQ(m(ExtRat(1)), ExtRat::infinity());
  EXPECT_EQ(m(ExtRat::infinity()), ExtRat(1));
  EXPECT_EQ(m(ExtRat(2)), ExtRat(2));
  EXPECT_FALSE(m(Slope::unfilled()).filled());
  EXPECT_THROW(MoebiusMap(1, 2, 2, 4), std::invalid_argument);
}

TEST(Moebius, CompositionAndInverseProperties) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto random_map = [&] {
    for (;;) {
      int a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
      if (a * d - b * c != 0) return MoebiusMap(a, b, c, d);
    }
  };
  std::vector<ExtRat> points{ExtRat::infinity(), 0, 1, -1, q(2, 3), q(-7, 5), 11};
  for (int trial = 0; trial < 200; ++trial) {
    const MoebiusMap f = random_map(), g = random_map();
    EXPECT_TRUE((f * f.inverse()).is_identity());
    for (const auto& x : points) {
      EXPECT_EQ((f * g)(x), f(g(x)));
      EXPECT_EQ(f.inverse()(f(x)), x);
    }
  }
}

TEST(Moebius, EntryMapsAreInvolutions) {
  for (const auto* maps : {&five_chain_entry_maps(), &four_chain_entry_maps()})
    for (const auto& m : *maps) EXPECT_TRUE((m * m).is_identity());
}

TEST(AnharmonicOrbit, FiveChainTables) {
  const auto& f = five_chain_entry_maps();
  EXPECT_EQ(anharmonic_orbit(-1, f), (std::set<ExtRat>{-1, q(1, 2), 2}));
  EXPECT_EQ(anharmonic_orbit(ExtRat::infinity(), f), (std::set<ExtRat>{0, 1, ExtRat::infinity()}));
  EXPECT_EQ(anharmonic_orbit(5, f).size(), 6u);
}

TEST(AnharmonicOrbit, FourChainTables) {
  const auto& f = four_chain_entry_maps();
  EXPECT_EQ(anharmonic_orbit(-1, f), (std::set<ExtRat>{-1, q(1, 2), q(3, 2), 3}));
  EXPECT_EQ(anharmonic_orbit(0, f), (std::set<ExtRat>{0, 2}));
  EXPECT_EQ(anharmonic_orbit(ExtRat::infinity(), f), (std::set<ExtRat>{1, ExtRat::infinity()}));
}

TEST(AnharmonicOrbit, Errors) {
  EXPECT_THROW(anharmonic_orbit(0, std::span<const MoebiusMap>{}), std::invalid_argument);
  const std::vector<MoebiusMap> shift{MoebiusMap::shift(1)};
  EXPECT_THROW(anharmonic_orbit(0, shift, 50), OrbitCapExceeded);
}
