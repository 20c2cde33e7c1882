#include <pretzelsurg/classify.hpp>
#include <pretzelsurg/oracles.hpp>
#include <pretzelsurg/record.hpp>

#include <gtest/gtest.h>

using namespace pretzelsurg;

namespace {

std::vector<JsjPiece> sorted(std::vector<JsjPiece> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void expect_case(const PretzelParams& k, const std::string& label, int tori, std::vector<JsjPiece> pieces) {
  const JsjResult j = classify(k);
  EXPECT_EQ(j.case_label, label) << k.str();
  EXPECT_EQ(j.tori, tori) << k.str();
  EXPECT_EQ(j.pieces, sorted(std::move(pieces))) << k.str();
}

}  // namespace

TEST(Classify, CaseTableExamples) {
  expect_case({-1, 0, 9}, "1.1.1", 0, {JsjPiece::of(PieceKind::sphere_cross_circle)});
  expect_case({-1, 1, 5}, "1.1.3", 1, {JsjPiece::seifert(5)});
  expect_case({2, -1, 3}, "1.1.4", 2, {JsjPiece::seifert(2), JsjPiece::seifert(3)});
  expect_case({-2, 1, 7}, "1.1.5", 1, {JsjPiece::seifert(2)});
  expect_case({2, -2, 2}, "1.1.6", 2,
              {JsjPiece::of(PieceKind::sigma03_cross_circle), JsjPiece::trefoil(Chirality::left)});
  expect_case({1, -3, -3}, "1.1.6", 2,
              {JsjPiece::of(PieceKind::sigma03_cross_circle), JsjPiece::trefoil(Chirality::right)});
  expect_case({1, 1, 1}, "1.1.7", 1, {JsjPiece::of(PieceKind::hyperbolic)});
}

TEST(Classify, ZeroFamilyOrders) {
  expect_case({3, 0, 4}, "1.1.4", 2, {JsjPiece::seifert(4), JsjPiece::seifert(5)});
  expect_case({0, -2, 6}, "1.1.3", 1, {JsjPiece::seifert(7)});
  expect_case({0, 0, -2}, "1.1.3", 1, {JsjPiece::of(PieceKind::annulus_cross_circle)});
}

TEST(Classify, Precedence) {
  EXPECT_EQ(classify({-1, 1, 1}).case_label, "1.1.2");
  expect_case({-1, -2, 1}, "1.1.3", 1, {JsjPiece::seifert(2)});
  EXPECT_EQ(classify({-1, 0, 0}).case_label, "1.1.1");
  EXPECT_EQ(classify({0, 0, 0}).case_label, "1.1.2");
}

TEST(Classify, TraceRecordsRotation) {
  EXPECT_TRUE(classify({2, -1, 3}).trace.empty());
  EXPECT_EQ(classify({-1, 1, 5}).trace.size(), 2u);
}

TEST(Classify, AgreesWithLiteralCaseTable) {
  for (std::int64_t p = -7; p <= 7; ++p)
    for (std::int64_t q = -7; q <= 7; ++q)
      for (std::int64_t r = -7; r <= 7; ++r) {
        const PretzelParams k{p, q, r};
        const JsjResult j = classify(k);
        ASSERT_EQ(j.case_label, oracle::literal_case(k)) << k.str();
        if (j.case_label == "1.1.4") {
          for (const auto& piece : j.pieces) EXPECT_GE(piece.order, 2);
        }
        if (!is_unknot(k)) {
          EXPECT_EQ(j.case_label == "1.1.7", !cut_is_nonhyperbolic(k)) << k.str();
        }
      }
}

TEST(ClosedForm, Examples) {
  EXPECT_TRUE(cut_is_nonhyperbolic({5, -1, 5}));
  EXPECT_TRUE(cut_is_nonhyperbolic({-2, 2, 2}));
  EXPECT_FALSE(cut_is_nonhyperbolic({2, 2, 2}));
  EXPECT_THROW(cut_is_nonhyperbolic({-1, 0, 2}), std::invalid_argument);
}

TEST(Tuples, CutManifold) {
  EXPECT_EQ(cut_manifold_tuple({2, 2, 2}).str(), "(-2, 1/3, -2, phi, phi)");
  EXPECT_EQ(cut_manifold_tuple({4, -1, 7}).str(), "(-7, inf, -4, phi, phi)");
  EXPECT_EQ(cut_manifold_tuple({0, 0, 0}).str(), "(0, 1, 0, phi, phi)");
}

TEST(Tuples, Reduced) {
  EXPECT_EQ(reduced_tuple({5, 5, 1})->str(), "(7/6, -5, phi, phi)");
  EXPECT_EQ(reduced_tuple({1, 5, 1})->str(), "(13/6, phi, phi)");
  EXPECT_EQ(reduced_tuple({5, -3, 1})->str(), "(8, phi, phi)");
  EXPECT_EQ(reduced_tuple({-3, 4, 1})->str(), "(phi, phi, 7)");
  EXPECT_FALSE(reduced_tuple({5, 5, 2}));
}

TEST(Oracle, Examples) {
  EXPECT_EQ(hyperbolic_oracle({2, 2, 2}).verdict, Verdict::hyperbolic);
  const auto inf = hyperbolic_oracle({5, -1, 5});
  EXPECT_EQ(inf.verdict, Verdict::exceptional);
  EXPECT_TRUE(inf.witness.empty());
  EXPECT_EQ(hyperbolic_oracle({-2, 2, 2}).verdict, Verdict::exceptional);
}

TEST(Oracle, CyclicInvariance) {
  for (const PretzelParams k : {PretzelParams{1, 1, 1}, {3, -4, 5}, {-2, 2, 2}, {-3, -3, 1}, {2, 3, -3}}) {
    const auto v = hyperbolic_oracle(k).verdict;
    EXPECT_EQ(hyperbolic_oracle(cyclic_permute(k)).verdict, v) << k.str();
    EXPECT_EQ(hyperbolic_oracle(cyclic_permute(cyclic_permute(k))).verdict, v) << k.str();
  }
}

TEST(CrossCheck, SmallCube) {
  const auto report = cross_check(2, kDefaultStateBudget, 2);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.undecided, 0u);
  EXPECT_EQ(report.checked + report.skipped_unknots, 125u);
  EXPECT_THROW(cross_check(0), std::invalid_argument);
}

TEST(Record, JsonIsCanonical) {
  auto rec = make_record({-1, 1, 5});
  const auto j = to_json(rec);
  EXPECT_EQ(j["case"], "1.1.3");
  EXPECT_EQ(j["tori"], 1);
  EXPECT_EQ(j["pieces"].dump(), R"([{"kind":"seifert_annulus","order":5}])");
  EXPECT_EQ(to_json(make_record({-1, 1, 5})).dump(), j.dump());

  rec.oracle = hyperbolic_oracle(rec.params);
  rec.alexander = alexander(rec.params);
  const auto k = to_json(rec);
  EXPECT_EQ(k["oracle"]["verdict"], "exceptional");
  EXPECT_EQ(k["oracle"]["agrees"], true);
  EXPECT_TRUE(k.contains("alexander"));
}

TEST(Record, Csv) {
  EXPECT_EQ(csv_header(), "p,q,r,case,tori,pieces,oracle");
  EXPECT_EQ(csv_row(make_record({2, -1, 3})), "2,-1,3,1.1.4,2,seifert_annulus:2;seifert_annulus:3,");
  auto rec = make_record({2, -2, 2});
  rec.oracle = hyperbolic_oracle(rec.params);
  EXPECT_EQ(csv_row(rec).substr(0, 21), "2,-2,2,1.1.6,2,sigma0");
}
