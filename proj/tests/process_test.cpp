#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "setmart/error.hpp"
#include "setmart/integral.hpp"
#include "setmart/process.hpp"

namespace setmart {
namespace {

using testing::Rng;

SetProcess interval_process(const ScenarioTree& tree, auto lo, auto hi) {
  std::vector<SetRV> levels;
  for (int t = 0; t <= tree.depth(); ++t) {
    std::vector<ConvexBody> bodies;
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      const double a = lo(t, j);
      const double b = hi(t, j);
      bodies.push_back(ConvexBody::interval(std::min(a, b), std::max(a, b)));
    }
    levels.emplace_back(t, std::move(bodies));
  }
  return SetProcess(tree, std::move(levels));
}

TEST(ProcessTest, RejectsBadShapes) {
  const ScenarioTree tree(2, 1.0);
  EXPECT_THROW(SetProcess(tree, {SetRV(0, {ConvexBody::interval(0, 1)})}), Error);
}

TEST(ClassifyTest, TranslatedIntervalIsMartingale) {
  const ScenarioTree tree(5, 1.0);
  const SetProcess f = translate_process(tree, ConvexBody::interval(-1, 1), tree.brownian_process());
  EXPECT_EQ(classify(f, 1e-12).verdict, Verdict::kMartingale);
  EXPECT_EQ(f.body(2, 0), ConvexBody::interval(tree.brownian(2, 0) - 1, tree.brownian(2, 0) + 1));
}

TEST(ClassifyTest, HullOfBrownianAndCompensatedSquareIsSubmartingale) {
  const ScenarioTree tree(5, 1.0);
  const SetProcess f = interval_process(
      tree, [&](int t, std::size_t j) { return tree.brownian(t, j); },
      [&](int t, std::size_t j) { return tree.brownian(t, j) * tree.brownian(t, j) - tree.time(t); });
  const ClassifyReport r = classify(f, 1e-12);
  EXPECT_EQ(r.verdict, Verdict::kSubmartingale);
  EXPECT_GT(r.worst.gap, 1e-3);
}

TEST(ClassifyTest, ShrinkingIntervalIsSupermartingale) {
  const ScenarioTree tree(4, 1.0);
  const SetProcess f = interval_process(
      tree, [&](int t, std::size_t) { return -(1.0 - tree.time(t)); },
      [&](int t, std::size_t) { return 1.0 - tree.time(t); });
  EXPECT_EQ(classify(f, 1e-12).verdict, Verdict::kSupermartingale);
}

TEST(ClassifyTest, DriftingIntervalIsNone) {
  const ScenarioTree tree(3, 1.0);
  const SetProcess f = interval_process(
      tree, [&](int t, std::size_t) { return 5.0 * t; }, [&](int t, std::size_t) { return 5.0 * t + 1.0 - 0.2 * t; });
  const ClassifyReport r = classify(f, 1e-9);
  EXPECT_EQ(r.verdict, Verdict::kNone);
  EXPECT_GT(r.worst_sub.gap, 1.0);
  EXPECT_GT(r.worst_super.gap, 1.0);
}

TEST(ClassifyTest, ToleranceDecidesBorderline) {
  const ScenarioTree tree(2, 1.0);
  const SetProcess f = interval_process(
      tree, [&](int t, std::size_t) { return 1e-7 * t; }, [&](int t, std::size_t) { return 1.0 + 1e-7 * t; });
  EXPECT_EQ(classify(f, 1e-6).verdict, Verdict::kMartingale);
  EXPECT_EQ(classify(f, 1e-9).verdict, Verdict::kNone);
}

TEST(ClassifyTest, RandomIntegralFamiliesAreSubmartingales) {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 2);
    const ScenarioTree tree(testing::uniform_int(rng, 1, 5), 1.0);
    const IntegrandFamily g = testing::random_family(rng, tree.depth(), dim, testing::uniform_int(rng, 1, 4), false);
    const Verdict v = classify(gset_integral(tree, g), 1e-9).verdict;
    EXPECT_TRUE(v == Verdict::kMartingale || v == Verdict::kSubmartingale);
  }
}

TEST(CastaingFamilyTest, AttachAndValidate) {
  const ScenarioTree tree(3, 1.0);
  const PointProcess b = tree.brownian_process();
  const PointProcess neg = combine(-1.0, b, 0.0, b);
  SetProcess f = hull_process(tree, {b, neg});
  EXPECT_TRUE(f.has_castaing());
  EXPECT_EQ(f.castaing_at(2).size(), 2U);
  f.clear_castaing();
  EXPECT_FALSE(f.has_castaing());
  EXPECT_EQ(f.castaing_at(0).size(), 1U);
  EXPECT_THROW(f.set_castaing({b}), Error);
}

TEST(DegeneracyTest, SingletonInitialMartingaleIsDegenerate) {
  const ScenarioTree tree(4, 1.0);
  Rng rng(43);
  const PointProcess m = testing::random_point_martingale(rng, 4, 2);
  const SetProcess f = translate_process(tree, ConvexBody::singleton({}, 2), m);
  const DegeneracyReport r = degeneracy_check(f, 1e-12);
  EXPECT_TRUE(r.singleton_initial);
  EXPECT_TRUE(r.degenerate);
  EXPECT_LE(r.max_width, 1e-12);
}

TEST(DegeneracyTest, NonSingletonInitialIsReported) {
  const ScenarioTree tree(3, 1.0);
  const SetProcess f = translate_process(tree, ConvexBody::interval(-1, 1), tree.brownian_process());
  const DegeneracyReport r = degeneracy_check(f, 1e-12);
  EXPECT_FALSE(r.singleton_initial);
  EXPECT_EQ(r.note, "non-singleton initial");
}

TEST(DegeneracyTest, RejectsNonMartingale) {
  const ScenarioTree tree(2, 1.0);
  const SetProcess f = interval_process(
      tree, [&](int t, std::size_t) { return -1.0 * t; }, [&](int, std::size_t) { return 0.0; });
  try {
    degeneracy_check(f, 1e-9);
    FAIL() << "expected NotAMartingale";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAMartingale);
  }
}

TEST(SteinerDecompositionTest, RecoversBodyAndCentre) {
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const ScenarioTree tree(4, 1.0);
    const ConvexBody c = testing::random_body(rng, 2, 6);
    const PointProcess m = testing::random_point_martingale(rng, 4, 2);
    const SetProcess f = translate_process(tree, c, m);
    const SteinerDecomposition d = steiner_decomposition(f, 1e-9);
    EXPECT_TRUE(d.translation_structure);
    EXPECT_LE(d.max_gap, 1e-9);
    EXPECT_LE(hausdorff(d.body, translate(c, -steiner_point(c))), 1e-9);
    EXPECT_LE(martingale_defect(d.steiner), 1e-9);
  }
}

TEST(SteinerDecompositionTest, FlagsMissingTranslationStructure) {
  const ScenarioTree tree(1, 1.0);
  const double h = tree.step();
  const SetProcess f(tree, {SetRV(0, {ConvexBody::interval(-1, 1)}),
                            SetRV(1, {ConvexBody::interval(-1 + h, 1 + h), ConvexBody::interval(-1 - h, 1 - h)})});
  ASSERT_EQ(classify(f, 1e-12).verdict, Verdict::kMartingale);
  EXPECT_TRUE(steiner_decomposition(f, 1e-12).translation_structure);
  const SetProcess g(tree, {SetRV(0, {ConvexBody::interval(-1, 1)}),
                            SetRV(1, {ConvexBody::interval(-2, 2), ConvexBody::interval(0, 0)})});
  ASSERT_EQ(classify(g, 1e-12).verdict, Verdict::kMartingale);
  const SteinerDecomposition d = steiner_decomposition(g, 1e-12);
  EXPECT_FALSE(d.translation_structure);
  EXPECT_NEAR(d.max_gap, 1.0, 1e-12);
}

TEST(ClassifyTest, RandomTranslationsAreMartingales) {
  Rng rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 2);
    const ScenarioTree tree(testing::uniform_int(rng, 1, 6), testing::uniform(rng, 0.5, 2.0));
    const SetProcess f = translate_process(tree, testing::random_body(rng, dim, 6),
                                           testing::random_point_martingale(rng, tree.depth(), dim));
    EXPECT_EQ(classify(f, 1e-9).verdict, Verdict::kMartingale);
    EXPECT_TRUE(steiner_decomposition(f, 1e-9).translation_structure);
  }
}

TEST(ClassifyTest, MonotoneInTolerance) {
  Rng rng(45);
  const double tols[] = {1e-12, 1e-9, 1e-6, 1e-3, 1e-1, 1.0, 10.0};
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 2);
    const ScenarioTree tree(testing::uniform_int(rng, 1, 3), 1.0);
    std::vector<SetRV> levels;
    for (int t = 0; t <= tree.depth(); ++t) levels.push_back(testing::random_setrv(rng, t, dim, 4));
    const SetProcess f(tree, std::move(levels));
    bool was_martingale = false;
    for (double tol : tols) {
      const Verdict v = classify(f, tol).verdict;
      if (was_martingale) EXPECT_EQ(v, Verdict::kMartingale);
      was_martingale = was_martingale || v == Verdict::kMartingale;
    }
  }
}

TEST(ParallelTest, ResultsIndependentOfThreadCount) {
  Rng rng(46);
  const ScenarioTree tree(5, 1.0);
  const SetProcess f = gset_integral(tree, testing::random_family(rng, 5, 2, 4, true));
  setenv("SETMART_THREADS", "1", 1);
  const ClassifyReport one = classify(f, 1e-12);
  setenv("SETMART_THREADS", "4", 1);
  const ClassifyReport four = classify(f, 1e-12);
  unsetenv("SETMART_THREADS");
  EXPECT_EQ(one.verdict, four.verdict);
  EXPECT_EQ(one.worst.gap, four.worst.gap);
  EXPECT_EQ(one.worst.s, four.worst.s);
  EXPECT_EQ(one.worst.atom, four.worst.atom);
}

}  // namespace
}  // namespace setmart
