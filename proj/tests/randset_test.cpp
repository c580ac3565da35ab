#include <gtest/gtest.h>

#include "generators.hpp"
#include "setmart/error.hpp"
#include "setmart/randset.hpp"

namespace setmart {
namespace {

using testing::Rng;

ConvexBody box(double x0, double y0, double w, double h) {
  const Point pts[] = {{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + h}, {x0, y0 + h}};
  return hull(pts, 2);
}

TEST(SetRVTest, RejectsWrongAtomCount) {
  EXPECT_THROW(SetRV(1, {ConvexBody::interval(0, 1)}), Error);
  EXPECT_THROW(SetRV(0, {}), Error);
}

TEST(SetRVTest, RejectsMixedDimensions) {
  EXPECT_THROW(SetRV(1, {ConvexBody::interval(0, 1), box(0, 0, 1, 1)}), Error);
}

TEST(AumannTest, SquareAndTranslate) {
  const SetRV f(1, {box(0, 0, 1, 1), box(2, 0, 1, 1)});
  EXPECT_LE(hausdorff(aumann_expectation(f), box(1, 0, 1, 1)), 1e-15);
}

TEST(AumannTest, Intervals) {
  const SetRV f(2, {ConvexBody::interval(0, 1), ConvexBody::interval(1, 3), ConvexBody::interval(-1, 0),
                    ConvexBody::interval(0, 0)});
  EXPECT_EQ(aumann_expectation(f), ConvexBody::interval(0, 1));
}

TEST(CondExpectationSetTest, IdentityAtOwnLevel) {
  Rng rng(31);
  const SetRV f = testing::random_setrv(rng, 3, 2);
  const SetRV same = cond_expectation_set(f, 3);
  for (std::size_t a = 0; a < f.atom_count(); ++a) EXPECT_EQ(same.at(a), f.at(a));
  EXPECT_THROW(cond_expectation_set(f, 4), Error);
}

TEST(CondExpectationSetTest, MatchesSelectionOracle) {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 2);
    const int level = testing::uniform_int(rng, 1, 3);
    const SetRV f = testing::random_setrv(rng, level, dim, 3);
    const int s = testing::uniform_int(rng, 0, level - 1);
    const SetRV fast = cond_expectation_set(f, s);
    const SetRV slow = selection_closure_oracle(f, s);
    for (std::size_t a = 0; a < fast.atom_count(); ++a) EXPECT_LE(hausdorff(fast.at(a), slow.at(a)), 1e-12);
  }
}

TEST(CondExpectationSetTest, TowerProperty) {
  Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const SetRV f = testing::random_setrv(rng, 4, 2, 4);
    const SetRV direct = cond_expectation_set(f, 1);
    const SetRV twice = cond_expectation_set(cond_expectation_set(f, 3), 1);
    for (std::size_t a = 0; a < direct.atom_count(); ++a) EXPECT_LE(hausdorff(direct.at(a), twice.at(a)), 1e-12);
  }
}

TEST(OracleTest, RefusesHugeEnumeration) {
  std::vector<ConvexBody> bodies(ScenarioTree::width(5), box(0, 0, 1, 1));
  EXPECT_THROW(selection_closure_oracle(SetRV(5, bodies), 0), Error);
}

TEST(CastaingTest, VertexSelectionsCoverEveryVertex) {
  Rng rng(37);
  const SetRV f = testing::random_setrv(rng, 3, 2, 5);
  const SelectionFamily fam = castaing_vertices(f);
  for (const PointSlice& m : fam.members) EXPECT_TRUE(is_selection(m, f, 0.0));
  const SetRV back = decomposable_hull_pointwise(fam.members);
  for (std::size_t a = 0; a < f.atom_count(); ++a) EXPECT_EQ(back.at(a), f.at(a));
}

TEST(DecomposableTest, RawValuesAndHull) {
  const PointSlice m1{1, 1, {{0, 0}, {2, 0}}};
  const PointSlice m2{1, 1, {{1, 0}, {-1, 0}}};
  const PointSlice m3{1, 1, {{0.5, 0}, {0, 0}}};
  const FiniteSetRV raw = decomposable_values({m1, m2, m3});
  ASSERT_EQ(raw.points.size(), 2U);
  EXPECT_EQ(raw.points[0].size(), 3U);
  const SetRV h = convexify(raw);
  EXPECT_EQ(h.at(0), ConvexBody::interval(0, 1));
  EXPECT_EQ(h.at(1), ConvexBody::interval(-1, 2));
}

TEST(SelectionTest, Gap) {
  const SetRV f(1, {ConvexBody::interval(0, 1), ConvexBody::interval(2, 3)});
  const PointSlice inside{1, 1, {{0.5, 0}, {3, 0}}};
  const PointSlice outside{1, 1, {{1.5, 0}, {2, 0}}};
  EXPECT_TRUE(is_selection(inside, f, 0));
  EXPECT_FALSE(is_selection(outside, f, 1e-9));
  EXPECT_DOUBLE_EQ(selection_gap(outside, f), 0.5);
}

TEST(AumannTest, EqualsRootConditionalExpectation) {
  Rng rng(39);
  for (int trial = 0; trial < 100; ++trial) {
    const SetRV f = testing::random_setrv(rng, testing::uniform_int(rng, 0, 5), testing::uniform_int(rng, 1, 2), 5);
    EXPECT_LE(hausdorff(aumann_expectation(f), cond_expectation_set(f, 0).at(0)), 1e-12);
  }
}

TEST(AumannTest, WidthIdentityAndDegeneracy) {
  Rng rng(40);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 2);
    const int level = testing::uniform_int(rng, 0, 5);
    const bool points_only = trial % 3 == 0;
    const SetRV f = testing::random_setrv(rng, level, dim, points_only ? 1 : 5);
    const ConvexBody e = aumann_expectation(f);
    bool flat = true;
    for (const Point& u : probe_directions(dim)) {
      double mean = 0.0;
      for (const ConvexBody& b : f.bodies()) mean += width(b, u);
      mean /= static_cast<double>(f.atom_count());
      EXPECT_NEAR(width(e, u), mean, 1e-12);
      flat = flat && width(e, u) <= 1e-12;
    }
    if (flat) {
      for (const ConvexBody& b : f.bodies()) {
        for (const Point& u : probe_directions(dim)) EXPECT_LE(width(b, u), 1e-12);
      }
    }
    if (points_only) EXPECT_TRUE(flat);
  }
}

}  // namespace
}  // namespace setmart
