#include <gtest/gtest.h>

#include "generators.hpp"
#include "setmart/error.hpp"
#include "setmart/represent.hpp"

namespace setmart {
namespace {

using testing::Rng;

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidParams;
}

SetProcess brownian_square_hull(const ScenarioTree& tree) {
  const PointProcess b = tree.brownian_process();
  PointProcess sq(tree.depth(), 1);
  for (int t = 0; t <= tree.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      sq.at(t, j) = {tree.brownian(t, j) * tree.brownian(t, j) - tree.time(t), 0};
    }
  }
  SetProcess f = hull_process(tree, {b, sq});
  f.clear_castaing();
  return f;
}

void expect_selector_invariants(const SetProcess& f, const SelectorSystem& sys, double tol) {
  ASSERT_FALSE(sys.selectors.empty());
  for (const Selector& sel : sys.selectors) {
    EXPECT_LE(martingale_defect(sel.path), tol);
    for (int t = 0; t <= f.depth(); ++t) {
      EXPECT_LE(selection_gap(sel.path.slice(t), f.level(t)), tol);
    }
  }
  for (int t = 0; t <= f.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      std::vector<Point> pts;
      for (const Selector& sel : sys.selectors) pts.push_back(sel.path.at(t, j));
      EXPECT_LE(hausdorff(hull(pts, f.dim()), f.body(t, j)), tol);
    }
  }
}

TEST(HypothesisTest, IntegralFamilyPasses) {
  Rng rng(61);
  const ScenarioTree tree(4, 1.0);
  const SetProcess f = gset_integral(tree, testing::random_family(rng, 4, 2, 3, true));
  const HypothesisReport r = check_representation_hypothesis(f, 1e-9);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.initial_zero);
  EXPECT_EQ(r.violation_count, 0U);
}

TEST(HypothesisTest, NonzeroInitialFailsFirstCondition) {
  const ScenarioTree tree(3, 1.0);
  const SetProcess f = translate_process(tree, ConvexBody::interval(-1, 1), tree.brownian_process());
  const HypothesisReport r = check_representation_hypothesis(f, 1e-9);
  EXPECT_FALSE(r.initial_zero);
  EXPECT_DOUBLE_EQ(r.initial_gap, 1.0);
  EXPECT_FALSE(r.passed());
}

TEST(HypothesisTest, VertexSelectionsOfBrownianSquareHullFail) {
  const ScenarioTree tree(4, 1.0);
  const SetProcess f = brownian_square_hull(tree);
  ASSERT_EQ(classify(f, 1e-12).verdict, Verdict::kSubmartingale);
  const HypothesisReport r = check_representation_hypothesis(f, 1e-9);
  EXPECT_TRUE(r.initial_zero);
  EXPECT_FALSE(r.castaing_ok);
  EXPECT_GT(r.violation_count, 0U);
  EXPECT_GT(r.worst.gap, 1e-3);
  EXPECT_LE(r.violations.size(), 64U);
  EXPECT_EQ(code_of([&] { reconstruct_gset(f, 1e-9); }), ErrorCode::kHypothesisViolated);
}

TEST(SelectorSystemTest, InvariantsOnRandomFamilies) {
  Rng rng(63);
  for (int trial = 0; trial < 15; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 2);
    const ScenarioTree tree(testing::uniform_int(rng, 1, 4), 1.0);
    const SetProcess f =
        gset_integral(tree, testing::random_family(rng, tree.depth(), dim, testing::uniform_int(rng, 1, 4), true));
    const SelectorSystem sys = build_selector_system(f, 1e-9);
    expect_selector_invariants(f, sys, 1e-9);
    for (const Selector& sel : sys.selectors) {
      EXPECT_EQ(sel.provenance(sel.r), Provenance::kCastaing);
      if (sel.r > 0) EXPECT_EQ(sel.provenance(0), Provenance::kBackward);
    }
  }
}

TEST(SelectorSystemTest, VertexFamilyOfTranslatedInterval) {
  const ScenarioTree tree(3, 1.0);
  const SetProcess f = translate_process(tree, ConvexBody::interval(0, 1), tree.brownian_process());
  expect_selector_invariants(f, build_selector_system(f, 1e-9), 1e-9);
}

TEST(SelectorSystemTest, RejectsSupermartingale) {
  const ScenarioTree tree(2, 1.0);
  const SetProcess f(tree, {SetRV(0, {ConvexBody::interval(-1, 1)}),
                            SetRV(1, {ConvexBody::interval(0, 0), ConvexBody::interval(0, 0)}),
                            SetRV(2, std::vector<ConvexBody>(4, ConvexBody::interval(0, 0)))});
  EXPECT_EQ(code_of([&] { build_selector_system(f, 1e-9); }), ErrorCode::kNotASubmartingale);
}

TEST(DiscreteMrtTest, ReproducesRandomMartingales) {
  Rng rng(65);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 2);
    const ScenarioTree tree(testing::uniform_int(rng, 1, 8), testing::uniform(rng, 0.5, 3.0));
    const PointProcess f = testing::random_point_martingale(rng, tree.depth(), dim);
    const ExtendedIntegrand e = discrete_mrt(tree, f, 1e-9);
    EXPECT_LE(max_node_distance(extended_path(tree, e), f), 1e-12);
  }
}

TEST(DiscreteMrtTest, RejectsNonMartingale) {
  const ScenarioTree tree(2, 1.0);
  PointProcess f(2, 1);
  f.at(2, 0) = {1, 0};
  EXPECT_EQ(code_of([&] { discrete_mrt(tree, f, 1e-9); }), ErrorCode::kNotAMartingale);
}

TEST(ReconstructTest, TrivialInitialRoundTrip) {
  Rng rng(67);
  const ScenarioTree tree(4, 1.0);
  const SetProcess f = gset_integral(tree, testing::random_family(rng, 4, 2, 3, true));
  const Reconstruction r = reconstruct_gset(f, 1e-9);
  EXPECT_LE(r.max_gap, 1e-9);
  EXPECT_EQ(r.node_gaps.size(), tree.node_count());
  for (const ExtendedIntegrand& e : r.family) EXPECT_EQ(e.x, (Point{0, 0}));
}

TEST(ReconstructTest, ExtendedMartingale) {
  Rng rng(69);
  for (int trial = 0; trial < 10; ++trial) {
    const ScenarioTree tree(4, 1.0);
    const ConvexBody c = testing::random_body(rng, 2, 5);
    const PointProcess m = testing::random_point_martingale(rng, 4, 2);
    const SetProcess f = translate_process(tree, c, m);
    const Reconstruction r = reconstruct_extended(f, 1e-9);
    EXPECT_LE(r.max_gap, 1e-9);
    std::vector<Point> initial;
    for (const ExtendedIntegrand& e : r.family) initial.push_back(e.x);
    EXPECT_LE(hausdorff(hull(initial, 2), translate(c, m.at(0, 0))), 1e-9);
  }
}

TEST(ReconstructTest, MartingaleSelectorsStayInside) {
  const ScenarioTree tree(3, 1.0);
  const SetProcess f = translate_process(tree, ConvexBody::interval(-1, 2), tree.brownian_process());
  const auto family = martingale_selector_family(f, 1e-9);
  EXPECT_EQ(family.size(), 2U);
  for (const PointProcess& p : family) EXPECT_LE(martingale_defect(p), 1e-12);
}

TEST(ReconstructTest, ExtendedRejectsSubmartingale) {
  const ScenarioTree tree(3, 1.0);
  EXPECT_EQ(code_of([&] { reconstruct_extended(brownian_square_hull(tree), 1e-9); }), ErrorCode::kNotAMartingale);
}

TEST(ReconstructTest, SubmartingaleWithNonzeroInitial) {
  Rng rng(71);
  const ScenarioTree tree(3, 1.0);
  const SetProcess f = gset_integral(tree, testing::random_family(rng, 3, 1, 3, false));
  const Reconstruction r = reconstruct_submartingale_extended(f, 1e-9);
  EXPECT_LE(r.max_gap, 1e-9);
}

TEST(MeasureTest, ReportsWorstNode) {
  const ScenarioTree tree(2, 1.0);
  const IntegrandFamily g = {{{0, 0}, Integrand::constant(2, {1, 0}, 1)}};
  const IntegrandFamily h = {{{0, 0}, Integrand::constant(2, {2, 0}, 1)}};
  const Reconstruction r = measure_reconstruction(gset_integral(tree, g), h);
  EXPECT_NEAR(r.max_gap, 2 * tree.step(), 1e-12);
  EXPECT_EQ(r.worst_level, 2);
}

TEST(ReconstructTest, SingletonInitialMartingaleDegenerates) {
  Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 2);
    const ScenarioTree tree(testing::uniform_int(rng, 1, 5), 1.0);
    PointProcess m = testing::random_point_martingale(rng, tree.depth(), dim);
    const Point m0 = m.at(0, 0);
    for (Point& p : m.flat()) p = p - m0;
    const SetProcess f = translate_process(tree, ConvexBody::singleton({}, dim), m);
    const Reconstruction r = reconstruct_extended(f, 1e-9);
    for (const ExtendedIntegrand& e : r.family) EXPECT_LE(norm(e.x), 1e-12);
    const SetProcess g = gset_integral(tree, r.family);
    for (int t = 0; t <= tree.depth(); ++t) {
      for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
        for (const Point& u : probe_directions(dim)) EXPECT_LE(width(g.body(t, j), u), 1e-9);
      }
    }
  }
}

TEST(ReconstructTest, IdempotentOnIntegralFamilies) {
  Rng rng(75);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 2);
    const ScenarioTree tree(testing::uniform_int(rng, 1, 5), 1.0);
    const SetProcess f =
        gset_integral(tree, testing::random_family(rng, tree.depth(), dim, testing::uniform_int(rng, 1, 4), true));
    const Reconstruction r = reconstruct_gset(f, 1e-9);
    EXPECT_LE(max_node_hausdorff(gset_integral(tree, r.family), f), 1e-9);
  }
}

}  // namespace
}  // namespace setmart
