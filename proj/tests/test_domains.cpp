#include <gtest/gtest.h>

#include "bicomplex/domains.hpp"
#include "bicomplex/error.hpp"

namespace bcx {
namespace {

TEST(Discs, ContainmentRespectsClosedness) {
  const PlanarDisc open({0, 0}, 1.0);
  const PlanarDisc closed({0, 0}, 1.0, true);
  EXPECT_FALSE(open.contains({1, 0}));
  EXPECT_TRUE(closed.contains({1, 0}));
  EXPECT_THROW(PlanarDisc({0, 0}, 0.0), Error);
  EXPECT_THROW(PlanarDisc({0, 0}, -1.0), Error);
}

TEST(Discs, RootLocationTolerance) {
  const PlanarDisc open({0, 0}, 1.0);
  const PlanarDisc closed({0, 0}, 1.0, true);
  EXPECT_EQ(locate(open, {0.5, 0}), RootLocation::Inside);
  EXPECT_EQ(locate(open, {1 + 1e-12, 0}), RootLocation::Boundary);
  EXPECT_EQ(locate(open, {1.001, 0}), RootLocation::Outside);
  EXPECT_FALSE(root_in(open, {1 - 1e-12, 0}));
  EXPECT_TRUE(root_in(closed, {1 + 1e-12, 0}));
}

TEST(Discus, ProductOfFactors) {
  const Discus d(Bicomplexd::from_idempotent({1, 0}, {0, 2}), 0.5, 2.0);
  EXPECT_TRUE(d.contains(Bicomplexd::from_idempotent({1.2, 0}, {1, 2})));
  EXPECT_FALSE(d.contains(Bicomplexd::from_idempotent({1.6, 0}, {0, 2})));
  EXPECT_EQ(d.factor(Component::Second).radius, 2.0);
  EXPECT_EQ(d.factor(Component::First).center, Complexd(1, 0));
}

TEST(Discus, LieBallAndCartesianSet) {
  const Discus b = lie_ball(1.0);
  // ||w|| < 1 does not imply w in the Lie ball and vice versa; e1 * 1.9 has
  // norm 1.34 but P2 = 0.
  EXPECT_FALSE(b.contains(1.9 * Unitsd::e1()));
  EXPECT_TRUE(b.contains(0.9 * Unitsd::e1()));

  const CartesianSet s = cartesian_set(PlanarDisc({0, 0}, 1.0), PlanarDisc({2, 0}, 0.5));
  EXPECT_TRUE(s.contains(Bicomplexd::from_idempotent({0, 0}, {2.2, 0})));
  ASSERT_TRUE(s.as_discus().has_value());
  EXPECT_EQ(s.as_discus()->r2, 0.5);
  const CartesianSet mixed = cartesian_set(PlanarDisc({0, 0}, 1.0, true), PlanarDisc({0, 0}, 1.0));
  EXPECT_FALSE(mixed.as_discus().has_value());
}

TEST(Exhaustion, GridInsideClosedSubDiscus) {
  const Discus d(Bicomplexd::from_idempotent({3, -1}, {-2, 5}), 1.0, 2.0);
  const SamplingGrid g = exhaustion(d, 0.9, 8);
  EXPECT_EQ(g.points.size(), 57u * 57u);
  for (const auto& w : g.points) {
    EXPECT_TRUE(g.region.contains(w));
    EXPECT_TRUE(d.contains(w));
  }
  EXPECT_EQ(g.points.front(), d.center);
  EXPECT_GT(g.delta, 0.0);
}

TEST(Exhaustion, RejectsBadParameters) {
  try {
    exhaustion(lie_ball(1.0), 1.0, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidFraction);
  }
  EXPECT_THROW(exhaustion(lie_ball(1.0), 0.0, 8), Error);
  EXPECT_THROW(exhaustion(lie_ball(1.0), 0.5, 1), Error);
}

TEST(Exhaustion, CenterRingsReachNearZero) {
  ExhaustionOptions o;
  o.center_rings = 4;
  const SamplingGrid g = exhaustion(lie_ball(1.0), 0.9, 6, o);
  const auto near = std::count_if(g.points.begin(), g.points.end(), [](const Bicomplexd& w) {
    return w != Bicomplexd{} && euclid_norm(w) < 0.01;
  });
  EXPECT_GT(near, 0);
}

TEST(Exhaustion, SubsamplingIsSeededAndKeepsCentre) {
  ExhaustionOptions o;
  o.max_points = 500;
  o.seed = 3;
  const SamplingGrid a = exhaustion(lie_ball(1.0), 0.9, 8, o);
  const SamplingGrid b = exhaustion(lie_ball(1.0), 0.9, 8, o);
  o.seed = 4;
  const SamplingGrid c = exhaustion(lie_ball(1.0), 0.9, 8, o);
  ASSERT_EQ(a.points.size(), 500u);
  EXPECT_EQ(a.points, b.points);
  EXPECT_NE(a.points, c.points);
  EXPECT_EQ(a.points.front(), Bicomplexd{});
}

TEST(Exhaustion, NearestNeighbourDistance) {
  const std::vector<Bicomplexd> pts{Bicomplexd{}, Bicomplexd(2.0), Bicomplexd(3.0)};
  // ||x e1 + x e2|| = |x|; farthest nearest neighbour is 0 -> 2.
  EXPECT_DOUBLE_EQ(max_nearest_neighbor_distance(pts), 2.0);
  EXPECT_EQ(max_nearest_neighbor_distance({Bicomplexd{}}), 0.0);
}

}  // namespace
}  // namespace bcx
