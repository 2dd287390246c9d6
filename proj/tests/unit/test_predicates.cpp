#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "sos/predicates.hpp"

using namespace sos;
using sos::testing::q;

namespace {

Edge2 edge(const Point2& a, const Point2& b, std::uint64_t first_id = 0) {
  return {make_indexed<2>(a, first_id), make_indexed<2>(b, first_id + 1)};
}

IndexedPoint2 query(const Point2& p) { return make_indexed<2>(p, 100); }

}  // namespace

TEST(PointOnEdge1d, Examples) {
  EXPECT_TRUE(point_on_edge_1d(0, 0, 1));
  EXPECT_FALSE(point_on_edge_1d(0, 1, 1));
  EXPECT_TRUE(point_on_edge_1d(0, q(1, 2), 1));
  EXPECT_THROW(point_on_edge_1d(1, 0, 0), ContractViolation);
}

TEST(PointOnEdge1d, ExhaustiveAgainstShiftedPoint) {
  for (int l = -3; l <= 3; ++l)
    for (int r = l; r <= 3; ++r)
      for (int p = -4; p <= 4; ++p) {
        const bool got = point_on_edge_1d(l, p, r);
        ASSERT_EQ(got, l <= p && p < r);
        ASSERT_EQ(got, oracle::concrete_point_on_edge_1d(l, p, r));
      }
}

TEST(RayCrossesEdge, Examples) {
  EXPECT_EQ(ray_crosses_edge(query({0, -1}), edge({0, 0}, {2, 0})), Crossing::Crosses);
  EXPECT_EQ(ray_crosses_edge(query({2, -1}), edge({0, 0}, {2, 0})), Crossing::None);
  EXPECT_EQ(ray_crosses_edge(query({1, 0}), edge({1, 0}, {1, 5})), Crossing::None);
  EXPECT_EQ(ray_crosses_edge(query({1, 0}), edge({0, 0}, {2, 0})), Crossing::OnEdge);
  EXPECT_EQ(ray_crosses_edge(query({1, 1}), edge({0, 0}, {2, 0})), Crossing::None);
}

TEST(RayCrossesEdge, EndpointOrderIrrelevant) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5000; ++i) {
    const Point2 a{sos::testing::random_int(rng, 0, 3), sos::testing::random_int(rng, 0, 3)};
    const Point2 b{sos::testing::random_int(rng, 0, 3), sos::testing::random_int(rng, 0, 3)};
    const Point2 p{sos::testing::random_int(rng, 0, 3), sos::testing::random_int(rng, 0, 3)};
    ASSERT_EQ(ray_crosses_edge(query(p), edge(a, b)), ray_crosses_edge(query(p), edge(b, a)));
  }
}

TEST(RayCrossesEdge, FanAroundVertexCountsOnlyRightwardEdges) {
  // Edges from v = (2, 2) to every other point of a 5x5 grid; p straight
  // below v.
  const Point2 v{2, 2}, p{2, -1};
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; y <= 4; ++y) {
      if (x == 2 && y == 2) continue;
      const Crossing c = ray_crosses_edge(query(p), edge(v, {x, y}));
      EXPECT_EQ(c == Crossing::Crosses, x > 2) << x << "," << y;
    }
}

TEST(SegmentsIntersect, Examples) {
  EXPECT_TRUE(segments_intersect_sos(edge({0, -1}, {0, 1}, 0), edge({-1, 0}, {1, 0}, 2)));
  EXPECT_FALSE(segments_intersect_sos(edge({0, 0}, {1, 0}, 0), edge({2, 1}, {3, 1}, 2)));
  // T-junction: the oracle value for this index assignment is true.
  const Edge2 s = edge({0, 0}, {2, 0}, 0), t = edge({1, 0}, {1, 1}, 2);
  EXPECT_TRUE(oracle::concrete_segments_intersect(s, t));
  EXPECT_TRUE(segments_intersect_sos(s, t));
  EXPECT_THROW(segments_intersect_sos(s, edge({1, 0}, {1, 1}, 1)), ContractViolation);
}

TEST(SegmentsIntersect, SymmetryReversalAndOracle) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 3000; ++i) {
    std::array<Point2, 4> pts;
    for (auto& p : pts) p = {sos::testing::random_int(rng, 0, 2), sos::testing::random_int(rng, 0, 2)};
    const Edge2 s = edge(pts[0], pts[1], 0), t = edge(pts[2], pts[3], 2);
    const bool hit = segments_intersect_sos(s, t);
    ASSERT_EQ(hit, segments_intersect_sos(t, s));
    ASSERT_EQ(hit, segments_intersect_sos({s.v1, s.v0}, t));
    ASSERT_EQ(hit, segments_intersect_sos(s, {t.v1, t.v0}));
    ASSERT_EQ(hit, oracle::concrete_segments_intersect(s, t));

    const Sign o1 = orient2d_exact(pts[0], pts[1], pts[2]).sign(), o2 = orient2d_exact(pts[0], pts[1], pts[3]).sign(),
               o3 = orient2d_exact(pts[2], pts[3], pts[0]).sign(), o4 = orient2d_exact(pts[2], pts[3], pts[1]).sign();
    if (o1 != Sign::Zero && o2 != Sign::Zero && o3 != Sign::Zero && o4 != Sign::Zero)
      ASSERT_EQ(hit, o1 != o2 && o3 != o4);
  }
}
