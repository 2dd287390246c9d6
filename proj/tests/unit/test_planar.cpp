#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "sos/planar.hpp"

using namespace sos;
using sos::testing::q;

namespace {

const std::vector<Point2> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
const std::vector<Point2> kDiamond{{0, 0}, {1, 1}, {2, 0}, {1, -1}};

std::vector<Point2> random_polygon(std::mt19937_64& rng, int max_coord) {
  const auto n = static_cast<std::size_t>(sos::testing::random_int(rng, 3, 12));
  for (;;) {
    std::vector<Point2> out(n);
    for (auto& p : out) p = {sos::testing::random_int(rng, 0, max_coord), sos::testing::random_int(rng, 0, max_coord)};
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) ok = ok && out[k] != out[(k + 1) % n];
    if (ok) return out;
  }
}

}  // namespace

TEST(PointInPolygon, SquareExamples) {
  const Polygon sq(kSquare);
  EXPECT_EQ(point_in_polygon(Point2{q(1, 2), q(1, 2)}, sq), Containment::Inside);
  EXPECT_EQ(point_in_polygon(Point2{0, q(-1, 2)}, sq), Containment::Outside);
  EXPECT_EQ(count_crossings(make_indexed<2>({0, q(-1, 2)}, sq.next_point_id()), sq).crossings, 2u);
  EXPECT_EQ(oracle::concrete_delta_oracle_pip({0, q(-1, 2)}, kSquare), Containment::Outside);
}

TEST(PointInPolygon, DiamondThroughVertex) {
  const Polygon d(kDiamond);
  EXPECT_EQ(point_in_polygon(Point2{1, 0}, d), Containment::Inside);
  EXPECT_EQ(count_crossings(make_indexed<2>({1, 0}, d.next_point_id()), d).crossings, 1u);
  EXPECT_EQ(oracle::concrete_delta_oracle_pip({1, 0}, kDiamond), Containment::Inside);
}

TEST(PointInPolygon, BoundaryPlacements) {
  const Polygon sq(kSquare);
  EXPECT_EQ(point_in_polygon(Point2{q(1, 2), 0}, sq), Containment::OnBoundary);   // bottom edge
  EXPECT_EQ(point_in_polygon(Point2{0, q(1, 2)}, sq), Containment::OnBoundary);   // vertical edge
  EXPECT_EQ(point_in_polygon(Point2{1, q(1, 3)}, sq), Containment::OnBoundary);   // vertical edge
  for (const auto& v : kSquare) EXPECT_EQ(point_in_polygon(v, sq), Containment::OnBoundary);
  for (const auto& v : kDiamond) EXPECT_EQ(point_in_polygon(v, Polygon(kDiamond)), Containment::OnBoundary);
}

TEST(PointInPolygon, InvalidPolygonsAndIndexClash) {
  EXPECT_THROW(Polygon(std::vector<Point2>{{0, 0}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(Polygon(std::vector<Point2>{{0, 0}, {0, 0}, {1, 1}}), std::invalid_argument);
  const Polygon sq(kSquare);
  EXPECT_THROW(point_in_polygon(make_indexed<2>({5, 5}, 2), sq), ContractViolation);
}

TEST(PointInPolygon, FigureTwoCrossingClasses) {
  // A dart: the ray from t crosses twice, from s once, from r never.
  const std::vector<Point2> dart{{0, 0}, {4, 2}, {8, 0}, {4, 6}};
  const Polygon poly(dart);
  auto crossings = [&](const Point2& p) {
    return count_crossings(make_indexed<2>(p, poly.next_point_id()), poly).crossings;
  };
  EXPECT_EQ(crossings({3, -1}), 2u);
  EXPECT_EQ(point_in_polygon(Point2{3, -1}, poly), Containment::Outside);
  EXPECT_EQ(crossings({3, 2}), 1u);
  EXPECT_EQ(point_in_polygon(Point2{3, 2}, poly), Containment::Inside);
  EXPECT_EQ(crossings({9, 0}), 0u);
  EXPECT_EQ(point_in_polygon(Point2{9, 0}, poly), Containment::Outside);
}

TEST(PointInPolygon, NestedHoleThroughParity) {
  // Outer square and an inner square joined by a zero-width bridge.
  const std::vector<Point2> ring{{0, 0}, {6, 0}, {6, 6}, {0, 6}, {0, 3}, {2, 3}, {2, 4}, {4, 4}, {4, 2}, {2, 2}, {2, 3}, {0, 3}};
  // Consecutive duplicates are illegal, but the bridge revisits values
  // non-consecutively, which the parity rule handles.
  const Polygon poly(ring);
  EXPECT_EQ(point_in_polygon(Point2{3, 3}, poly), Containment::Outside);
  EXPECT_EQ(point_in_polygon(Point2{1, 1}, poly), Containment::Inside);
  EXPECT_EQ(point_in_polygon(Point2{5, 3}, poly), Containment::Inside);
  EXPECT_EQ(point_in_polygon(Point2{7, 3}, poly), Containment::Outside);
  for (const auto& p : {Point2{3, 3}, Point2{1, 1}, Point2{5, 3}, Point2{3, 1}, Point2{3, 5}})
    EXPECT_EQ(point_in_polygon(p, poly), oracle::concrete_delta_oracle_pip(p, ring));
}

TEST(PointInPolygon, RotationAndReversalInvariance) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    auto poly = random_polygon(rng, 4);
    const Polygon base(poly);
    auto rotated = poly;
    std::rotate(rotated.begin(), rotated.begin() + sos::testing::random_int(rng, 0, poly.size() - 1), rotated.end());
    auto reversed = poly;
    std::reverse(reversed.begin(), reversed.end());
    const Polygon rot(rotated), rev(reversed);
    for (int x = -1; x <= 5; ++x)
      for (int y = -1; y <= 5; ++y) {
        const Point2 p{x, y};
        const auto c = point_in_polygon(p, base);
        ASSERT_EQ(c, point_in_polygon(p, rot));
        ASSERT_EQ(c, point_in_polygon(p, rev));
      }
  }
}

TEST(PointInPolygon, MatchesConcreteOracleOnDegenerateGrid) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto poly = random_polygon(rng, 4);
    const Polygon p(poly);
    for (int x = 0; x <= 4; ++x)
      for (int y = 0; y <= 4; ++y) {
        const Point2 pt{x, y};
        ASSERT_EQ(point_in_polygon(pt, p), oracle::concrete_delta_oracle_pip(pt, poly));
      }
  }
}

TEST(PointInPolygon, VerticalSegmentWithoutCrossingKeepsClass) {
  // Simple polygon (a comb); two points on a vertical segment that crosses
  // no edge must agree.
  const std::vector<Point2> comb{{0, 0}, {6, 0}, {6, 4}, {5, 4}, {5, 1}, {4, 1}, {4, 4}, {3, 4}, {3, 1}, {2, 1}, {2, 4}, {0, 4}};
  const Polygon poly(comb);
  for (int x2 = 1; x2 <= 11; ++x2) {
    const Rational x = q(x2, 2);
    EXPECT_EQ(point_in_polygon(Point2{x, q(1, 4)}, poly), point_in_polygon(Point2{x, q(3, 4)}, poly)) << x;
  }
}

TEST(Polyline, Construction) {
  const Polyline open(std::vector<Point2>{{0, 0}, {1, 0}});
  EXPECT_FALSE(open.closed());
  EXPECT_EQ(open.edge_count(), 1u);
  const Polyline closed(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 0}});
  EXPECT_TRUE(closed.closed());
  EXPECT_EQ(closed.vertices().size(), 3u);
  EXPECT_EQ(closed.edge_count(), 3u);
  EXPECT_THROW(Polyline(std::vector<Point2>{{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Polyline(std::vector<Point2>{{0, 0}, {1, 0}, {0, 0}, {2, 2}}), std::invalid_argument);
}

TEST(PolylineIntersection, Examples) {
  const std::vector<Point2> a{{-1, 0}, {1, 0}}, b{{0, -1}, {0, 1}};
  EXPECT_EQ(polyline_intersection_count(Polyline(a, 0), Polyline(b, 2)), 1u);
  const std::vector<Point2> c{{2, 0}, {3, 5}};
  EXPECT_EQ(polyline_intersection_count(Polyline(a, 0), Polyline(c, 2)), 0u);

  // Red vertex on a blue edge: frozen from the concrete oracle.
  const std::vector<Point2> l0{{0, 0}, {2, 0}}, l1{{1, 0}, {1, 1}, {2, 1}};
  EXPECT_EQ(oracle::concrete_polyline_intersections(l0, false, l1, false), 1u);
  EXPECT_EQ(polyline_intersection_count(Polyline(l0, 0), Polyline(l1, 2)), 1u);
  EXPECT_THROW(polyline_intersection_count(Polyline(l0, 0), Polyline(l1, 1)), ContractViolation);
}

TEST(PolylineIntersection, SymmetricAndMatchesOracle) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    auto make = [&](int n) {
      std::vector<Point2> pts;
      while (static_cast<int>(pts.size()) < n) {
        const Point2 p{sos::testing::random_int(rng, 0, 3), sos::testing::random_int(rng, 0, 3)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
      }
      return pts;
    };
    const auto a = make(static_cast<int>(sos::testing::random_int(rng, 2, 5)));
    const auto b = make(static_cast<int>(sos::testing::random_int(rng, 2, 5)));
    const Polyline la(a, 0), lb(b, a.size());
    const auto n = polyline_intersection_count(la, lb);
    ASSERT_EQ(n, polyline_intersection_count(lb, la));
    ASSERT_EQ(n, oracle::concrete_polyline_intersections(a, false, b, false));
  }
}
