#include <gtest/gtest.h>

#include "cubepath/geometry.hpp"
#include "cubepath/symmetry.hpp"
#include "test_support.hpp"

namespace cubepath {
namespace {

using testing::uniform;

TEST(Rotate, QuarterTurnExamples) {
  EXPECT_EQ(rotate_about({4, 0}, {3, 1}, Turn::Ccw), (Point{4, 2}));
  EXPECT_EQ(rotate_about({0, 0}, {1, 0}, Turn::Cw), (Point{1, 1}));
  for (Turn turn : {Turn::Ccw, Turn::Cw}) EXPECT_EQ(rotate_about({2.5, -7}, {2.5, -7}, turn), (Point{2.5, -7}));
}

TEST(Rotate, MatchesTranslatedRotationMatrix) {
  // Translate the pivot to the origin, apply the rotation matrix, translate back.
  for (int i = 0; i < 200; ++i) {
    const Point p{uniform(-5, 5), uniform(-5, 5)};
    const Point c{uniform(-5, 5), uniform(-5, 5)};
    const Point d = p - c;
    EXPECT_POINT_NEAR(rotate_about(p, c, Turn::Ccw), (c + Point{-d.y, d.x}), 1e-12);
    EXPECT_POINT_NEAR(rotate_about(p, c, Turn::Cw), (c + Point{d.y, -d.x}), 1e-12);
  }
}

TEST(Rotate, PreservesDistanceToPivotAndInverts) {
  for (int i = 0; i < 1000; ++i) {
    const Point p{uniform(-10, 10), uniform(-10, 10)};
    const Point c{uniform(-10, 10), uniform(-10, 10)};
    for (Turn turn : {Turn::Ccw, Turn::Cw}) {
      const Point q = rotate_about(p, c, turn);
      EXPECT_NEAR(distance(q, c), distance(p, c), 1e-12);
      EXPECT_POINT_NEAR(rotate_about(q, c, inverse(turn)), p, 1e-12);
    }
  }
}

TEST(Reflect, Examples) {
  EXPECT_POINT_NEAR(reflect_axis({0.3, -0.5}, Axis::vertical(2)), (Point{3.7, -0.5}), 1e-15);
  EXPECT_EQ(reflect_axis({2, 9}, Axis::vertical(2)), (Point{2, 9}));
  EXPECT_EQ(reflect_axis({9, -2}, Axis::horizontal(-2)), (Point{9, -2}));
  const Point p{0.123, -0.456};
  EXPECT_POINT_NEAR(reflect_axis(reflect_axis(p, Axis::horizontal(3)), Axis::horizontal(3)), p, 1e-15);
}

TEST(Reflect, ThenRotateGivesRurImage) {
  for (int i = 0; i < 1000; ++i) {
    const Point t{uniform(-1, 1), uniform(-1, 1)};
    const Point img = rotate_about(reflect_axis(t, Axis::vertical(2)), {3, 1}, Turn::Ccw);
    EXPECT_POINT_NEAR(img, (Point{4 - t.y, 2 - t.x}), 1e-12);
  }
}

TEST(Angle, Examples) {
  EXPECT_NEAR(angle_deg({0, 0}, {1, 0}, {0, 1}), 90.0, 1e-12);
  EXPECT_NEAR(angle_deg({0, 0}, {1, 0}, {-1, 1}), 135.0, 1e-12);
  EXPECT_NEAR(angle_deg({0, 0}, {1, 0}, {-1, 0}), 180.0, 1e-12);
  EXPECT_NEAR(angle_deg({0, 0}, {1, 0}, {2, 0}), 0.0, 1e-12);
  EXPECT_THROW(angle_deg({1, 1}, {1, 1}, {0, 0}), DegenerateAngle);
  EXPECT_THROW(angle_deg({1, 1}, {0, 0}, {1, 1}), DegenerateAngle);
}

TEST(Polygon, ConstructionValidates) {
  EXPECT_THROW(ConvexPolygon({{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);          // clockwise
  EXPECT_THROW(ConvexPolygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}), std::invalid_argument);  // reflex
  EXPECT_TRUE(ConvexPolygon({{0, 0}, {1, 0}}).empty());
  EXPECT_TRUE(ConvexPolygon({{0, 0}, {0, 0}, {1e-13, 0}}).empty());
  const ConvexPolygon p({{0, 0}, {1, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(p.size(), 3u);
}

TEST(Area, Examples) {
  EXPECT_DOUBLE_EQ(area(base_face()), 4.0);
  EXPECT_EQ(area(ConvexPolygon{}), 0.0);
  EXPECT_DOUBLE_EQ(area(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}})), 0.5);
}

TEST(Clip, Examples) {
  const ConvexPolygon left = clip(base_face(), HalfPlane{1, 0, 0});  // x < 0
  EXPECT_DOUBLE_EQ(area(left), 2.0);
  for (const Point& v : left.vertices()) EXPECT_LE(v.x, 0.0);

  const ConvexPolygon same = clip(base_face(), HalfPlane{1, 0, 5});
  EXPECT_EQ(same.vertices(), base_face().vertices());

  EXPECT_TRUE(clip(base_face(), HalfPlane{1, 0, -5}).empty());
  EXPECT_EQ(area(clip(base_face(), HalfPlane{1, 0, -5})), 0.0);
}

TEST(Clip, DegenerateHalfPlanes) {
  EXPECT_EQ(clip(base_face(), HalfPlane{0, 0, 1}).vertices(), base_face().vertices());
  EXPECT_TRUE(clip(base_face(), HalfPlane{0, 0, 0}).empty());
  EXPECT_TRUE(clip(base_face(), HalfPlane{0, 0, -1}).empty());
}

TEST(Clip, IdempotentAndShrinking) {
  for (int i = 0; i < 500; ++i) {
    const HalfPlane h{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
    const ConvexPolygon p = clip(clip(base_face(), HalfPlane{uniform(-1, 1), uniform(-1, 1), uniform(0, 1)}),
                                 HalfPlane{uniform(-1, 1), uniform(-1, 1), uniform(0, 1)});
    const ConvexPolygon once = clip(p, h);
    const ConvexPolygon twice = clip(once, h);
    ASSERT_EQ(once.size(), twice.size());
    for (std::size_t k = 0; k < once.size(); ++k) EXPECT_POINT_NEAR(once.vertices()[k], twice.vertices()[k], 1e-9);
    EXPECT_LE(area(once), area(p) + 1e-15);
  }
}

TEST(Intersect, OverlappingSquares) {
  const auto a = ConvexPolygon::axis_box(0, 0, 2, 2);
  const auto b = ConvexPolygon::axis_box(1, 1, 3, 3);
  EXPECT_NEAR(area(intersect(a, b)), 1.0, 1e-12);
  EXPECT_TRUE(intersect(a, ConvexPolygon::axis_box(5, 5, 6, 6)).empty());
}

TEST(Polygon, Containment) {
  const ConvexPolygon f = base_face();
  EXPECT_TRUE(f.contains_strictly({0, 0}));
  EXPECT_FALSE(f.contains_strictly({1, 0}));
  EXPECT_TRUE(f.contains({1, 0}));
  EXPECT_FALSE(f.contains({1.1, 0}));
  EXPECT_POINT_NEAR(f.centroid(), (Point{0, 0}), 1e-15);
}

TEST(HalfPlaneTest, SignedDistanceAndBoundary) {
  const HalfPlane h{3, 4, 10};
  EXPECT_NEAR(h.signed_distance({0, 0}), -2.0, 1e-15);
  EXPECT_NEAR(h.value(h.boundary_point()), 0.0, 1e-12);
  EXPECT_TRUE(h.contains_strictly({0, 0}));
  EXPECT_FALSE(h.contains_strictly(h.boundary_point()));
}

TEST(SegmentDistance, Examples) {
  EXPECT_NEAR(segment_point_distance({0, 0}, {2, 0}, {1, 1}), 1.0, 1e-15);
  EXPECT_NEAR(segment_point_distance({0, 0}, {2, 0}, {3, 0}), 1.0, 1e-15);
  EXPECT_NEAR(segment_point_distance({0, 0}, {0, 0}, {3, 4}), 5.0, 1e-15);
}

TEST(Symmetry, GroupStructure) {
  const auto& g = square_symmetries();
  EXPECT_EQ(g.front(), Symmetry{});
  for (const Symmetry& a : g) {
    EXPECT_EQ(compose(a, a.inverse()), Symmetry{});
    for (const Symmetry& b : g) {
      EXPECT_NE(std::find(g.begin(), g.end(), compose(a, b)), g.end());
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) EXPECT_NE(g[i], g[j]);
}

TEST(Symmetry, CanonicalTriangle) {
  EXPECT_TRUE(in_canonical_triangle({-0.5, -0.8}));
  EXPECT_TRUE(in_canonical_triangle({-0.5, -0.5}));
  EXPECT_FALSE(in_canonical_triangle({-0.8, -0.5}));
  EXPECT_FALSE(in_canonical_triangle({0.1, -0.5}));
  for (int i = 0; i < 1000; ++i) {
    const Point s = testing::interior_point();
    EXPECT_TRUE(in_canonical_triangle(to_canonical_triangle(s).apply(s)));
  }
}

}  // namespace
}  // namespace cubepath
