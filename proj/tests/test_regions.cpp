#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "cubepath/regions.hpp"
#include "cubepath/solver.hpp"
#include "cubepath/symmetry.hpp"
#include "test_support.hpp"

namespace cubepath {
namespace {

using testing::interior_point;
using testing::uniform;

RollSequence seq(const char* s) { return RollSequence::parse(s); }

std::vector<RollSequence> seqs(std::initializer_list<const char*> names) {
  std::vector<RollSequence> out;
  for (const char* n : names) out.push_back(RollSequence::parse(n));
  return out;
}

TEST(HalfPlaneFor, LinearizesTheLengthDifference) {
  for (int i = 0; i < 500; ++i) {
    const Point s = interior_point();
    const Point t{uniform(-3, 3), uniform(-3, 3)};
    for (const RollSequence& q4 : four_face_sequences()) {
      for (const RollSequence& q3 : three_face_sequences()) {
        const HalfPlane h = halfplane_for(q4, q3, s);
        EXPECT_NEAR(h.value(t), squared_length(s, t, q4) - squared_length(s, t, q3), 1e-9);
      }
    }
  }
}

TEST(HalfPlaneFor, UluAgainstLlPivotsAboutFixedPoint) {
  const Point s{-0.5, -0.5};
  const HalfPlane h = halfplane_for(seq("ULU"), seq("LL"), s);
  EXPECT_NEAR(h.value({-3, 1}), 0.0, 1e-12);
  EXPECT_NEAR(-h.alpha / h.beta, 0.5, 1e-12);
  EXPECT_NEAR(-h.alpha / h.beta, (s.y + s.x) / (s.y - s.x - 2), 1e-12);
  EXPECT_TRUE(h.contains_strictly({-3, 2}));  // the solution set lies above the line
  EXPECT_TRUE(clip(base_face(), h).empty());
}

TEST(HalfPlaneFor, DldAgainstLlOnTheDiagonalIsTheBottomEdge) {
  for (double k : {-0.9, -0.5, -0.1, 0.3}) {
    const HalfPlane h = halfplane_for(seq("DLD"), seq("LL"), {k, k});
    EXPECT_NEAR(h.alpha / h.normal_length(), 0.0, 1e-12);
    EXPECT_NEAR(h.boundary_point().y, -1.0, 1e-12);
    EXPECT_NEAR(h.value({-3, -1}), 0.0, 1e-12);
  }
  const Point s{-0.2, -0.7};
  const HalfPlane h = halfplane_for(seq("DLD"), seq("LL"), s);
  EXPECT_NEAR(-h.alpha / h.beta, (s.x - s.y) / (s.x + s.y + 2), 1e-12);
}

TEST(HalfPlaneFor, SelfComparisonIsEmpty) {
  const HalfPlane h = halfplane_for(seq("RUR"), seq("RUR"), {0.1, 0.2});
  EXPECT_TRUE(h.degenerate());
  EXPECT_TRUE(clip(base_face(), h).empty());
}

TEST(RegionPolygon, Examples) {
  for (const RollSequence& q : four_face_sequences()) EXPECT_TRUE(region_polygon({0, 0}, q).empty());
  const ConvexPolygon drd = region_polygon({0, -0.9}, seq("DRD"));
  EXPECT_FALSE(drd.empty());
  EXPECT_TRUE(drd.contains_strictly({0.98, -0.8}));
  EXPECT_TRUE(region_polygon({-0.5, -0.5}, seq("DLD")).empty());
  EXPECT_THROW(region_polygon({0, 0}, seq("RR")), std::invalid_argument);
}

TEST(RegionPolygon, MatchesDirectComparisonOfLengths) {
  for (int i = 0; i < 300; ++i) {
    const Point s = interior_point();
    for (const RollSequence& q4 : four_face_sequences()) {
      const ConvexPolygon poly = region_polygon(s, q4);
      for (const Point& v : poly.vertices()) EXPECT_TRUE(base_face().contains(v, 1e-12));
      for (int j = 0; j < 50; ++j) {
        const Point t = interior_point();
        double best3 = INFINITY;
        for (const RollSequence& q3 : three_face_sequences()) best3 = std::min(best3, squared_length(s, t, q3));
        const double gap = best3 - squared_length(s, t, q4);
        if (std::abs(gap) < 1e-7) continue;
        EXPECT_EQ(gap > 0, !poly.empty() && poly.contains(t, 0.0)) << q4.to_string();
      }
    }
  }
}

TEST(Feasible, Examples) {
  EXPECT_EQ(feasible_sequences({-0.5, -0.8}), seqs({"RUR", "LUL", "DRD", "DLD"}));
  EXPECT_EQ(feasible_sequences({-0.5, -0.5}), seqs({"LUL", "DRD"}));
  EXPECT_TRUE(feasible_sequences({0, 0}).empty());
}

TEST(Feasible, EquivariantUnderSymmetries) {
  for (int i = 0; i < 500; ++i) {
    const Point s = interior_point();
    const auto base = feasible_sequences(s);
    EXPECT_EQ(base.size(), 4u);
    for (const Symmetry& g : square_symmetries()) {
      std::vector<RollSequence> mapped;
      for (const auto& q : base) mapped.push_back(apply(g, q));
      auto sorted = [](std::vector<RollSequence> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      EXPECT_EQ(sorted(mapped), sorted(feasible_sequences(g.apply(s))));
    }
  }
}

TEST(Regions, OnlyFeasibleSequencesHaveRegions) {
  for (int i = 0; i < 1000; ++i) {
    const Point s = interior_point();
    const auto feasible = feasible_sequences(s);
    for (const RollSequence& q : region_set(s).nonempty()) {
      EXPECT_NE(std::find(feasible.begin(), feasible.end(), q), feasible.end()) << q.to_string();
    }
  }
}

TEST(RegionSetTest, CentroidIsEmpty) {
  const RegionSet r = region_set({0, 0});
  EXPECT_TRUE(r.nonempty().empty());
  EXPECT_EQ(r.union_area, 0.0);
  EXPECT_EQ(r.probability, 0.0);
}

TEST(RegionSetTest, DiagonalSourcesHaveTwoOffDiagonalRegions) {
  for (double k : {-0.95, -0.5, -0.2, 0.4, 0.8}) {
    for (double sy : {k, -k}) {
      const Point s{k, sy};
      const RegionSet r = region_set(s);
      const auto ne = r.nonempty();
      EXPECT_EQ(ne.size(), 2u);
      for (const RollSequence& q : ne) {
        // The base-face corner among the polygon's vertices.
        int anchors = 0;
        for (const Point& v : r.polygon(q).vertices()) {
          if (std::abs(std::abs(v.x) - 1) < 1e-9 && std::abs(std::abs(v.y) - 1) < 1e-9) {
            ++anchors;
            EXPECT_LT(v.x * v.y * s.x * s.y, 0.0) << q.to_string();
          }
        }
        EXPECT_EQ(anchors, 1) << q.to_string();
      }
    }
  }
}

TEST(RegionSetTest, UnionAreaBounds) {
  for (int i = 0; i < 500; ++i) {
    const RegionSet r = region_set(interior_point());
    double sum = 0.0;
    std::vector<ConvexPolygon> polys;
    for (const auto& [q, p] : r.polygons) {
      sum += area(p);
      if (!p.empty()) polys.push_back(p);
    }
    EXPECT_LE(r.union_area, sum + 1e-12);
    EXPECT_GE(r.union_area, 0.0);
    EXPECT_LE(r.union_area, 4.0);
    EXPECT_NEAR(r.probability, r.union_area / 4, 1e-15);
    if (polys.size() == 1) {
      EXPECT_NEAR(r.union_area, area(polys[0]), 1e-12);
    }
  }
}

TEST(UnionArea, MatchesGridCount) {
  const std::vector<ConvexPolygon> polys = {ConvexPolygon::axis_box(-1, -1, 0.5, 0.5),
                                            ConvexPolygon::axis_box(0, 0, 1, 1),
                                            ConvexPolygon({{-1, 0}, {0, -1}, {1, 1}})};
  // Midpoint-rule count on a 1000 x 1000 grid.
  const int n = 1000;
  long long hits = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Point p{-1 + (i + 0.5) * 2.0 / n, -1 + (j + 0.5) * 2.0 / n};
      hits += std::any_of(polys.begin(), polys.end(), [&](const ConvexPolygon& q) { return q.contains(p, 0.0); });
    }
  }
  EXPECT_NEAR(union_area(polys), 4.0 * hits / (double(n) * n), 0.01);
  EXPECT_NEAR(union_area({ConvexPolygon::axis_box(0, 0, 1, 1), ConvexPolygon::axis_box(0, 0, 1, 1)}), 1.0, 1e-12);
  EXPECT_EQ(union_area({}), 0.0);
}

TEST(DiagonalExclusion, Examples) {
  EXPECT_TRUE(diagonal_exclusion_check({-0.5, -0.5}, 201));
  EXPECT_TRUE(diagonal_exclusion_check({-0.99, -0.99}, 201));
  EXPECT_TRUE(diagonal_exclusion_check({0.7, -0.7}, 201));
  EXPECT_THROW(diagonal_exclusion_check({-0.5, -0.4}), DomainError);
}

TEST(DiagonalExclusion, OneOfTheTwoInequalitiesHolds) {
  // For s on the hypotenuse and a diagonal target x: (s-1)(x-3) < 4 or (s+3)(x+1) < 4.
  EXPECT_FALSE((-0.5 - 1) * (0 - 3) < 4);
  EXPECT_TRUE((-0.5 + 3) * (0 + 1) < 4);
  for (int i = 0; i < 10000; ++i) {
    const double s = uniform(-1, 0), x = uniform(-1, 1);
    EXPECT_TRUE((s - 1) * (x - 3) < 4 || (s + 3) * (x + 1) < 4);
  }
}

TEST(Diagonal, Predicate) {
  EXPECT_TRUE(on_diagonal({0.3, -0.3}));
  EXPECT_TRUE(on_diagonal({-0.3, -0.3 + 1e-10}));
  EXPECT_FALSE(on_diagonal({-0.3, -0.3 + 1e-8}));
}

}  // namespace
}  // namespace cubepath
